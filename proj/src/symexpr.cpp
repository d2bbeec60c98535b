#include "spinlie/symexpr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

using Node = ScalarExpr::Node;
using Kind = ScalarExpr::Kind;
using NodePtr = std::shared_ptr<const Node>;

struct FuncEntry {
  const char* name;
  Func func;
};

constexpr FuncEntry kFuncs[] = {
    {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan}, {"sinh", Func::Sinh},
    {"cosh", Func::Cosh}, {"tanh", Func::Tanh}, {"exp", Func::Exp}, {"log", Func::Log},
    {"sqrt", Func::Sqrt}, {"atan", Func::Atan},
};

const FuncEntry* find_func(std::string_view name) {
  for (const auto& f : kFuncs)
    if (name == f.name) return &f;
  return nullptr;
}

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->number = v;
  return n;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_unary(Kind k, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  return n;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Number:
      if (n.number < 0 || std::signbit(n.number)) {
        out += "(-" + format_number(-n.number) + ")";
      } else {
        out += format_number(n.number);
      }
      return;
    case Kind::Coordinate:
      out += n.name;
      return;
    case Kind::Pi:
      out += "pi";
      return;
    case Kind::Neg:
      out += "(-";
      print(*n.lhs, out);
      out += ")";
      return;
    case Kind::Call:
      out += func_name(n.func);
      out += "(";
      print(*n.lhs, out);
      out += ")";
      return;
    default: {
      const char* op = n.kind == Kind::Add   ? " + "
                       : n.kind == Kind::Sub ? " - "
                       : n.kind == Kind::Mul ? " * "
                       : n.kind == Kind::Div ? " / "
                                             : " ^ ";
      out += "(";
      print(*n.lhs, out);
      out += op;
      print(*n.rhs, out);
      out += ")";
    }
  }
}

std::string describe(const Node& n) {
  std::string s;
  print(n, s);
  return s;
}

// ---- parser ---------------------------------------------------------------

class Parser {
 public:
  Parser(std::string_view src, const CoordinateNames& chart) : src_(src), chart_(chart) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      skip_ws();
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_unary(Kind::Neg, unary());
    return power();
  }

  // The exponent may carry its own sign ("2^-t") and recursing through unary()
  // makes "^" right-associative.
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make_binary(Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw SyntaxError("malformed exponent", pos_);
    }
    const std::string text(src_.substr(start, pos_ - start));
    const double v = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(v)) throw SyntaxError("number out of range", start);
    // "2x" would otherwise read as an implicit product
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      throw SyntaxError("implicit multiplication is not supported", pos_);
    return make_number(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);

    skip_ws();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';
    if (const FuncEntry* f = find_func(name)) {
      if (!call) throw SyntaxError("expected '(' after function '" + std::string(name) + "'", pos_);
      ++pos_;
      NodePtr arg = expr();
      expect(')');
      auto n = std::make_shared<Node>();
      n->kind = Kind::Call;
      n->func = f->func;
      n->lhs = std::move(arg);
      return n;
    }
    if (call) throw SyntaxError("'" + std::string(name) + "' is not a function", start);
    for (int i = 0; i < 4; ++i) {
      if (chart_[i] == name) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Coordinate;
        n->coordinate = i;
        n->name = std::string(name);
        return n;
      }
    }
    if (name == "pi") {
      auto n = std::make_shared<Node>();
      n->kind = Kind::Pi;
      return n;
    }
    throw UnknownIdentifier(std::string(name));
  }

  std::string_view src_;
  const CoordinateNames& chart_;
  std::size_t pos_ = 0;
};

// ---- evaluation -----------------------------------------------------------

Jet2 integer_power(Jet2 base, long n) {
  Jet2 result(1.0);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool is_constant(const Jet2& j) {
  for (double g : j.grad)
    if (g != 0.0) return false;
  for (double h : j.hess_packed)
    if (h != 0.0) return false;
  return true;
}

Jet2 eval_node(const Node& n, const Point& p) {
  switch (n.kind) {
    case Kind::Number:
      return Jet2(n.number);
    case Kind::Pi:
      return Jet2(std::numbers::pi);
    case Kind::Coordinate:
      return Jet2::variable(n.coordinate, p[n.coordinate]);
    case Kind::Neg:
      return -eval_node(*n.lhs, p);
    case Kind::Add:
      return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case Kind::Sub:
      return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case Kind::Mul:
      return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case Kind::Div: {
      const Jet2 den = eval_node(*n.rhs, p);
      if (den.value == 0.0) throw DomainError("division by zero in " + describe(n));
      return eval_node(*n.lhs, p) / den;
    }
    case Kind::Pow: {
      const Jet2 base = eval_node(*n.lhs, p);
      const Jet2 expo = eval_node(*n.rhs, p);
      if (is_constant(expo) && expo.value == std::round(expo.value) && std::abs(expo.value) <= 1024) {
        const long k = static_cast<long>(expo.value);
        if (k >= 0) return integer_power(base, k);
        if (base.value == 0.0) throw DomainError("zero base with negative exponent in " + describe(n));
        return Jet2(1.0) / integer_power(base, -k);
      }
      if (!(base.value > 0.0)) throw DomainError("non-positive base with non-integer exponent in " + describe(n));
      return exp(expo * log(base));
    }
    case Kind::Call: {
      const Jet2 u = eval_node(*n.lhs, p);
      switch (n.func) {
        case Func::Sin: return sin(u);
        case Func::Cos: return cos(u);
        case Func::Tan:
          if (std::abs(std::cos(u.value)) < 1e-300) throw DomainError("tan pole in " + describe(n));
          return tan(u);
        case Func::Sinh: return sinh(u);
        case Func::Cosh: return cosh(u);
        case Func::Tanh: return tanh(u);
        case Func::Exp: return exp(u);
        case Func::Log:
          if (!(u.value > 0.0)) throw DomainError("log of non-positive value in " + describe(n));
          return log(u);
        case Func::Sqrt:
          // the derivative blows up at zero, so zero is outside the domain too
          if (!(u.value > 0.0)) throw DomainError("sqrt of non-positive value in " + describe(n));
          return sqrt(u);
        case Func::Atan: return atan(u);
      }
    }
  }
  throw DomainError("corrupt expression node");
}

bool nodes_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Number: return a.number == b.number;
    case Kind::Coordinate: return a.coordinate == b.coordinate;
    case Kind::Pi: return true;
    case Kind::Neg: return nodes_equal(*a.lhs, *b.lhs);
    case Kind::Call: return a.func == b.func && nodes_equal(*a.lhs, *b.lhs);
    default: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
  }
}

}  // namespace

const char* func_name(Func f) {
  for (const auto& e : kFuncs)
    if (e.func == f) return e.name;
  return "?";
}

bool is_reserved_name(std::string_view name) { return name == "pi" || find_func(name) != nullptr; }

ScalarExpr::ScalarExpr() : root_(make_number(0.0)) {}

ScalarExpr ScalarExpr::number(double v) { return ScalarExpr(make_number(v)); }

ScalarExpr ScalarExpr::coordinate(int index, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coordinate;
  n->coordinate = index;
  n->name = std::move(name);
  return ScalarExpr(n);
}

ScalarExpr ScalarExpr::call(Func f, const ScalarExpr& arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->func = f;
  n->lhs = arg.root_;
  return ScalarExpr(n);
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(make_binary(Kind::Add, a.root_, b.root_));
}
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(make_binary(Kind::Sub, a.root_, b.root_));
}
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(make_binary(Kind::Mul, a.root_, b.root_));
}
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(make_binary(Kind::Div, a.root_, b.root_));
}
ScalarExpr operator-(const ScalarExpr& a) { return ScalarExpr(make_unary(Kind::Neg, a.root_)); }
ScalarExpr pow(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(make_binary(Kind::Pow, a.root_, b.root_));
}

Jet2 ScalarExpr::eval_jet(const Point& p) const { return eval_node(*root_, p); }

double ScalarExpr::eval(const Point& p) const { return eval_node(*root_, p).value; }

std::string ScalarExpr::to_string() const {
  std::string s;
  print(*root_, s);
  return s;
}

bool structurally_equal(const ScalarExpr& a, const ScalarExpr& b) { return nodes_equal(*a.root_, *b.root_); }

ScalarExpr parse(std::string_view src, const CoordinateNames& chart) {
  bool blank = true;
  for (char c : src)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw SyntaxError("empty expression", 0);
  return ScalarExpr(Parser(src, chart).parse_all());
}

Jet2 eval_jet(const ScalarExpr& e, const Point& p) { return e.eval_jet(p); }

}  // namespace spinlie
