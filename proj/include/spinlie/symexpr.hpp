#pragma once

// Scalar-field expressions over a four-coordinate chart.
//
// Grammar (recursive descent):
//   expr    := term { ("+"|"-") term }
//   term    := unary { ("*"|"/") unary }
//   unary   := "-" unary | power
//   power   := primary [ "^" unary ]
//   primary := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
//
// so "^" binds tighter than unary minus ("-t^2" is -(t^2)) and is
// right-associative. No implicit multiplication: "2x" is a syntax error. Functions: sin cos
// tan sinh cosh tanh exp log sqrt atan; the constant pi.

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spinlie/jet.hpp"

namespace spinlie {

using CoordinateNames = std::array<std::string, 4>;

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Atan };

const char* func_name(Func f);
bool is_reserved_name(std::string_view name);

class ScalarExpr {
 public:
  enum class Kind { Number, Coordinate, Pi, Add, Sub, Mul, Div, Pow, Neg, Call };

  struct Node {
    Kind kind;
    double number = 0.0;
    int coordinate = -1;
    std::string name;  // coordinate name, for printing
    Func func = Func::Sin;
    std::shared_ptr<const Node> lhs, rhs;  // rhs unused by unary nodes
  };

  // The zero constant.
  ScalarExpr();

  static ScalarExpr number(double v);
  static ScalarExpr coordinate(int index, std::string name);
  static ScalarExpr call(Func f, const ScalarExpr& arg);

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);
  friend ScalarExpr pow(const ScalarExpr& a, const ScalarExpr& b);

  Kind kind() const { return root_->kind; }
  const Node& root() const { return *root_; }
  bool is_constant_zero() const { return root_->kind == Kind::Number && root_->number == 0.0; }

  // Value, gradient and Hessian at p. Throws DomainError naming the failing
  // node (log/sqrt of non-positive, division by zero, bad power base).
  Jet2 eval_jet(const Point& p) const;
  double eval(const Point& p) const;

  // Fully parenthesised, 17 significant digits; parse(to_string()) gives back
  // a structurally equal tree.
  std::string to_string() const;

  friend bool structurally_equal(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr parse(std::string_view src, const CoordinateNames& chart);

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

// Throws SyntaxError (with byte offset) or UnknownIdentifier.
ScalarExpr parse(std::string_view src, const CoordinateNames& chart);

Jet2 eval_jet(const ScalarExpr& e, const Point& p);

}  // namespace spinlie
