#include <cmath>
#include <string>

#include "doctest.h"
#include "spinlie/errors.hpp"
#include "spinlie/symexpr.hpp"
#include "support/gen.hpp"
#include "support/random_expr.hpp"

using namespace spinlie;
using spinlie::testing::Gen;
using spinlie::testing::random_expr;

namespace {

const CoordinateNames txyz{"t", "x", "y", "z"};

ScalarExpr P(const std::string& s) { return parse(s, txyz); }

std::size_t syntax_offset(const std::string& s) {
  try {
    P(s);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse examples") {
  const ScalarExpr e = P("t^2 - x*x");
  CHECK(e.kind() == ScalarExpr::Kind::Sub);
  CHECK(e.root().lhs->kind == ScalarExpr::Kind::Pow);
  CHECK(e.root().rhs->kind == ScalarExpr::Kind::Mul);

  const ScalarExpr n = P("-t^2");
  CHECK(n.kind() == ScalarExpr::Kind::Neg);
  CHECK(n.root().lhs->kind == ScalarExpr::Kind::Pow);
  CHECK(n.eval({3, 0, 0, 0}) == -9.0);

  CHECK(syntax_offset("sin(") == 4);
  CHECK(syntax_offset("") == 0);
  CHECK(syntax_offset("2x") == 1);
  CHECK(syntax_offset("t +* x") == 3);
  CHECK(syntax_offset("(t") == 2);
  CHECK(syntax_offset("t)") == 1);
  CHECK(syntax_offset("t(2)") == 0);
  CHECK(syntax_offset("sin t") == 4);
  CHECK(syntax_offset("1e") == 2);
  CHECK_THROWS_AS(P("w + 1"), UnknownIdentifier);
  try {
    P("t * foo");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "foo");
  }
}

TEST_CASE("precedence and associativity") {
  const Point p{2, 3, 0, 0};
  CHECK(P("2^3^2").eval(p) == 512.0);
  CHECK(P("8/2/2").eval(p) == 2.0);
  CHECK(P("1-2-3").eval(p) == -4.0);
  CHECK(P("2^-1").eval(p) == 0.5);
  CHECK(P("--t").eval(p) == 2.0);
  CHECK(P("-t*x").eval(p) == -6.0);
  CHECK(P("2*pi").eval(p) == doctest::Approx(2 * M_PI));
  CHECK(P("1.5e2 + .5").eval(p) == 150.5);
}

TEST_CASE("eval_jet examples") {
  const Jet2 a = P("t*x").eval_jet({2, 3, 0, 0});
  CHECK(a.value == 6.0);
  CHECK(a.grad == std::array<double, 4>{3, 2, 0, 0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a.hess(i, j) == ((i == 0 && j == 1) || (i == 1 && j == 0) ? 1.0 : 0.0));

  const Jet2 b = P("sin(t)").eval_jet({0, 5, 5, 5});
  CHECK(b.value == 0.0);
  CHECK(b.grad[0] == 1.0);
  CHECK(b.hess(0, 0) == 0.0);

  const Jet2 c = P("t^2 - x^2").eval_jet({1, 1, 0, 0});
  CHECK(c.value == 0.0);
  CHECK(c.grad == std::array<double, 4>{2, -2, 0, 0});
  CHECK(c.hess(0, 0) == 2.0);
  CHECK(c.hess(1, 1) == -2.0);
}

TEST_CASE("mixed partials agree across evaluation orders") {
  const Point p{1.3, -0.7, 0.2, 2.0};
  const Jet2 a = P("t*x").eval_jet(p), b = P("x*t").eval_jet(p);
  CHECK(a.hess(0, 1) == b.hess(1, 0));
  const Jet2 c = P("sin(t)*exp(x)").eval_jet(p), d = P("exp(x)*sin(t)").eval_jet(p);
  CHECK(c.hess(0, 1) == doctest::Approx(d.hess(1, 0)).epsilon(1e-15));
  CHECK(c.hess(0, 1) == doctest::Approx(std::cos(1.3) * std::exp(-0.7)).epsilon(1e-15));
}

TEST_CASE("powers") {
  const Point p{-2, 3, 0, 0};
  CHECK(P("t^3").eval(p) == -8.0);
  CHECK(P("t^-2").eval(p) == 0.25);
  CHECK(P("t^0").eval(p) == 1.0);
  CHECK(P("x^0.5").eval(p) == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(P("t^0.5").eval(p), DomainError);
  CHECK_THROWS_AS(P("t^x").eval(p), DomainError);
  const Jet2 j = P("x^t").eval_jet({2, 3, 0, 0});
  CHECK(j.value == doctest::Approx(9.0));
  CHECK(j.grad[0] == doctest::Approx(9.0 * std::log(3.0)));
  CHECK(j.grad[1] == doctest::Approx(6.0));
}

TEST_CASE("domain errors name the node") {
  const Point p{0, -1, 0, 0};
  CHECK_THROWS_AS(P("log(x)").eval(p), DomainError);
  CHECK_THROWS_AS(P("sqrt(x)").eval(p), DomainError);
  CHECK_THROWS_AS(P("1/t").eval(p), DomainError);
  CHECK_THROWS_AS(P("log(t)").eval(p), DomainError);
  try {
    P("2 + log(x)").eval(p);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("log") != std::string::npos);
  }
}

TEST_CASE("custom chart names") {
  const CoordinateNames sph{"t", "r", "theta", "phi"};
  const ScalarExpr e = parse("r^2*sin(theta)^2", sph);
  CHECK(e.eval({0, 2, M_PI / 2, 0}) == doctest::Approx(4.0));
  CHECK(is_reserved_name("pi"));
  CHECK(is_reserved_name("sqrt"));
  CHECK_FALSE(is_reserved_name("theta"));
}

// ---- properties ----------------------------------------------------------

TEST_CASE("property: AD matches central differences") {
  Gen g(424242);
  const std::array<std::array<double, 2>, 4> box{{{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}};
  double worst = 0.0, worst_h = 0.0;
  for (int n = 0; n < 200; ++n) {
    const std::string src = random_expr(g, 5);
    const ScalarExpr e = P(src);
    const Point p = g.point(box);
    const Jet2 j = e.eval_jet(p);
    for (int mu = 0; mu < 4; ++mu) {
      const double h = 1e-5 * (1 + std::abs(p[mu]));
      Point pp = p, pm = p;
      pp[mu] += h;
      pm[mu] -= h;
      const Jet2 jp = e.eval_jet(pp), jm = e.eval_jet(pm);
      const double fd = (jp.value - jm.value) / (2 * h);
      worst = std::max(worst, std::abs(j.grad[mu] - fd) / (1 + std::abs(fd)));
      // second derivatives against differences of the AD gradient
      for (int nu = 0; nu < 4; ++nu) {
        const double fd2 = (jp.grad[nu] - jm.grad[nu]) / (2 * h);
        worst_h = std::max(worst_h, std::abs(j.hess(mu, nu) - fd2) / (1 + std::abs(fd2)));
      }
    }
  }
  CHECK(worst <= 1e-6);
  CHECK(worst_h <= 1e-6);
}

TEST_CASE("property: print/parse round trip") {
  Gen g(77);
  for (int n = 0; n < 300; ++n) {
    const ScalarExpr e = P(random_expr(g, 5));
    const ScalarExpr back = P(e.to_string());
    CHECK(structurally_equal(e, back));
    CHECK(back.to_string() == e.to_string());
  }
  // builder-made trees with negative literals survive too
  const ScalarExpr b = ScalarExpr::number(-2.5) * ScalarExpr::coordinate(0, "t");
  CHECK(P(b.to_string()).eval({2, 0, 0, 0}) == -5.0);
}
