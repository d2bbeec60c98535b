#include <cmath>
#include <numbers>

#include "doctest.h"
#include "spinlie/clifford.hpp"
#include "spinlie/errors.hpp"
#include "support/blade_oracle.hpp"
#include "support/gen.hpp"

using namespace spinlie;
using spinlie::testing::Gen;

namespace {

Multivector g(int a) { return Multivector::basis(a); }
Multivector blade(const char* key, double c = 1.0) { return Multivector::blade(parse_blade_key(key), c); }
const Multivector one = Multivector::scalar(1.0);
const Multivector tau = Multivector::pseudoscalar();

}  // namespace

TEST_CASE("blade table agrees with the list-sorting oracle on all 256 pairs") {
  for (BladeMask a = 0; a < 16; ++a)
    for (BladeMask b = 0; b < 16; ++b) {
      BladeMask m;
      double s;
      spinlie::testing::oracle_blade_product(a, b, m, s);
      const Multivector got = Multivector::blade(a) * Multivector::blade(b);
      CHECK(got == Multivector::blade(m, s));
    }
}

TEST_CASE("generators anticommute to 2 eta exactly") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Multivector ac = g(a) * g(b) + g(b) * g(a);
      const double expect = a == b ? 2.0 * eta(a) : 0.0;
      CHECK(ac == Multivector::scalar(expect));
    }
}

TEST_CASE("geometric product examples") {
  CHECK(g(0) * g(0) == one);
  CHECK(g(1) * g(1) == -one);
  CHECK(blade("01") * blade("01") == one);
  CHECK(tau * tau == -one);
}

TEST_CASE("wedge") {
  CHECK(wedge(g(0), g(1)) == blade("01"));
  CHECK(wedge(g(1), g(1)) == Multivector());
  CHECK(wedge(blade("01"), blade("23")) == tau);
  CHECK(wedge(g(2), g(0)) == blade("02", -1.0));

  Gen gen(7);
  for (int i = 0; i < 50; ++i) {
    const Multivector a = grade(gen.multivector(), 1), b = grade(gen.multivector(), 2);
    CHECK(max_abs_diff(wedge(a, b), grade(a * b, 3)) < 1e-15);
  }
}

TEST_CASE("left contraction") {
  CHECK(left_contraction(g(0), blade("01")) == g(1));
  CHECK(left_contraction(g(2), g(3)) == Multivector());
  CHECK(left_contraction(g(0), one) == Multivector());
  CHECK(left_contraction(g(1), g(1)) == -one);

  // x _| (y ^ z) = (x.y) z - (x.z) y
  Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const Multivector x = grade(gen.multivector(), 1), y = grade(gen.multivector(), 1),
                      z = grade(gen.multivector(), 1);
    const Multivector lhs = left_contraction(x, wedge(y, z));
    const Multivector rhs = scalar_product(x, y) * z - scalar_product(x, z) * y;
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("scalar product") {
  CHECK(scalar_product(blade("01"), blade("01")) == 1.0);
  CHECK(scalar_product(blade("12"), blade("12")) == -1.0);
  CHECK(scalar_product(g(0), g(1)) == 0.0);
  CHECK(scalar_product(one, one) == 1.0);

  Gen gen(3);
  for (int i = 0; i < 100; ++i) {
    const Multivector a = gen.multivector(), b = gen.multivector();
    CHECK(scalar_product(a, b) == doctest::Approx(scalar_product(b, a)).epsilon(1e-14));
    CHECK(scalar_product(a, b) == doctest::Approx((a * b)[0]).epsilon(1e-14));
  }
}

TEST_CASE("the two sigma expressions agree under the chosen scalar product") {
  // -1/2 (g_k ^ g^a) _| S  ==  +1/2 (g^a ^ g_k) . S for bivector S
  Gen gen(5);
  for (int n = 0; n < 50; ++n) {
    const Multivector S = gen.bivector(2.0);
    for (int a = 0; a < 4; ++a)
      for (int k = 0; k < 4; ++k) {
        const Multivector lower_k = eta(k) * g(k);
        const double lhs = -0.5 * left_contraction(wedge(lower_k, g(a)), S)[0];
        const double rhs = 0.5 * scalar_product(wedge(g(a), lower_k), S);
        CHECK(std::abs(lhs - rhs) < 1e-14);
      }
  }
}

TEST_CASE("grade projection") {
  CHECK(grade(blade("01") * one, 2) == blade("01"));
  CHECK(grade(g(0) * g(0), 0) == one);
  CHECK(grade(3.0 * one + 2.0 * g(0) + tau, 4) == tau);
  CHECK_THROWS_AS(grade(one, 5), DomainError);
  CHECK_THROWS_AS(grade(one, -1), DomainError);

  Gen gen(13);
  for (int i = 0; i < 100; ++i) {
    const Multivector a = gen.multivector();
    Multivector sum;
    for (int k = 0; k <= 4; ++k) sum += grade(a, k);
    CHECK(sum == a);
    CHECK(grade(grade(a, 2), 2) == grade(a, 2));
  }
}

TEST_CASE("reversion") {
  CHECK(reversion(blade("01")) == blade("01", -1.0));
  CHECK(reversion(g(1) * g(0)) == g(0) * g(1));
  CHECK(reversion(tau) == tau);
  CHECK(reversion(one + g(0)) == one + g(0));
}

TEST_CASE("commutator") {
  // g01 g0 = -g1, g0 g01 = g1, so the commutator is -2 g1.
  CHECK(commutator(blade("01"), g(0)) == -2.0 * g(1));
  CHECK(commutator(one, g(2)) == Multivector());
  CHECK(commutator(blade("12"), g(0)) == Multivector());
  CHECK(0.25 * commutator(blade("01", -2.0), g(0)) == g(1));
}

TEST_CASE("bivector exponential") {
  CHECK(max_abs_diff(exp_bivector(Multivector()), one) == 0.0);
  const Multivector r = exp_bivector(blade("12", std::numbers::pi / 2));
  CHECK(max_abs_diff(r, blade("12")) < 1e-15);
  const Multivector b = exp_bivector(blade("01", 0.5));
  CHECK(max_abs_diff(b, std::cosh(0.5) * one + blade("01", std::sinh(0.5))) < 1e-15);
  const Multivector big = exp_bivector(blade("01", 3.0) + blade("23", 1.3));
  // commuting blades: exp factorises
  const Multivector split = (std::cosh(3.0) * one + blade("01", std::sinh(3.0))) *
                            (std::cos(1.3) * one + blade("23", std::sin(1.3)));
  CHECK(max_abs_diff(big, split) < 1e-13 * max_norm(split));
  CHECK_THROWS_AS(exp_bivector(g(0)), DomainError);
  CHECK_THROWS_AS(exp_bivector(one + blade("01")), DomainError);
}

TEST_CASE("polar decomposition examples") {
  const PolarForm p2 = polar_decompose(2.0 * one);
  CHECK(p2.rho == doctest::Approx(4.0));
  CHECK(p2.beta == 0.0);
  CHECK(max_abs_diff(p2.rotor, one) < 1e-15);

  const PolarForm p01 = polar_decompose(blade("01"));
  CHECK(p01.rho == doctest::Approx(1.0));
  CHECK(p01.beta == doctest::Approx(std::numbers::pi));
  CHECK(max_abs_diff(p01.rotor, blade("23")) < 1e-15);
  CHECK(max_abs_diff(polar_reconstruct(p01), blade("01")) < 1e-15);

  // 1 + tau is not singular: (1+tau)(1+tau)~ = 2 tau.
  const PolarForm pt = polar_decompose(one + tau);
  CHECK(pt.rho == doctest::Approx(2.0));
  CHECK(pt.beta == doctest::Approx(-std::numbers::pi / 2));
  CHECK(max_abs_diff(polar_reconstruct(pt), one + tau) < 1e-15);

  CHECK_THROWS_AS(polar_decompose(one + blade("01")), SingularSpinor);
  // (1 + g01) R with R a rotor: psi psi~ = (1 + g01)(1 - g01) = 0
  CHECK_THROWS_AS(polar_decompose(3.0 * (one + blade("03")) * exp_bivector(blade("12", 0.3) + blade("02", 0.2))),
                  SingularSpinor);
  CHECK_THROWS_AS(polar_decompose(Multivector()), SingularSpinor);
  CHECK_THROWS_AS(polar_decompose(g(0)), DomainError);
}

TEST_CASE("text form") {
  CHECK(to_string(blade("01", -0.5) + one) == R"({"s": 1, "01": -0.5})");
  CHECK(to_string(Multivector()) == "{}");
  CHECK(parse_blade_key("023") == 0b1101u);
  CHECK_THROWS_AS(parse_blade_key("10"), InputError);
  CHECK_THROWS_AS(parse_blade_key("4"), InputError);
  CHECK_THROWS_AS(parse_blade_key(""), InputError);
  const auto& order = blades_by_grade();
  CHECK(blade_key(order[5]) == "01");
  CHECK(blade_key(order[7]) == "03");
  CHECK(blade_key(order[8]) == "12");
  CHECK(blade_key(order[15]) == "0123");
  CHECK_THROWS_AS(Multivector(Multivector::Components{std::nan("")}), DomainError);
}

// ---- properties ----------------------------------------------------------

TEST_CASE("property: product matches oracle, associative, reversion anti-automorphism") {
  Gen gen(20261016);
  double assoc = 0, rev = 0, oracle = 0;
  for (int i = 0; i < 1000; ++i) {
    const Multivector a = gen.multivector(), b = gen.multivector(), c = gen.multivector();
    assoc = std::max(assoc, max_abs_diff((a * b) * c, a * (b * c)));
    rev = std::max(rev, max_abs_diff(reversion(a * b), reversion(b) * reversion(a)));
    oracle = std::max(oracle, max_abs_diff(a * b, spinlie::testing::oracle_product(a, b)));
  }
  CHECK(assoc <= 1e-12);
  CHECK(rev <= 1e-12);
  CHECK(oracle <= 1e-14);
}

TEST_CASE("property: exp of bivector is a rotor") {
  Gen gen(99);
  for (int i = 0; i < 500; ++i) {
    const Multivector R = exp_bivector(gen.bivector(2.0));
    CHECK(max_abs_diff(R * reversion(R), one) <= 1e-10);
    CHECK(R.is_even());
  }
}

TEST_CASE("property: polar round trip") {
  Gen gen(1234);
  int tried = 0;
  while (tried < 300) {
    const Multivector psi = gen.even();
    const Multivector sq = psi * reversion(psi);
    if (std::abs(sq[0]) + std::abs(sq[kPseudoscalar]) <= 0.1) continue;
    ++tried;
    const PolarForm pf = polar_decompose(psi);
    CHECK(pf.beta > -std::numbers::pi);
    CHECK(pf.beta <= std::numbers::pi);
    CHECK(max_abs_diff(pf.rotor * reversion(pf.rotor), one) <= 1e-10);
    CHECK(max_abs_diff(polar_reconstruct(pf), psi) <= 1e-10);
  }
}
