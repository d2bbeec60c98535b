#pragma once

// Hand-rolled random generators for the property tests. Everything draws
// from one seeded engine so a failing case can be replayed from the seed.

#include <array>
#include <cstdint>
#include <random>

#include "spinlie/clifford.hpp"
#include "spinlie/jet.hpp"

namespace spinlie::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Multivector multivector(double range = 1.0) {
    Multivector::Components c{};
    for (double& v : c) v = uniform(-range, range);
    return Multivector(c);
  }

  Multivector even(double range = 1.0) {
    Multivector::Components c{};
    for (BladeMask m = 0; m < kBladeCount; ++m)
      if (blade_grade(m) % 2 == 0) c[m] = uniform(-range, range);
    return Multivector(c);
  }

  Multivector bivector(double range = 1.0) {
    Multivector::Components c{};
    for (BladeMask m = 0; m < kBladeCount; ++m)
      if (blade_grade(m) == 2) c[m] = uniform(-range, range);
    return Multivector(c);
  }

  Point point(const std::array<std::array<double, 2>, 4>& box) {
    Point p{};
    for (int i = 0; i < 4; ++i) p[i] = uniform(box[i][0], box[i][1]);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spinlie::testing
