#pragma once

#include <string>
#include <utility>
#include <vector>

#include "support/worlds.hpp"

namespace spinlie::testing {

// The ten Minkowski Killing generators in Cartesian coordinates.
inline std::vector<std::pair<std::string, VectorField>> minkowski_killing() {
  return {
      {"dt", vec({"1", "0", "0", "0"})},      {"dx", vec({"0", "1", "0", "0"})},
      {"dy", vec({"0", "0", "1", "0"})},      {"dz", vec({"0", "0", "0", "1"})},
      {"rot_xy", vec({"0", "y", "-x", "0"})}, {"rot_yz", vec({"0", "0", "z", "-y"})},
      {"rot_zx", vec({"0", "-z", "0", "x"})}, {"boost_x", vec({"x", "t", "0", "0"})},
      {"boost_y", vec({"y", "0", "t", "0"})}, {"boost_z", vec({"z", "0", "0", "t"})},
  };
}

}  // namespace spinlie::testing
