#pragma once

// Small in-code geometries for unit tests (the shipped .scene files are
// exercised separately through the loader).

#include <optional>
#include <string>
#include <vector>

#include "spinlie/geometry.hpp"

namespace spinlie::testing {

using Strings4x4 = std::array<std::array<std::string, 4>, 4>;

inline ExprMatrix parse_matrix(const Strings4x4& s, const CoordinateNames& names) {
  ExprMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = parse(s[i][j], names);
  return m;
}

inline VectorField vec(const std::array<std::string, 4>& s, const CoordinateNames& names = {"t", "x", "y", "z"}) {
  VectorField v;
  for (int i = 0; i < 4; ++i) v.xi[i] = parse(s[i], names);
  return v;
}

inline Geometry make_geometry(const Strings4x4& g, std::optional<Strings4x4> h, Box box,
                              const CoordinateNames& names = {"t", "x", "y", "z"}) {
  std::optional<ExprMatrix> tet;
  if (h) tet = parse_matrix(*h, names);
  return Geometry(Chart{names, box}, parse_matrix(g, names), tet);
}

inline Geometry minkowski() {
  return make_geometry({{{"1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}}},
                       std::nullopt, Box{{{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}}});
}

inline Geometry rindler() {
  return make_geometry({{{"x^2", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}}},
                       Strings4x4{{{"x", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}},
                       Box{{{-1, 1}, {0.5, 3}, {-1, 1}, {-1, 1}}});
}

inline Geometry flrw() {
  return make_geometry(
      {{{"1", "0", "0", "0"}, {"0", "-t^2", "0", "0"}, {"0", "0", "-t^2", "0"}, {"0", "0", "0", "-t^2"}}},
      Strings4x4{{{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "t"}}},
      Box{{{1, 3}, {-1, 1}, {-1, 1}, {-1, 1}}});
}

// Non-diagonal, position-dependent metric with the Cholesky tetrad; keeps
// every off-diagonal path of the connection code busy.
inline Geometry skewed() {
  return make_geometry({{{"1 + 0.2*sin(x)", "0.1*t*y", "0.05*cos(z)", "0"},
                         {"0.1*t*y", "-(1 + 0.1*x^2)", "0.1*sin(t)", "0.05*y"},
                         {"0.05*cos(z)", "0.1*sin(t)", "-(1 + 0.2*t^2)", "0.1*x*z"},
                         {"0", "0.05*y", "0.1*x*z", "-exp(0.1*y)"}}},
                       std::nullopt, Box{{{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}});
}

}  // namespace spinlie::testing
