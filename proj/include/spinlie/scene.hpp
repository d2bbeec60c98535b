#pragma once

// Scene files: JSON documents describing a chart, metric, optional tetrad,
// named vector fields, named Clifford/spinor fields and a sampling plan.
//
//   {
//     "name": "rindler",
//     "coordinates": ["t", "x", "y", "z"],
//     "metric": [["x^2", "0", "0", "0"], ...],          lower indices g_mn
//     "tetrad": [["x", "0", "0", "0"], ...],            optional, h^a_mu
//     "vectors": {"timetrans": ["1", "0", "0", "0"]},   xi^mu
//     "fields": {"psi": {"even": true, "components": {"s": "1", "12": "x"}}},
//     "sample": {"seed": 42, "count": 100, "box": [[-1, 1], [0.5, 3], ...]},
//     "points": [[0, 0, 0, 0]],                         optional extra points
//     "domain": [[...], ...]                            optional flow domain
//   }
//
// Expressions may also be given as JSON numbers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinlie/fields.hpp"
#include "spinlie/geometry.hpp"

namespace spinlie {

struct Scene {
  std::string name;
  Geometry geometry;
  std::map<std::string, VectorField> vectors;
  std::map<std::string, CliffordField> fields;
  std::uint64_t seed = 0;
  int count = 0;
  Box box{};
  Box domain{};
  std::vector<Point> points;
};

// Throws SceneError (bad document, failed validation), SyntaxError or
// UnknownIdentifier (bad expression; the message names the location).
Scene parse_scene(const std::string& text, const std::string& fallback_name = "scene");
Scene load_scene(const std::string& path);

// `count` points drawn uniformly from `box` shrunk by `margin` (a fraction of
// each side) with the given seed. Deterministic.
std::vector<Point> sample_points(const Box& box, std::uint64_t seed, int count, double margin = 0.0);

}  // namespace spinlie
