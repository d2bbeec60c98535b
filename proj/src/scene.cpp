#include "spinlie/scene.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw SceneError(msg); }

std::string expr_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
    return buf;
  }
  fail(where + ": expected an expression string or number");
}

ScalarExpr expr_at(const json& j, const CoordinateNames& names, const std::string& where) {
  const std::string src = expr_text(j, where);
  try {
    return parse(src, names);
  } catch (const SyntaxError& e) {
    throw SyntaxError(where + ": " + e.what(), e.offset());
  } catch (const UnknownIdentifier& e) {
    throw SceneError(where + ": " + e.what());
  }
}

ExprMatrix matrix_at(const json& j, const CoordinateNames& names, const std::string& key) {
  if (!j.is_array() || j.size() != 4) fail(key + ": expected a 4x4 array");
  ExprMatrix m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) fail(key + ": expected a 4x4 array");
    for (int k = 0; k < 4; ++k)
      m[i][k] = expr_at(j[i][k], names, key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Box box_at(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 4) fail(key + ": expected 4 intervals");
  Box b;
  for (int i = 0; i < 4; ++i) {
    const json& iv = j[i];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      fail(key + "[" + std::to_string(i) + "]: expected [lo, hi]");
    b[i] = {iv[0].get<double>(), iv[1].get<double>()};
    if (!(b[i].lo <= b[i].hi) || !std::isfinite(b[i].lo) || !std::isfinite(b[i].hi))
      fail(key + "[" + std::to_string(i) + "]: empty or non-finite interval");
  }
  return b;
}

Point point_at(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 4) fail(key + ": expected 4 coordinates");
  Point p;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_number()) fail(key + ": expected 4 coordinates");
    p[i] = j[i].get<double>();
  }
  return p;
}

std::string point_text(const Point& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", p[0], p[1], p[2], p[3]);
  return buf;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::vector<Point> sample_points(const Box& box, std::uint64_t seed, int count, double margin) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    Point p;
    for (int i = 0; i < 4; ++i) {
      const double w = box[i].hi - box[i].lo;
      const double lo = box[i].lo + margin * w, hi = box[i].hi - margin * w;
      // a 53-bit fraction straight from the engine keeps this reproducible
      // across standard libraries
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      p[i] = lo + (hi - lo) * u;
    }
    pts.push_back(p);
  }
  return pts;
}

Scene parse_scene(const std::string& text, const std::string& fallback_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("scene must be a JSON object");

  for (const char* key : {"coordinates", "metric", "sample"})
    if (!doc.contains(key)) fail(std::string("missing key '") + key + "'");

  CoordinateNames names;
  const json& coords = doc["coordinates"];
  if (!coords.is_array() || coords.size() != 4) fail("coordinates: expected 4 names");
  std::set<std::string> seen;
  for (int i = 0; i < 4; ++i) {
    if (!coords[i].is_string()) fail("coordinates: expected 4 names");
    names[i] = coords[i].get<std::string>();
    if (!valid_identifier(names[i])) fail("coordinates: '" + names[i] + "' is not an identifier");
    if (is_reserved_name(names[i])) fail("coordinates: '" + names[i] + "' is reserved");
    if (!seen.insert(names[i]).second) fail("coordinates: names are not distinct");
  }

  const json& sample = doc["sample"];
  if (!sample.is_object() || !sample.contains("box")) fail("sample: expected {seed, count, box}");
  Box box = box_at(sample["box"], "sample.box");
  std::uint64_t seed = sample.value("seed", 0ull);
  const int count = sample.value("count", 0);
  if (count < 0) fail("sample.count must be non-negative");

  ExprMatrix metric = matrix_at(doc["metric"], names, "metric");
  std::optional<ExprMatrix> tetrad;
  if (doc.contains("tetrad") && !doc["tetrad"].is_null()) tetrad = matrix_at(doc["tetrad"], names, "tetrad");

  std::vector<Point> points;
  if (doc.contains("points")) {
    if (!doc["points"].is_array()) fail("points: expected an array");
    for (std::size_t i = 0; i < doc["points"].size(); ++i)
      points.push_back(point_at(doc["points"][i], "points[" + std::to_string(i) + "]"));
  }
  const Box domain = doc.contains("domain") ? box_at(doc["domain"], "domain") : box;

  Scene scene{doc.value("name", fallback_name),
              Geometry(Chart{names, box}, metric, tetrad),
              {},
              {},
              seed,
              count,
              box,
              domain,
              std::move(points)};

  if (doc.contains("vectors")) {
    if (!doc["vectors"].is_object()) fail("vectors: expected an object");
    for (const auto& [name, v] : doc["vectors"].items()) {
      if (!v.is_array() || v.size() != 4) fail("vectors." + name + ": expected 4 components");
      VectorField f;
      for (int i = 0; i < 4; ++i)
        f.xi[i] = expr_at(v[i], names, "vectors." + name + "[" + std::to_string(i) + "]");
      scene.vectors.emplace(name, std::move(f));
    }
  }

  if (doc.contains("fields")) {
    if (!doc["fields"].is_object()) fail("fields: expected an object");
    for (const auto& [name, f] : doc["fields"].items()) {
      if (!f.is_object() || !f.contains("components") || !f["components"].is_object())
        fail("fields." + name + ": expected {even, components}");
      const bool even = f.value("even", false);
      std::map<BladeMask, ScalarExpr> comps;
      for (const auto& [key, e] : f["components"].items()) {
        BladeMask m;
        try {
          m = parse_blade_key(key);
        } catch (const InputError& err) {
          fail("fields." + name + ": " + err.what());
        }
        if (even && blade_grade(m) % 2) fail("fields." + name + ": even field has odd blade '" + key + "'");
        comps.emplace(m, expr_at(e, names, "fields." + name + "." + key));
      }
      scene.fields.emplace(name, CliffordField(std::move(comps), even));
    }
  }

  // numerical checks at the scene's own sample plan plus explicit points;
  // points where the expressions cannot be evaluated are left to verify
  std::vector<Point> probe = sample_points(box, seed, std::min(count, 100));
  probe.insert(probe.end(), scene.points.begin(), scene.points.end());
  const ExprMatrix& g = scene.geometry.metric();
  for (const Point& p : probe) {
    double scale = 1.0;
    Mat4 gv;
    try {
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) gv(i, k) = g[i][k].eval(p);
    } catch (const MathError&) {
      continue;
    }
    scale = std::max(scale, gv.cwiseAbs().maxCoeff());
    for (int i = 0; i < 4; ++i)
      for (int k = i + 1; k < 4; ++k)
        if (!structurally_equal(g[i][k], g[k][i]) && std::abs(gv(i, k) - gv(k, i)) > 1e-12 * scale)
          fail("metric not symmetric: g[" + std::to_string(i) + "][" + std::to_string(k) + "] != g[" +
               std::to_string(k) + "][" + std::to_string(i) + "] at " + point_text(p));
    if (tetrad) {
      Mat4 h;
      try {
        for (int a = 0; a < 4; ++a)
          for (int m = 0; m < 4; ++m) h(a, m) = (*tetrad)[a][m].eval(p);
      } catch (const MathError&) {
        continue;
      }
      const Mat4 eta_m = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
      const double r = (h.transpose() * eta_m * h - gv).cwiseAbs().maxCoeff();
      if (r > 1e-10 * scale)
        fail("tetrad inconsistent with metric at " + point_text(p) + " (residual " + std::to_string(r) + ")");
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_scene(ss.str(), stem);
}

}  // namespace spinlie
