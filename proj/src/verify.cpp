#include "spinlie/verify.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "spinlie/diracrep.hpp"
#include "spinlie/errors.hpp"
#include "spinlie/lieops.hpp"

namespace spinlie {

namespace {

constexpr double kTolGeometry = 1e-10;
constexpr double kTolOperator = 1e-9;
constexpr double kTolImage = 1e-6;
constexpr double kImageStep = 1e-4;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? fmt(v) : "null"; }

std::string point_json(const Point& p) {
  return "[" + fmt(p[0]) + ", " + fmt(p[1]) + ", " + fmt(p[2]) + ", " + fmt(p[3]) + "]";
}

FieldJet constant_jet(const Multivector& m) {
  FieldJet j;
  j.value = m;
  return j;
}

// Per-point work: everything appended to `out` in a fixed order.
class PointRunner {
 public:
  PointRunner(const Scene& scene, const std::vector<std::pair<std::string, CliffordField>>& products,
              const std::optional<double>& tol)
      : scene_(scene), products_(products), tol_(tol) {}

  void run(int index, const Point& p, std::vector<CheckRecord>& out, std::vector<char>& killing) const {
    auto add = [&](const std::string& name, const std::string& subject, double tol_default,
                   const std::function<double()>& f) {
      CheckRecord r{name, subject, index, p, 0.0, tol_.value_or(tol_default), false, {}};
      try {
        r.residual = f();
        r.pass = r.residual <= r.tolerance;
      } catch (const std::exception& e) {
        r.residual = std::numeric_limits<double>::quiet_NaN();
        r.error = describe_error(e);
      }
      out.push_back(std::move(r));
    };

    const Geometry& geo = scene_.geometry;
    PointGeometry pg;
    try {
      pg = geo.at(p);
    } catch (const std::exception& e) {
      out.push_back({"geometry", "", index, p, std::numeric_limits<double>::quiet_NaN(),
                     tol_.value_or(kTolGeometry), false, describe_error(e)});
      killing.assign(scene_.vectors.size(), 0);
      return;
    }

    add("metric_reconstruction", "", kTolGeometry, [&] { return metric_reconstruction_residual(pg); });
    add("connection_consistency", "", kTolGeometry, [&] { return connection_check(pg); });
    add("tetrad_postulate", "", kTolGeometry, [&] { return tetrad_postulate_residual(pg); });

    killing.clear();
    for (const auto& [xname, xi] : scene_.vectors) {
      const std::string sx = "xi=" + xname;
      LieContext ctx;
      try {
        ctx = make_context(geo, xi, p);
      } catch (const std::exception& e) {
        out.push_back({"vector_field", sx, index, p, std::numeric_limits<double>::quiet_NaN(),
                       tol_.value_or(kTolGeometry), false, describe_error(e)});
        killing.push_back(0);
        continue;
      }

      const bool is_killing = killing_residual(ctx) <= kKillingTolerance;
      killing.push_back(is_killing ? 1 : 0);

      add("biform_L_equals_2omega", sx, kTolGeometry,
          [&] { return max_abs_diff(biform_L(pg, ctx.xi), 2.0 * connection_biform(pg, ctx.xi)); });
      add("curl_routes", sx, kTolGeometry, [&] {
        return max_abs_diff(biform_dxi(pg, ctx.xi, CurlRoute::Christoffel), biform_dxi(pg, ctx.xi, CurlRoute::Frame));
      });
      if (is_killing) {
        add("killing_agreement", sx, kTolOperator, [&] {
          double r = 0.0;
          for (int a = 0; a < 4; ++a) {
            const Multivector s = spinor_lie_clifford(ctx, constant_jet(Multivector::basis(a)));
            r = std::max(r, max_abs_diff(s, lie_form_cartan(ctx, CliffordField::generator(a))));
            r = std::max(r, max_abs_diff(s, lie_cotetrad_killing(ctx, a)));
          }
          return r;
        });
      }
      add("metric_annihilation", sx, kTolOperator, [&] { return spinor_lie_metric(ctx, {0.1, 0.01}); });
      add("checked_frame_gram", sx, kTolGeometry, [&] { return checked_gram_residual(ctx, 0.1); });

      std::map<std::string, FieldJet> jets;
      for (const auto& [fname, f] : scene_.fields) {
        const std::string sf = sx + " field=" + fname;
        try {
          jets.emplace(fname, eval_field(f, p));
        } catch (const std::exception& e) {
          out.push_back({"field", sf, index, p, std::numeric_limits<double>::quiet_NaN(),
                         tol_.value_or(kTolOperator), false, describe_error(e)});
          continue;
        }
        const FieldJet& j = jets.at(fname);
        add("image_derivative", sf, kTolImage, [&] {
          FlowOptions fo;
          fo.domain = scene_.domain;
          const Multivector plus = spinor_image(geo, f, xi, p, kImageStep, fo);
          const Multivector minus = spinor_image(geo, f, xi, p, -kImageStep, fo);
          return max_abs_diff((plus - minus) / (2.0 * kImageStep), spinor_lie_clifford(ctx, j));
        });
        if (f.even()) {
          add("formula_equivalence", sf, kTolOperator, [&] {
            const Multivector l = spinor_lie_left(ctx, j);
            const Multivector c = spinor_lie_covariant(ctx, j);
            const Multivector k = spinor_lie_coordinate(ctx, j);
            return std::max({max_abs_diff(l, c), max_abs_diff(l, k), max_abs_diff(c, k)});
          });
          add("dirac_cross_check", sf, kTolOperator, [&] { return cross_check(ctx, f); });
        }
      }

      // products_ holds "A*B" for every ordered pair of fields
      for (const auto& [pname, prod] : products_) {
        const auto star = pname.find('*');
        const std::string an = pname.substr(0, star), bn = pname.substr(star + 1);
        if (!jets.count(an) || !jets.count(bn)) continue;
        const FieldJet& A = jets.at(an);
        const FieldJet& B = jets.at(bn);
        const bool a_even = scene_.fields.at(an).even();
        const bool b_even = scene_.fields.at(bn).even();
        const std::string sp = sx + " fields=" + an + "," + bn;
        add("leibniz_clifford", sp, kTolOperator, [&] {
          const FieldJet AB = eval_field(prod, p);
          return max_abs_diff(spinor_lie_clifford(ctx, AB),
                              spinor_lie_clifford(ctx, A) * B.value + A.value * spinor_lie_clifford(ctx, B));
        });
        if (b_even) {
          // Clifford field times spinor is a spinor: left action on the product
          add("leibniz_spinor", sp, kTolOperator, [&] {
            const FieldJet AB = eval_field(prod, p);
            return max_abs_diff(spinor_lie_left(ctx, AB),
                                spinor_lie_clifford(ctx, A) * B.value + A.value * spinor_lie_left(ctx, B));
          });
        }
        if (a_even && b_even) {
          // left spinor times right spinor
          add("leibniz_spinor_pair", sp, kTolOperator, [&] {
            const FieldJet AB = eval_field(prod, p);
            return max_abs_diff(spinor_lie_clifford(ctx, AB),
                                spinor_lie_left(ctx, A) * B.value + A.value * spinor_lie_right(ctx, B));
          });
        }
        if (a_even) {
          add("leibniz_right", sp, kTolOperator, [&] {
            const FieldJet AB = eval_field(prod, p);
            return max_abs_diff(spinor_lie_right(ctx, AB),
                                spinor_lie_right(ctx, A) * B.value + A.value * spinor_lie_clifford(ctx, B));
          });
        }
      }
    }
  }

 private:
  const Scene& scene_;
  const std::vector<std::pair<std::string, CliffordField>>& products_;
  const std::optional<double>& tol_;
};

}  // namespace

std::string describe_error(const std::exception& e) {
  const char* kind = "Error";
  if (dynamic_cast<const SingularMetric*>(&e)) kind = "SingularMetric";
  else if (dynamic_cast<const SignatureError*>(&e)) kind = "SignatureError";
  else if (dynamic_cast<const TetradMismatch*>(&e)) kind = "TetradMismatch";
  else if (dynamic_cast<const SingularSpinor*>(&e)) kind = "SingularSpinor";
  else if (dynamic_cast<const KillingViolation*>(&e)) kind = "KillingViolation";
  else if (dynamic_cast<const FlowEscape*>(&e)) kind = "FlowEscape";
  else if (dynamic_cast<const DomainError*>(&e)) kind = "DomainError";
  else if (dynamic_cast<const SceneError*>(&e)) kind = "SceneError";
  else if (dynamic_cast<const SyntaxError*>(&e)) kind = "SyntaxError";
  else if (dynamic_cast<const UnknownIdentifier*>(&e)) kind = "UnknownIdentifier";
  else if (dynamic_cast<const InputError*>(&e)) kind = "InputError";
  else if (dynamic_cast<const MathError*>(&e)) kind = "MathError";
  return std::string(kind) + ": " + e.what();
}

bool Report::pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

Report verify_scene(const Scene& scene, const VerifyOptions& opt) {
  Report rep;
  rep.scene = scene.name;
  rep.seed = opt.seed.value_or(scene.seed);
  rep.samples = opt.samples.value_or(scene.count);
  if (rep.samples < 0) throw InputError("samples must be non-negative");

  std::vector<Point> points = sample_points(scene.box, rep.seed, rep.samples, opt.margin);
  points.insert(points.end(), scene.points.begin(), scene.points.end());

  std::vector<std::pair<std::string, CliffordField>> products;
  for (const auto& [an, a] : scene.fields)
    for (const auto& [bn, b] : scene.fields) products.emplace_back(an + "*" + bn, field_product(a, b));

  const PointRunner runner(scene, products, opt.tol);
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<CheckRecord>> per_point(points.size());
  std::vector<std::vector<char>> killing(points.size());

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) runner.run(i, points[i], per_point[i], killing[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // ordered reduction
  std::map<std::string, std::size_t> slot;
  for (auto& recs : per_point)
    for (auto& r : recs) {
      auto [it, fresh] = slot.emplace(r.name, rep.summary.size());
      if (fresh) rep.summary.push_back({r.name, 0.0, r.tolerance, 0, 0});
      PropertySummary& s = rep.summary[it->second];
      ++s.checks;
      if (!r.pass) ++s.failures;
      if (!r.error.empty()) s.max_residual = std::numeric_limits<double>::quiet_NaN();
      else if (!std::isnan(s.max_residual)) s.max_residual = std::max(s.max_residual, r.residual);
      rep.records.push_back(std::move(r));
    }

  int k = 0;
  for (const auto& [xname, xi] : scene.vectors) {
    KillingCount kc{xname, 0, n};
    for (const auto& kv : killing)
      if (k < static_cast<int>(kv.size()) && kv[k]) ++kc.killing_points;
    rep.killing.push_back(kc);
    ++k;
  }
  return rep;
}

std::string report_json(const Report& r) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"tool\": \"spinlie\",\n";
  o << "  \"tool_version\": " << json_string(r.tool_version) << ",\n";
  o << "  \"scene\": " << json_string(r.scene) << ",\n";
  o << "  \"seed\": " << r.seed << ",\n";
  o << "  \"samples\": " << r.samples << ",\n";
  o << "  \"pass\": " << (r.pass() ? "true" : "false") << ",\n";
  o << "  \"summary\": [";
  for (std::size_t i = 0; i < r.summary.size(); ++i) {
    const auto& s = r.summary[i];
    o << (i ? ",\n" : "\n") << "    {\"name\": " << json_string(s.name) << ", \"max_residual\": "
      << json_number(s.max_residual) << ", \"tolerance\": " << fmt(s.tolerance) << ", \"checks\": " << s.checks
      << ", \"failures\": " << s.failures << "}";
  }
  o << (r.summary.empty() ? "],\n" : "\n  ],\n");
  o << "  \"killing\": [";
  for (std::size_t i = 0; i < r.killing.size(); ++i) {
    const auto& k = r.killing[i];
    o << (i ? ",\n" : "\n") << "    {\"xi\": " << json_string(k.xi) << ", \"killing_points\": " << k.killing_points
      << ", \"points\": " << k.points << "}";
  }
  o << (r.killing.empty() ? "],\n" : "\n  ],\n");
  o << "  \"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& c = r.records[i];
    o << (i ? ",\n" : "\n") << "    {\"name\": " << json_string(c.name) << ", \"scene\": " << json_string(r.scene)
      << ", \"subject\": " << json_string(c.subject) << ", \"point_index\": " << c.point_index
      << ", \"point\": " << point_json(c.point) << ", \"residual\": " << json_number(c.residual)
      << ", \"tolerance\": " << fmt(c.tolerance) << ", \"pass\": " << (c.pass ? "true" : "false")
      << ", \"error\": " << (c.error.empty() ? "null" : json_string(c.error)) << "}";
  }
  o << (r.records.empty() ? "]\n" : "\n  ]\n");
  o << "}\n";
  return o.str();
}

std::string report_text(const Report& r, bool verbose) {
  std::ostringstream o;
  char line[512];
  o << "spinlie " << r.tool_version << "  scene " << r.scene << "  seed " << r.seed << "  samples " << r.samples
    << "\n";
  if (!r.summary.empty()) {
    std::snprintf(line, sizeof line, "%-24s %8s %8s  %-24s %s\n", "property", "checks", "failed", "max_residual",
                  "tolerance");
    o << line;
    for (const auto& s : r.summary) {
      std::snprintf(line, sizeof line, "%-24s %8d %8d  %-24s %s\n", s.name.c_str(), s.checks, s.failures,
                    fmt(s.max_residual).c_str(), fmt(s.tolerance).c_str());
      o << line;
    }
  }
  for (const auto& k : r.killing) o << "killing " << k.xi << " " << k.killing_points << "/" << k.points << "\n";
  bool header = false;
  for (const auto& c : r.records) {
    if (c.pass && !verbose) continue;
    if (!header && !verbose) o << "failures:\n";
    header = true;
    o << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " [" << c.point_index << "] " << point_json(c.point);
    if (!c.subject.empty()) o << " " << c.subject;
    if (c.error.empty())
      o << " residual " << fmt(c.residual) << " tol " << fmt(c.tolerance) << "\n";
    else
      o << " " << c.error << "\n";
  }
  o << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return o.str();
}

}  // namespace spinlie
