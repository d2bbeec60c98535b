// spinlie: command-line front end.
//
//   spinlie check  <scene>
//   spinlie lie    <scene> --xi NAME --target gammaA|field:NAME --at t,x,y,z --mode MODE
//   spinlie lift   <scene> --xi NAME --at t,x,y,z --t T [--json]
//   spinlie verify <scene> [--seed N] [--samples M] [--tol E] [--json] [--verbose]
//
// Exit codes: 0 ok, 1 math or property failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinlie/dispatch.hpp"
#include "spinlie/errors.hpp"
#include "spinlie/lieops.hpp"
#include "spinlie/scene.hpp"
#include "spinlie/verify.hpp"

using namespace spinlie;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Point parse_point(const std::string& s) {
  Point p;
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 4) throw InputError("--at expects 4 comma-separated numbers");
    std::size_t used = 0;
    try {
      p[i] = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("--at: '" + item + "' is not a number");
    }
    if (used != item.size()) throw InputError("--at: '" + item + "' is not a number");
    ++i;
  }
  if (i != 4) throw InputError("--at expects 4 comma-separated numbers");
  return p;
}

std::string matrix_json(const Mat4& m, const char* indent) {
  std::string s = "[";
  for (int a = 0; a < 4; ++a) {
    s += a ? ",\n" : "\n";
    s += indent;
    s += "[";
    for (int b = 0; b < 4; ++b) s += (b ? ", " : "") + fmt(m(a, b));
    s += "]";
  }
  return s + "]";
}

int cmd_check(const std::string& path) {
  const Scene sc = load_scene(path);
  const auto& names = sc.geometry.chart().names;
  std::cout << "scene " << sc.name << "\n";
  std::cout << "coordinates " << names[0] << " " << names[1] << " " << names[2] << " " << names[3] << "\n";
  std::cout << "tetrad " << (sc.geometry.tetrad() ? "given" : "derived") << "\n";
  std::cout << "sample seed " << sc.seed << " count " << sc.count << " box";
  for (const auto& iv : sc.box) std::cout << " [" << fmt(iv.lo) << ", " << fmt(iv.hi) << "]";
  std::cout << "\n";
  if (!sc.points.empty()) std::cout << "explicit points " << sc.points.size() << "\n";

  const auto pts = sample_points(sc.box, sc.seed, std::min(sc.count, 100), 0.02);
  for (const auto& [name, xi] : sc.vectors) {
    std::string cls;
    try {
      cls = killing_residual(sc.geometry, xi, pts) <= kKillingTolerance ? "killing" : "not killing";
    } catch (const MathError& e) {
      cls = describe_error(e);
    }
    std::cout << "vector " << name << " " << cls << "\n";
  }
  for (const auto& [name, f] : sc.fields) {
    std::cout << "field " << name << (f.even() ? " even" : "") << " blades";
    for (const auto& [m, e] : f.components()) std::cout << " " << blade_key(m);
    std::cout << "\n";
  }
  return 0;
}

int cmd_lie(const std::string& path, const std::string& xi, const std::string& target, const std::string& at,
            const std::string& mode_name, int column) {
  const Scene sc = load_scene(path);
  const Point p = parse_point(at);
  const LieMode mode = parse_lie_mode(mode_name);
  if (mode != LieMode::Dirac) {
    std::cout << to_string(lie_at(sc, xi, target, p, mode)) << "\n";
    return 0;
  }
  if (column < -1 || column > 3) throw InputError("--column must be 0..3");
  const auto cols = dirac_lie_at(sc, xi, target, p);
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    if (column >= 0 && i != column) continue;
    out += out.size() > 1 ? ", [" : "[";
    for (int k = 0; k < 4; ++k)
      out += (k ? ", [" : "[") + fmt(cols[i](k).real()) + ", " + fmt(cols[i](k).imag()) + "]";
    out += "]";
  }
  std::cout << out << "]\n";
  return 0;
}

int cmd_lift(const std::string& path, const std::string& xi, const std::string& at, double t, bool json) {
  const Scene sc = load_scene(path);
  const LiftResult r = lift_at(sc, xi, parse_point(at), t);
  if (json) {
    std::cout << "{\n  \"u\": " << to_string(r.u) << ",\n  \"checked_frame\": [";
    for (int a = 0; a < 4; ++a) std::cout << (a ? ", " : "") << to_string(r.checked_frame[a]);
    std::cout << "],\n  \"gram_residual\": " << fmt(r.gram_residual) << ",\n  \"lambda\": "
              << matrix_json(r.lambda, "    ") << "\n}\n";
    return 0;
  }
  std::cout << "u_t " << to_string(r.u) << "\n";
  for (int a = 0; a < 4; ++a) std::cout << "gamma_check" << a << " " << to_string(r.checked_frame[a]) << "\n";
  std::cout << "gram_residual " << fmt(r.gram_residual) << "\n";
  std::cout << "lambda\n";
  for (int a = 0; a < 4; ++a) {
    std::cout << " ";
    for (int b = 0; b < 4; ++b) std::cout << " " << fmt(r.lambda(a, b));
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, const VerifyOptions& opt, bool json, bool verbose) {
  const Scene sc = load_scene(path);
  const Report rep = verify_scene(sc, opt);
  std::cout << (json ? report_json(rep) : report_text(rep, verbose));
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlie: spinor Lie derivatives on Lorentzian tetrads"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("spinlie ") + kToolVersion);

  std::string scene, xi, target, at, mode = "spinor";
  double t = 0.0;
  int column = -1;
  bool json = false, verbose = false;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;

  auto* check = app.add_subcommand("check", "load and validate a scene, classify its vector fields");
  check->add_option("scene", scene, "scene file")->required();

  auto* lie = app.add_subcommand("lie", "evaluate a Lie derivative at a point");
  lie->add_option("scene", scene, "scene file")->required();
  lie->add_option("--xi", xi, "vector field name")->required();
  lie->add_option("--target", target, "gamma0..gamma3 or field:NAME")->required();
  lie->add_option("--at", at, "point t,x,y,z")->required();
  lie->add_option("--mode", mode,
                  "cartan | covariant | spinor | spinor-clifford | spinor-right | spinor-covariant | "
                  "spinor-coordinate | dirac")
      ->capture_default_str();
  lie->add_option("--column", column, "dirac mode: only this basis column (0..3)");

  auto* lift = app.add_subcommand("lift", "spinor lift u_t, checked frame and its Gram residual");
  lift->add_option("scene", scene, "scene file")->required();
  lift->add_option("--xi", xi, "vector field name")->required();
  lift->add_option("--at", at, "point t,x,y,z")->required();
  lift->add_option("--t", t, "flow parameter")->required();
  lift->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run the property suite over sample points");
  verify->add_option("scene", scene, "scene file")->required();
  auto* seed_opt = verify->add_option("--seed", seed, "sample seed (default: the scene's)");
  auto* samples_opt = verify->add_option("--samples", samples, "number of random points (default: the scene's)")
                          ->check(CLI::NonNegativeNumber);
  auto* tol_opt = verify->add_option("--tol", tol, "replace every property tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "machine-readable report");
  verify->add_flag("--verbose", verbose, "list every record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(scene);
    if (*lie) return cmd_lie(scene, xi, target, at, mode, column);
    if (*lift) return cmd_lift(scene, xi, at, t, json);
    VerifyOptions opt;
    if (*seed_opt) opt.seed = seed;
    if (*samples_opt) opt.samples = samples;
    if (*tol_opt) opt.tol = tol;
    return cmd_verify(scene, opt, json, verbose);
  } catch (const InputError& e) {
    std::cerr << "spinlie: " << describe_error(e) << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "spinlie: " << describe_error(e) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "spinlie: " << e.what() << "\n";
    return 2;
  }
}
