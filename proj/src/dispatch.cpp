#include "spinlie/dispatch.hpp"

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

const std::pair<const char*, LieMode> kModes[] = {
    {"cartan", LieMode::Cartan},
    {"covariant", LieMode::Covariant},
    {"spinor", LieMode::Spinor},
    {"spinor-clifford", LieMode::SpinorClifford},
    {"spinor-right", LieMode::SpinorRight},
    {"spinor-covariant", LieMode::SpinorCovariant},
    {"spinor-coordinate", LieMode::SpinorCoordinate},
    {"dirac", LieMode::Dirac},
};

}  // namespace

LieMode parse_lie_mode(const std::string& s) {
  for (const auto& [name, m] : kModes)
    if (s == name) return m;
  throw InputError("unknown mode '" + s + "'");
}

const char* lie_mode_name(LieMode m) {
  for (const auto& [name, mode] : kModes)
    if (m == mode) return name;
  return "?";
}

const VectorField& find_vector(const Scene& scene, const std::string& name) {
  auto it = scene.vectors.find(name);
  if (it == scene.vectors.end()) throw InputError("unknown vector field '" + name + "'");
  return it->second;
}

CliffordField find_target(const Scene& scene, const std::string& target) {
  if (target.size() == 6 && target.rfind("gamma", 0) == 0 && target[5] >= '0' && target[5] <= '3')
    return CliffordField::generator(target[5] - '0');
  if (target.rfind("field:", 0) == 0) {
    auto it = scene.fields.find(target.substr(6));
    if (it == scene.fields.end()) throw InputError("unknown field '" + target.substr(6) + "'");
    return it->second;
  }
  throw InputError("target must be gamma0..gamma3 or field:NAME");
}

Multivector lie_at(const Scene& scene, const std::string& xi, const std::string& target, const Point& p,
                   LieMode mode) {
  const VectorField& v = find_vector(scene, xi);
  const CliffordField C = find_target(scene, target);
  if (mode == LieMode::Dirac) throw InputError("dirac mode yields column spinors, not a multivector");
  if ((mode == LieMode::SpinorRight || mode == LieMode::SpinorCovariant || mode == LieMode::SpinorCoordinate) &&
      !C.even())
    throw InputError(std::string("mode ") + lie_mode_name(mode) + " needs an even (spinor) field target");

  const LieContext ctx = make_context(scene.geometry, v, p);
  const FieldJet j = eval_field(C, p);
  switch (mode) {
    case LieMode::Cartan: return lie_form_cartan(ctx, C);
    case LieMode::Covariant: return C.even() ? cov_deriv_spinor(ctx, j) : cov_deriv_clifford(ctx, j);
    case LieMode::Spinor: return C.even() ? spinor_lie_left(ctx, j) : spinor_lie_clifford(ctx, j);
    case LieMode::SpinorClifford: return spinor_lie_clifford(ctx, j);
    case LieMode::SpinorRight: return spinor_lie_right(ctx, j);
    case LieMode::SpinorCovariant: return spinor_lie_covariant(ctx, j);
    case LieMode::SpinorCoordinate: return spinor_lie_coordinate(ctx, j);
    case LieMode::Dirac: break;
  }
  throw InputError("unhandled mode");
}

std::vector<Col4> dirac_lie_at(const Scene& scene, const std::string& xi, const std::string& target, const Point& p,
                               DiracForm form) {
  const VectorField& v = find_vector(scene, xi);
  const CliffordField C = find_target(scene, target);
  if (!C.even()) throw InputError("mode dirac needs an even (spinor) field target");
  const LieContext ctx = make_context(scene.geometry, v, p);
  std::vector<Col4> cols;
  for (int i = 0; i < 4; ++i) {
    Col4 u = Col4::Zero();
    u(i) = 1.0;
    cols.push_back(dirac_spinor_lie(ctx, eval_dirac(dirac_field_from_spinor(C, u), p), form));
  }
  return cols;
}

LiftResult lift_at(const Scene& scene, const std::string& xi, const Point& p, double t) {
  const LieContext ctx = make_context(scene.geometry, find_vector(scene, xi), p);
  LiftResult r;
  r.u = spinor_lift(ctx, t);
  for (int a = 0; a < 4; ++a) r.checked_frame[a] = checked_frame(ctx, a, t);
  r.gram_residual = checked_gram_residual(ctx, t);
  r.lambda = checked_frame_matrix(ctx, t);
  return r;
}

}  // namespace spinlie
