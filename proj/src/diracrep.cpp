#include "spinlie/diracrep.hpp"

namespace spinlie {

namespace {

using cd = std::complex<double>;

std::array<Mat4c, 4> build_gammas() {
  const cd i(0, 1);
  std::array<Eigen::Matrix2cd, 3> sigma;
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, -i, i, 0;
  sigma[2] << 1, 0, 0, -1;
  std::array<Mat4c, 4> g;
  g[0] = Mat4c::Zero();
  g[0].diagonal() << 1, 1, -1, -1;
  for (int k = 0; k < 3; ++k) {
    g[k + 1] = Mat4c::Zero();
    g[k + 1].block<2, 2>(0, 2) = sigma[k];
    g[k + 1].block<2, 2>(2, 0) = -sigma[k];
  }
  return g;
}

std::array<Mat4c, kBladeCount> build_blades() {
  const auto& g = gamma_matrices();
  std::array<Mat4c, kBladeCount> b;
  for (BladeMask m = 0; m < kBladeCount; ++m) {
    b[m] = Mat4c::Identity();
    for (int a = 0; a < 4; ++a)
      if (m & (1u << a)) b[m] = b[m] * g[a];
  }
  return b;
}

const std::array<Mat4c, kBladeCount>& blade_matrices() {
  static const auto b = build_blades();
  return b;
}

Col4 directional(const LieContext& ctx, const DiracJet& j) {
  Col4 r = Col4::Zero();
  for (int m = 0; m < 4; ++m) r += ctx.xi.value[m] * j.d[m];
  return r;
}

// sum_{a,b} A(a,b) g^a g^b
Mat4c pair_sum(const Mat4& A) {
  const auto& g = gamma_matrices();
  Mat4c r = Mat4c::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (A(a, b) != 0.0) r += A(a, b) * (g[a] * g[b]);
  return r;
}

}  // namespace

const std::array<Mat4c, 4>& gamma_matrices() {
  static const auto g = build_gammas();
  return g;
}

Mat4c represent(const Multivector& m) {
  const auto& b = blade_matrices();
  Mat4c r = Mat4c::Zero();
  for (BladeMask k = 0; k < kBladeCount; ++k)
    if (m[k] != 0.0) r += m[k] * b[k];
  return r;
}

DiracJet eval_dirac(const DiracField& f, const Point& p) {
  DiracJet j;
  for (int i = 0; i < 4; ++i) {
    const Jet2 re = f.comps[i].first.eval_jet(p);
    const Jet2 im = f.comps[i].second.eval_jet(p);
    j.value[i] = cd(re.value, im.value);
    for (int r = 0; r < 4; ++r) j.d[r][i] = cd(re.grad[r], im.grad[r]);
  }
  return j;
}

DiracField dirac_field_from_spinor(const CliffordField& psi, const Col4& u) {
  const auto& b = blade_matrices();
  DiracField f;
  for (int i = 0; i < 4; ++i) {
    ScalarExpr re, im;
    for (const auto& [m, e] : psi.components()) {
      const cd c = (b[m] * u)[i];
      if (c.real() != 0.0) re = re + ScalarExpr::number(c.real()) * e;
      if (c.imag() != 0.0) im = im + ScalarExpr::number(c.imag()) * e;
    }
    f.comps[i] = {re, im};
  }
  return f;
}

Col4 dirac_spinor_lie(const LieContext& ctx, const DiracJet& psi, DiracForm form) {
  if (form == DiracForm::Covariant) {
    const Mat4 D = covariant_derivative_frame(ctx.pg, ctx.xi, CurlRoute::Christoffel);
    const Col4 cov = directional(ctx, psi) + 0.5 * (represent(ctx.omega_xi) * psi.value);
    return cov + 0.125 * (pair_sum(D - D.transpose()) * psi.value);
  }
  const Multivector dxi = biform_dxi(ctx.pg, ctx.xi, CurlRoute::Frame);
  const Tensor3 w = omega_from_structure(ctx.pg.c);
  const auto f = frame_components(ctx.pg, ctx.xi);
  Mat4 A = Mat4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 4; ++k) A(a, b) += f[k] * w(a, k, b);
  return directional(ctx, psi) + 0.25 * (represent(dxi) * psi.value) + 0.25 * (pair_sum(A) * psi.value);
}

double cross_check(const LieContext& ctx, const CliffordField& psi) {
  const FieldJet pj = eval_field(psi, ctx.pg.p);
  const Mat4c lhs = represent(spinor_lie_left(ctx, pj));
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Col4 u = Col4::Unit(i);
    const DiracJet col = eval_dirac(dirac_field_from_spinor(psi, u), ctx.pg.p);
    for (DiracForm form : {DiracForm::Covariant, DiracForm::Connection}) {
      const Col4 diff = lhs * u - dirac_spinor_lie(ctx, col, form);
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace spinlie
