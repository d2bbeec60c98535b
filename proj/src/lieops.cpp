#include "spinlie/lieops.hpp"

#include <cmath>

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

// A form in the dx basis together with its coordinate partials.
struct MvJet {
  Multivector v;
  std::array<Multivector, 4> d;
};

MvJet wedge(const MvJet& a, const MvJet& b) {
  MvJet r;
  r.v = wedge(a.v, b.v);
  for (int k = 0; k < 4; ++k) r.d[k] = wedge(a.d[k], b.v) + wedge(a.v, b.d[k]);
  return r;
}

Multivector dx(int mu) { return Multivector::basis(mu); }

// gamma^B = h^{b1}_m dx^m ^ ... in the dx basis.
MvJet coframe_blade(const PointGeometry& pg, BladeMask B) {
  MvJet r;
  r.v = Multivector::scalar(1.0);
  for (int b = 0; b < 4; ++b) {
    if (!(B & (1u << b))) continue;
    MvJet g;
    for (int m = 0; m < 4; ++m) {
      g.v += pg.h(b, m) * dx(m);
      for (int k = 0; k < 4; ++k) g.d[k] += pg.dh[k](b, m) * dx(m);
    }
    r = wedge(r, g);
  }
  return r;
}

Multivector exterior(const std::array<Multivector, 4>& partials) {
  Multivector r;
  for (int k = 0; k < 4; ++k) r += wedge(dx(k), partials[k]);
  return r;
}

Multivector literal_curl_product(const Mat4& D, const Multivector& psi) {
  // 1/8 sum_{a,b} (D_ab - D_ba) gamma^a gamma^b psi
  Multivector acc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double w = D(a, b) - D(b, a);
      if (w != 0.0) acc += w * (Multivector::basis(a) * Multivector::basis(b));
    }
  return 0.125 * (acc * psi);
}

}  // namespace

Multivector interior(const std::array<double, 4>& v, const Multivector& a) {
  Multivector r;
  for (BladeMask m = 1; m < kBladeCount; ++m) {
    const double c = a[m];
    if (c == 0.0) continue;
    int pos = 0;
    for (int i = 0; i < 4; ++i) {
      if (!(m & (1u << i))) continue;
      const double s = (pos % 2) ? -1.0 : 1.0;
      r.mutable_components()[m & ~(1u << i)] += s * v[i] * c;
      ++pos;
    }
  }
  return r;
}

Multivector outermorphism(const Mat4& M, const Multivector& a) {
  Multivector r;
  for (BladeMask m = 0; m < kBladeCount; ++m) {
    const double c = a[m];
    if (c == 0.0) continue;
    Multivector img = Multivector::scalar(c);
    for (int i = 0; i < 4; ++i) {
      if (!(m & (1u << i))) continue;
      Multivector gi;
      for (int j = 0; j < 4; ++j) gi += M(i, j) * Multivector::basis(j);
      img = wedge(img, gi);
    }
    r += img;
  }
  return r;
}

LieContext make_context(const Geometry& geo, const VectorField& xi, const Point& p) {
  LieContext ctx;
  ctx.pg = geo.at(p);
  ctx.xi = eval_vector(xi, p);
  ctx.dxi = biform_dxi(ctx.pg, ctx.xi);
  ctx.S = biform_L(ctx.pg, ctx.xi) + ctx.dxi;
  ctx.omega_xi = connection_biform(ctx.pg, ctx.xi);
  return ctx;
}

Multivector directional(const LieContext& ctx, const FieldJet& f) {
  Multivector r;
  for (int m = 0; m < 4; ++m) r += ctx.xi.value[m] * f.d[m];
  return r;
}

double killing_residual(const LieContext& ctx) {
  const auto& g = ctx.pg.g;
  const auto& dg = ctx.pg.dg;
  const auto& x = ctx.xi;
  double r = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int q = 0; q < 4; ++q) s += x.value[q] * dg[q](m, n) + g(q, n) * x.d[m][q] + g(m, q) * x.d[n][q];
      r = std::max(r, std::abs(s));
    }
  return r;
}

double killing_residual(const Geometry& geo, const VectorField& xi, const std::vector<Point>& sample) {
  double r = 0.0;
  for (const Point& p : sample) {
    LieContext ctx;
    geo.metric_at(p, ctx.pg.g, ctx.pg.dg);
    ctx.xi = eval_vector(xi, p);
    r = std::max(r, killing_residual(ctx));
  }
  return r;
}

Multivector lie_form_cartan(const LieContext& ctx, const CliffordField& A) {
  if (A.homogeneous_grade() < 0) throw DomainError("Cartan Lie derivative needs a homogeneous form field");
  const PointGeometry& pg = ctx.pg;

  MvJet a;
  for (const auto& [B, expr] : A.components()) {
    const Jet2 c = expr.eval_jet(pg.p);
    const MvJet g = coframe_blade(pg, B);
    a.v += c.value * g.v;
    for (int k = 0; k < 4; ++k) a.d[k] += c.grad[k] * g.v + c.value * g.d[k];
  }

  const auto& xi = ctx.xi.value;
  const Multivector xi_dA = interior(xi, exterior(a.d));

  std::array<Multivector, 4> d_iA;
  for (int k = 0; k < 4; ++k) d_iA[k] = interior(ctx.xi.d[k], a.v) + interior(xi, a.d[k]);
  const Multivector d_xiA = exterior(d_iA);

  // dx^mu = e_b^mu gamma^b
  return outermorphism(pg.e, xi_dA + d_xiA);
}

Multivector lie_cotetrad_killing(const LieContext& ctx, int alpha) {
  const double res = killing_residual(ctx);
  if (res > kKillingTolerance) throw KillingViolation(res);
  return 0.25 * commutator(ctx.S, Multivector::basis(alpha));
}

Multivector cov_deriv_clifford(const LieContext& ctx, const FieldJet& C) {
  return directional(ctx, C) + 0.5 * commutator(ctx.omega_xi, C.value);
}

Multivector cov_deriv_spinor(const LieContext& ctx, const FieldJet& psi) {
  return directional(ctx, psi) + 0.5 * (ctx.omega_xi * psi.value);
}

Multivector spinor_lie_clifford(const LieContext& ctx, const FieldJet& C) {
  return directional(ctx, C) + 0.25 * commutator(ctx.S, C.value);
}

Multivector spinor_lie_left(const LieContext& ctx, const FieldJet& psi) {
  return directional(ctx, psi) + 0.25 * (ctx.S * psi.value);
}

Multivector spinor_lie_right(const LieContext& ctx, const FieldJet& phi) {
  return directional(ctx, phi) - 0.25 * (phi.value * ctx.S);
}

Multivector spinor_lie_covariant(const LieContext& ctx, const FieldJet& psi) {
  const Mat4 D = covariant_derivative_frame(ctx.pg, ctx.xi, CurlRoute::Frame);
  return cov_deriv_spinor(ctx, psi) + literal_curl_product(D, psi.value);
}

Multivector spinor_lie_coordinate(const LieContext& ctx, const FieldJet& psi) {
  const PointGeometry& pg = ctx.pg;
  const auto& xi = ctx.xi;
  Mat4 B = Mat4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int n = 0; n < 4; ++n) {
        double brace = 0.0;
        for (int m = 0; m < 4; ++m)
          brace += eta(a) * (xi.value[m] * pg.dh[m](a, n) + pg.h(a, m) * xi.d[n][m]);
        s += pg.e(n, b) * brace;
      }
      B(a, b) = s;
    }
  // sum over all (a, b) of B_ab gamma^a ^ gamma^b
  const Multivector biform = bivector_from(B - B.transpose());
  return directional(ctx, psi) - 0.25 * (biform * psi.value);
}

Multivector christoffel_term_biform(const LieContext& ctx) {
  const PointGeometry& pg = ctx.pg;
  Mat4 K = Mat4::Zero();  // K_rn = xi^m g_rs Gamma^s_mn
  for (int r = 0; r < 4; ++r)
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 4; ++m)
        for (int s = 0; s < 4; ++s) K(r, n) += ctx.xi.value[m] * pg.g(r, s) * pg.Gamma(s, m, n);
  const Mat4 F = pg.e.transpose() * K * pg.e;
  return bivector_from(F - F.transpose());
}

Multivector spinor_lift(const LieContext& ctx, double t) { return exp_bivector(-0.25 * t * ctx.S); }

Multivector checked_frame(const LieContext& ctx, int alpha, double t) {
  const Multivector u = spinor_lift(ctx, t);
  return reversion(u) * Multivector::basis(alpha) * u;
}

Mat4 checked_frame_matrix(const LieContext& ctx, double t) {
  const Multivector u = spinor_lift(ctx, t);
  const Multivector ut = reversion(u);
  Mat4 L;
  for (int a = 0; a < 4; ++a) {
    const Multivector g = ut * Multivector::basis(a) * u;
    for (int b = 0; b < 4; ++b) L(a, b) = g[1u << b];
  }
  return L;
}

namespace {
const Mat4 kEta = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
}

double checked_gram_residual(const LieContext& ctx, double t) {
  const Mat4 L = checked_frame_matrix(ctx, t);
  return (L * kEta * L.transpose() - kEta).cwiseAbs().maxCoeff();
}

double spinor_lie_metric(const LieContext& ctx, const std::vector<double>& ts) {
  double worst = 0.0;
  for (double t : ts) {
    if (t == 0.0) continue;
    const Mat4 L = checked_frame_matrix(ctx, t);
    worst = std::max(worst, (L.transpose() * kEta * L - kEta).cwiseAbs().maxCoeff() / std::abs(t));
  }
  return worst;
}

Mat4 sigma_matrix(const LieContext& ctx) {
  Mat4 s;
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 4; ++k)
      s(a, k) = 0.5 * scalar_product(ctx.S, wedge(Multivector::basis(a), eta(k) * Multivector::basis(k)));
  return s;
}

Multivector current_vector(const Multivector& psi, int alpha) {
  return psi * Multivector::basis(alpha) * reversion(psi);
}

Multivector spinor_image(const Geometry& geo, const CliffordField& C, const VectorField& xi, const Point& p, double t,
                         const FlowOptions& opt) {
  const LieContext ctx = make_context(geo, xi, p);
  const FlowResult flow = integrate_flow(xi, p, t, opt.domain.value_or(geo.chart().box), opt.steps);
  const Multivector moved = eval_field(C, flow.x).value;
  const Multivector u = spinor_lift(ctx, t);
  return reversion(u) * moved * u;
}

}  // namespace spinlie
