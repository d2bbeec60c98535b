#include "spinlie/geometry.hpp"

#include <cmath>
#include <string>

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

double value_of(double v) { return v; }
double value_of(const Jet2& j) { return j.value; }

std::string point_text(const Point& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", p[0], p[1], p[2], p[3]);
  return buf;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

VectorAtPoint eval_vector(const VectorField& v, const Point& p) {
  VectorAtPoint out;
  for (int mu = 0; mu < 4; ++mu) {
    const Jet2 j = v.xi[mu].eval_jet(p);
    out.value[mu] = j.value;
    for (int r = 0; r < 4; ++r) out.d[r][mu] = j.grad[r];
  }
  return out;
}

template <class T>
std::array<std::array<T, 4>, 4> tetrad_from_metric_t(const std::array<std::array<T, 4>, 4>& g) {
  std::array<std::array<T, 4>, 4> L{};
  for (int j = 0; j < 4; ++j) {
    T r = g[j][j];
    for (int k = 0; k < j; ++k) r = r - L[j][k] * L[j][k] * eta(k);
    r = r * eta(j);
    if (!(value_of(r) > 0.0))
      throw SignatureError("metric signature is not (+,-,-,-): pivot " + std::to_string(j) + " is " +
                           std::to_string(value_of(r) * eta(j)));
    using std::sqrt;
    L[j][j] = sqrt(r);
    for (int i = j + 1; i < 4; ++i) {
      T s = g[i][j];
      for (int k = 0; k < j; ++k) s = s - L[i][k] * L[j][k] * eta(k);
      L[i][j] = s / (L[j][j] * eta(j));
    }
  }
  std::array<std::array<T, 4>, 4> h{};
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) h[a][mu] = L[mu][a];
  return h;
}

template std::array<std::array<double, 4>, 4> tetrad_from_metric_t(const std::array<std::array<double, 4>, 4>&);
template std::array<std::array<Jet2, 4>, 4> tetrad_from_metric_t(const std::array<std::array<Jet2, 4>, 4>&);

Mat4 tetrad_from_metric(const Mat4& g) {
  std::array<std::array<double, 4>, 4> a{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = g(i, j);
  const auto h = tetrad_from_metric_t(a);
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = h[i][j];
  return out;
}

Geometry::Geometry(Chart chart, ExprMatrix metric, std::optional<ExprMatrix> tetrad)
    : chart_(std::move(chart)), metric_(std::move(metric)), tetrad_(std::move(tetrad)) {}

void Geometry::metric_at(const Point& p, Mat4& g, std::array<Mat4, 4>& dg) const {
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const Jet2 j = metric_[m][n].eval_jet(p);
      g(m, n) = j.value;
      for (int r = 0; r < 4; ++r) dg[r](m, n) = j.grad[r];
    }
}

Tensor3 christoffel(const Mat4& g, const std::array<Mat4, 4>& dg) {
  Eigen::FullPivLU<Mat4> lu(g);
  const double scale = std::max(1.0, max_abs(g));
  if (!lu.isInvertible() || std::abs(lu.determinant()) <= 1e-14 * std::pow(scale, 4))
    throw SingularMetric("metric is singular");
  const Mat4 ginv = lu.inverse();
  Tensor3 G;
  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = m; n < 4; ++n) {
        double s = 0.0;
        for (int q = 0; q < 4; ++q) s += ginv(r, q) * (dg[m](n, q) + dg[n](q, m) - dg[q](m, n));
        G(r, m, n) = G(r, n, m) = 0.5 * s;
      }
  return G;
}

Tensor3 christoffel(const Geometry& geo, const Point& p) {
  Mat4 g;
  std::array<Mat4, 4> dg;
  geo.metric_at(p, g, dg);
  try {
    return christoffel(g, dg);
  } catch (const SingularMetric&) {
    throw SingularMetric("metric is singular at " + point_text(p));
  }
}

Tensor3 spin_connection(const Mat4& h, const Mat4& e, const std::array<Mat4, 4>& dh, const Tensor3& Gamma) {
  Tensor3 w;
  double scale = 1.0;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int n = 0; n < 4; ++n) {
          double t = -dh[m](a, n);
          for (int q = 0; q < 4; ++q) t += h(a, q) * Gamma(q, m, n);
          s += t * e(n, b);
        }
        w(a, m, b) = eta(a) * s;
        scale = std::max(scale, std::abs(w(a, m, b)));
      }
  double asym = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b) asym = std::max(asym, std::abs(w(a, m, b) + w(b, m, a)));
  if (asym > 1e-8 * scale)
    throw TetradMismatch("spin connection not antisymmetric (residual " + std::to_string(asym) +
                         "); tetrad derivatives disagree with the metric");
  return w;
}

Tensor3 structure_coefficients(const Mat4& h, const Mat4& e, const std::array<Mat4, 4>& de) {
  Tensor3 c;
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int n = 0; n < 4; ++n) {
          double br = 0.0;
          for (int m = 0; m < 4; ++m) br += e(m, k) * de[m](n, i) - e(m, i) * de[m](n, k);
          s += h(a, n) * br;
        }
        c(a, k, i) = s;
      }
  return c;
}

Tensor3 omega_from_structure(const Tensor3& c) {
  Tensor3 w;
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        w(a, k, i) = 0.5 * (eta(a) * c(a, k, i) + eta(k) * c(k, a, i) + eta(i) * c(i, a, k));
  return w;
}

PointGeometry Geometry::at(const Point& p) const {
  PointGeometry pg;
  pg.p = p;
  metric_at(p, pg.g, pg.dg);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (!std::isfinite(pg.g(m, n))) throw SingularMetric("metric is not finite at " + point_text(p));

  try {
    pg.Gamma = christoffel(pg.g, pg.dg);
  } catch (const SingularMetric&) {
    throw SingularMetric("metric is singular at " + point_text(p));
  }
  pg.ginv = pg.g.inverse();

  if (tetrad_) {
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) {
        const Jet2 j = (*tetrad_)[a][m].eval_jet(p);
        pg.h(a, m) = j.value;
        for (int r = 0; r < 4; ++r) pg.dh[r](a, m) = j.grad[r];
      }
  } else {
    std::array<std::array<Jet2, 4>, 4> gj{};
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) gj[m][n] = metric_[m][n].eval_jet(p);
    std::array<std::array<Jet2, 4>, 4> hj;
    try {
      hj = tetrad_from_metric_t(gj);
    } catch (const SignatureError& err) {
      throw SignatureError(std::string(err.what()) + " at " + point_text(p));
    }
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) {
        pg.h(a, m) = hj[a][m].value;
        for (int r = 0; r < 4; ++r) pg.dh[r](a, m) = hj[a][m].grad[r];
      }
  }

  Eigen::FullPivLU<Mat4> lu(pg.h);
  if (!lu.isInvertible()) throw TetradMismatch("tetrad is singular at " + point_text(p));
  pg.e = lu.inverse();
  for (int r = 0; r < 4; ++r) pg.de[r] = -pg.e * pg.dh[r] * pg.e;

  const double recon = metric_reconstruction_residual(pg);
  if (recon > 1e-10 * std::max(1.0, max_abs(pg.g)))
    throw TetradMismatch("eta h h != g at " + point_text(p) + " (residual " + std::to_string(recon) + ")");

  pg.omega = spin_connection(pg.h, pg.e, pg.dh, pg.Gamma);
  pg.c = structure_coefficients(pg.h, pg.e, pg.de);
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 4; ++k)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int m = 0; m < 4; ++m) s += pg.e(m, k) * pg.omega(a, m, b);
        pg.omega_frame(a, k, b) = s;
      }
  return pg;
}

double connection_check(const PointGeometry& pg) {
  const Tensor3 wc = omega_from_structure(pg.c);
  double r = 0.0;
  for (int i = 0; i < 64; ++i) r = std::max(r, std::abs(wc.v[i] - pg.omega_frame.v[i]));
  return r;
}

double tetrad_postulate_residual(const PointGeometry& pg) {
  const Tensor3 wc = omega_from_structure(pg.c);
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double s = pg.dh[m](a, n);
        for (int b = 0; b < 4; ++b) {
          // omega^a_{mb} = eta^aa h^k_m omega_{akb}
          double w = 0.0;
          for (int k = 0; k < 4; ++k) w += pg.h(k, m) * wc(a, k, b);
          s += eta(a) * w * pg.h(b, n);
        }
        for (int q = 0; q < 4; ++q) s -= pg.h(a, q) * pg.Gamma(q, m, n);
        r = std::max(r, std::abs(s));
      }
  return r;
}

double metric_reconstruction_residual(const PointGeometry& pg) {
  double r = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += eta(a) * pg.h(a, m) * pg.h(a, n);
      r = std::max(r, std::abs(s - pg.g(m, n)));
    }
  return r;
}

std::array<double, 4> frame_components(const PointGeometry& pg, const VectorAtPoint& xi) {
  std::array<double, 4> f{};
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) f[a] += pg.h(a, m) * xi.value[m];
  return f;
}

Multivector bivector_from(const Mat4& m) {
  Multivector B;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) B.mutable_components()[(1u << a) | (1u << b)] = m(a, b);
  return B;
}

Multivector biform_L(const PointGeometry& pg, const VectorAtPoint& xi) {
  const auto f = frame_components(pg, xi);
  Mat4 A = Mat4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        A(a, i) += (eta(a) * pg.c(a, k, i) + eta(k) * pg.c(k, a, i) + eta(i) * pg.c(i, a, k)) * f[k];
  // the full double sum over (a, i) of an antisymmetric coefficient counts
  // each blade twice, which cancels the 1/2
  return bivector_from(A);
}

Multivector connection_biform(const PointGeometry& pg, const VectorAtPoint& xi) {
  const auto f = frame_components(pg, xi);
  Mat4 A = Mat4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 4; ++k) A(a, b) += f[k] * pg.omega_frame(a, k, b);
  return bivector_from(A);
}

Mat4 covariant_derivative_frame(const PointGeometry& pg, const VectorAtPoint& xi, CurlRoute route) {
  Mat4 D = Mat4::Zero();
  if (route == CurlRoute::Christoffel) {
    // xi_n = g_nr xi^r;  D_m xi_n = d_m xi_n - Gamma^r_mn xi_r
    std::array<double, 4> low{};
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r) low[n] += pg.g(n, r) * xi.value[r];
    Mat4 Dc;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r) s += pg.dg[m](n, r) * xi.value[r] + pg.g(n, r) * xi.d[m][r];
        for (int r = 0; r < 4; ++r) s -= pg.Gamma(r, m, n) * low[r];
        Dc(m, n) = s;
      }
    D = pg.e.transpose() * Dc * pg.e;
  } else {
    // frame components xi_b = eta_bb h^b_n xi^n; D_a xi_b = e_a(xi_b) - omega_{cab} xi^c
    const Tensor3 w = omega_from_structure(pg.c);
    const auto f = frame_components(pg, xi);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int m = 0; m < 4; ++m) {
          double dxb = 0.0;  // d_m (h^b_n xi^n)
          for (int n = 0; n < 4; ++n) dxb += pg.dh[m](b, n) * xi.value[n] + pg.h(b, n) * xi.d[m][n];
          s += pg.e(m, a) * eta(b) * dxb;
        }
        for (int c = 0; c < 4; ++c) s -= w(c, a, b) * f[c];
        D(a, b) = s;
      }
  }
  return D;
}

Multivector biform_dxi(const PointGeometry& pg, const VectorAtPoint& xi, CurlRoute route) {
  const Mat4 D = covariant_derivative_frame(pg, xi, route);
  return bivector_from(D - D.transpose());
}

Multivector biform_S(const PointGeometry& pg, const VectorAtPoint& xi) { return biform_L(pg, xi) + biform_dxi(pg, xi); }

}  // namespace spinlie
