#pragma once

// Point-wise Lorentzian geometry from expression data.
//
// Index conventions (fixed everywhere in the library):
//   h(a, mu)        = h^a_mu       cotetrad, gamma^a = h^a_mu dx^mu
//   e(mu, a)        = e_a^mu       inverse, e_a = e_a^mu d_mu
//   dh[r](a, mu)    = d_r h^a_mu
//   Gamma(r, m, n)  = Gamma^r_{mn}
//   omega(a, m, b)  = omega_{a m b}  (a, b frame; m coordinate), with
//                     D_{d_m} e_b = eta^{aa} omega_{amb} e_a
//   c(a, k, i)      = c^a_{ki},  [e_k, e_i] = c^a_{ki} e_a

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "spinlie/clifford.hpp"
#include "spinlie/jet.hpp"
#include "spinlie/symexpr.hpp"

namespace spinlie {

using Mat4 = Eigen::Matrix4d;
using ExprMatrix = std::array<std::array<ScalarExpr, 4>, 4>;

struct Interval {
  double lo = 0.0, hi = 0.0;
};
using Box = std::array<Interval, 4>;

struct Chart {
  CoordinateNames names;
  Box box;
};

// Dense rank-3 array, all indices 0..3.
struct Tensor3 {
  std::array<double, 64> v{};
  double& operator()(int i, int j, int k) { return v[16 * i + 4 * j + k]; }
  double operator()(int i, int j, int k) const { return v[16 * i + 4 * j + k]; }
};

struct VectorField {
  std::array<ScalarExpr, 4> xi;  // coordinate components xi^mu
};

struct VectorAtPoint {
  std::array<double, 4> value{};            // xi^mu
  std::array<std::array<double, 4>, 4> d{};  // d[r][mu] = d_r xi^mu
};

VectorAtPoint eval_vector(const VectorField& v, const Point& p);

// Lorentzian Cholesky: g = L diag(eta) L^T with L lower triangular and
// positive diagonal; returns h with h(a, mu) = L(mu, a). Templated so the
// same code differentiates itself when fed jets.
template <class T>
std::array<std::array<T, 4>, 4> tetrad_from_metric_t(const std::array<std::array<T, 4>, 4>& g);

// Throws SignatureError when the signature is not (+,-,-,-).
Mat4 tetrad_from_metric(const Mat4& g);

struct PointGeometry {
  Point p{};
  Mat4 g, ginv;
  std::array<Mat4, 4> dg;  // dg[r](m, n) = d_r g_mn
  Tensor3 Gamma;
  Mat4 h, e;
  std::array<Mat4, 4> dh, de;
  Tensor3 omega;        // omega_{a m b}, tetrad-postulate route
  Tensor3 c;            // c^a_{ki}
  Tensor3 omega_frame;  // omega_{a k b} = e_k^m omega_{amb}
};

class Geometry {
 public:
  // No tetrad: derived by tetrad_from_metric at every point (with derivatives).
  Geometry(Chart chart, ExprMatrix metric, std::optional<ExprMatrix> tetrad = std::nullopt);

  const Chart& chart() const { return chart_; }
  const ExprMatrix& metric() const { return metric_; }
  const std::optional<ExprMatrix>& tetrad() const { return tetrad_; }

  // Throws SingularMetric, SignatureError, TetradMismatch or DomainError.
  PointGeometry at(const Point& p) const;

  // Metric and first derivatives only (no tetrad work).
  void metric_at(const Point& p, Mat4& g, std::array<Mat4, 4>& dg) const;

 private:
  Chart chart_;
  ExprMatrix metric_;
  std::optional<ExprMatrix> tetrad_;
};

// Gamma^r_{mn} = 1/2 g^{rs}(d_m g_ns + d_n g_sm - d_s g_mn). Throws SingularMetric.
Tensor3 christoffel(const Geometry& geo, const Point& p);
Tensor3 christoffel(const Mat4& g, const std::array<Mat4, 4>& dg);

// omega_{amb} from d_m h^a_n + omega^a_{mb} h^b_n - h^a_s Gamma^s_{mn} = 0.
// Throws TetradMismatch if the result is not antisymmetric in (a, b).
Tensor3 spin_connection(const Mat4& h, const Mat4& e, const std::array<Mat4, 4>& dh, const Tensor3& Gamma);

// c^a_{ki} = h^a_n (e_k^m d_m e_i^n - e_i^m d_m e_k^n).
Tensor3 structure_coefficients(const Mat4& h, const Mat4& e, const std::array<Mat4, 4>& de);

// omega_{aki} = 1/2 (c_{aki} + c_{kai} + c_{iak}), c_{aki} = eta_aa c^a_{ki}.
Tensor3 omega_from_structure(const Tensor3& c);

// max |omega from c - omega from Gamma transported to frame indices|.
double connection_check(const PointGeometry& pg);

// max |d_m h^a_n + omega^a_{mb} h^b_n - h^a_s Gamma^s_{mn}| with omega taken
// from the structure coefficients.
double tetrad_postulate_residual(const PointGeometry& pg);

// max |eta_ab h^a_m h^b_n - g_mn|.
double metric_reconstruction_residual(const PointGeometry& pg);

// xi^a = h^a_mu xi^mu
std::array<double, 4> frame_components(const PointGeometry& pg, const VectorAtPoint& xi);

Multivector biform_L(const PointGeometry& pg, const VectorAtPoint& xi);
Multivector connection_biform(const PointGeometry& pg, const VectorAtPoint& xi);

enum class CurlRoute { Christoffel, Frame };
// D_a xi_b (frame indices, lowered); the antisymmetric part builds d xi.
Mat4 covariant_derivative_frame(const PointGeometry& pg, const VectorAtPoint& xi,
                                CurlRoute route = CurlRoute::Christoffel);
// d xi = 1/2 (D_a xi_b - D_b xi_a) gamma^a ^ gamma^b
Multivector biform_dxi(const PointGeometry& pg, const VectorAtPoint& xi,
                       CurlRoute route = CurlRoute::Christoffel);
Multivector biform_S(const PointGeometry& pg, const VectorAtPoint& xi);

// Bivector sum_{a<b} M(a,b) gamma^a ^ gamma^b.
Multivector bivector_from(const Mat4& m);

}  // namespace spinlie
