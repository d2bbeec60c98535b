#pragma once

// Derivative operators on Clifford and spinor fields at a point: the
// standard (Cartan) Lie derivative of forms, covariant derivatives, the
// spinor Lie derivative in its frame / covariant / coordinate forms, the
// spinor lift and checked frames.
//
// Sign convention: s£_xi psi = d_xi psi + 1/4 S(xi) psi with S = L + d xi.
// The covariant and coordinate forms below are written so that they equal
// this one identically.

#include <vector>

#include "spinlie/fields.hpp"
#include "spinlie/flow.hpp"
#include "spinlie/geometry.hpp"

namespace spinlie {

inline constexpr double kKillingTolerance = 1e-8;

// Everything the point-wise operators need about (geometry, xi) at p.
struct LieContext {
  PointGeometry pg;
  VectorAtPoint xi;
  Multivector S;        // L(xi) + d xi
  Multivector omega_xi;  // connection biform
  Multivector dxi;
};

LieContext make_context(const Geometry& geo, const VectorField& xi, const Point& p);

// xi^mu d_mu of the frame components.
Multivector directional(const LieContext& ctx, const FieldJet& f);

// (£_xi g)_{mn} = xi^s d_s g_mn + g_sn d_m xi^s + g_ms d_n xi^s, max-abs entry.
double killing_residual(const LieContext& ctx);
double killing_residual(const Geometry& geo, const VectorField& xi, const std::vector<Point>& sample);

// Cartan: £ A = xi _| dA + d(xi _| A) for a homogeneous form field.
// Throws DomainError otherwise.
Multivector lie_form_cartan(const LieContext& ctx, const CliffordField& A);

// 1/4 [S, gamma^a]; throws KillingViolation unless killing_residual <= 1e-8.
Multivector lie_cotetrad_killing(const LieContext& ctx, int alpha);

Multivector cov_deriv_clifford(const LieContext& ctx, const FieldJet& C);
Multivector cov_deriv_spinor(const LieContext& ctx, const FieldJet& psi);

Multivector spinor_lie_clifford(const LieContext& ctx, const FieldJet& C);
Multivector spinor_lie_left(const LieContext& ctx, const FieldJet& psi);
Multivector spinor_lie_right(const LieContext& ctx, const FieldJet& phi);

// D^s_xi psi + 1/8 (D_a xi_b - D_b xi_a) gamma^a gamma^b psi
Multivector spinor_lie_covariant(const LieContext& ctx, const FieldJet& psi);

// d_xi psi - 1/4 e_b^n { xi^m d_m h_an + h_am d_n xi^m } gamma^a ^ gamma^b psi
Multivector spinor_lie_coordinate(const LieContext& ctx, const FieldJet& psi);

// xi^m Gamma_{rmn} dx^r ^ dx^n rewritten in the frame; this term does not
// cancel by the symmetry of Gamma in general.
Multivector christoffel_term_biform(const LieContext& ctx);

// u_t = exp(-t S / 4)
Multivector spinor_lift(const LieContext& ctx, double t);

// u_t~ gamma^a u_t
Multivector checked_frame(const LieContext& ctx, int alpha, double t);

// Lambda(a, b): coefficient of gamma^b in the checked gamma^a.
Mat4 checked_frame_matrix(const LieContext& ctx, double t);

// max |Lambda eta Lambda^T - eta|
double checked_gram_residual(const LieContext& ctx, double t);

// max over t of max|g_check_t - g| / t in the frame (t = 0 entries skipped).
double spinor_lie_metric(const LieContext& ctx, const std::vector<double>& ts);

// Sigma(a, k) = 1/2 S . (gamma^a ^ gamma_k)
Mat4 sigma_matrix(const LieContext& ctx);

// psi gamma^a psi~
Multivector current_vector(const Multivector& psi, int alpha);

struct FlowOptions {
  int steps = 64;
  std::optional<Box> domain;  // defaults to the chart sample box
};

// sum_B C_B(h_t p) u_t~ gamma^B u_t
Multivector spinor_image(const Geometry& geo, const CliffordField& C, const VectorField& xi, const Point& p, double t,
                         const FlowOptions& opt = {});

// ---- helpers shared with the Dirac module --------------------------------

// Image of generator i is sum_j M(i, j) gamma^j, extended to all blades.
Multivector outermorphism(const Mat4& M, const Multivector& a);
// Metric-free interior product of a coordinate vector into a form written in
// the dx basis.
Multivector interior(const std::array<double, 4>& v, const Multivector& a);

}  // namespace spinlie
