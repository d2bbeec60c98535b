#pragma once

// Complex 4x4 (Dirac basis) representation of Cl(1,3) and the column-spinor
// Lie derivative.
//
//   gamma^0 = diag(1, 1, -1, -1),  gamma^k = [[0, sigma_k], [-sigma_k, 0]]

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "spinlie/fields.hpp"
#include "spinlie/lieops.hpp"

namespace spinlie {

using Mat4c = Eigen::Matrix4cd;
using Col4 = Eigen::Vector4cd;

const std::array<Mat4c, 4>& gamma_matrices();
Mat4c represent(const Multivector& m);

// Column spinor field: (real, imaginary) expression per component.
struct DiracField {
  std::array<std::pair<ScalarExpr, ScalarExpr>, 4> comps;
};

struct DiracJet {
  Col4 value = Col4::Zero();
  std::array<Col4, 4> d{Col4::Zero(), Col4::Zero(), Col4::Zero(), Col4::Zero()};
};

DiracJet eval_dirac(const DiracField& f, const Point& p);

// Psi = rep(psi) u as an expression field.
DiracField dirac_field_from_spinor(const CliffordField& psi, const Col4& u);

enum class DiracForm {
  Covariant,   // D_xi Psi + 1/8 (D_a xi_b - D_b xi_a) g^a g^b Psi
  Connection,  // d_xi Psi + 1/4 rep(d xi) Psi + 1/4 xi^k omega_{akb} g^a g^b Psi
};

Col4 dirac_spinor_lie(const LieContext& ctx, const DiracJet& psi, DiracForm form = DiracForm::Covariant);

// max over basis columns u_i and both forms of
// |rep(s£ psi) u_i - dirac_spinor_lie(rep(psi) u_i)|
double cross_check(const LieContext& ctx, const CliffordField& psi);

}  // namespace spinlie
