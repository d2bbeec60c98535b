#pragma once

// Name-based entry points shared by the command line and the Python module:
// look up a scene's vector field / target and evaluate one operator.

#include <string>
#include <vector>

#include "spinlie/diracrep.hpp"
#include "spinlie/lieops.hpp"
#include "spinlie/scene.hpp"

namespace spinlie {

enum class LieMode {
  Cartan,            // standard Lie derivative of a homogeneous form
  Covariant,         // D_xi C, or D^s_xi psi for even targets
  Spinor,            // Clifford-field rule, left action for even targets
  SpinorClifford,    // Clifford-field rule regardless of parity
  SpinorRight,       // right action
  SpinorCovariant,   // covariant-derivative form
  SpinorCoordinate,  // coordinate form
  Dirac,             // column spinors in the Dirac representation
};

// Throws InputError for an unknown name.
LieMode parse_lie_mode(const std::string& s);
const char* lie_mode_name(LieMode m);

// Throws InputError when the name is not in the scene.
const VectorField& find_vector(const Scene& scene, const std::string& name);
// "gamma0".."gamma3" or "field:NAME".
CliffordField find_target(const Scene& scene, const std::string& target);

// Throws InputError for mode / target mismatches (Dirac and the pure
// spinor modes need an even target; use dirac_lie_at for Dirac).
Multivector lie_at(const Scene& scene, const std::string& xi, const std::string& target, const Point& p,
                   LieMode mode);

// Columns rep(psi) u_i pushed through the column formula, i = 0..3.
std::vector<Col4> dirac_lie_at(const Scene& scene, const std::string& xi, const std::string& target, const Point& p,
                               DiracForm form = DiracForm::Covariant);

struct LiftResult {
  Multivector u;
  std::array<Multivector, 4> checked_frame;
  double gram_residual = 0.0;
  Mat4 lambda;
};

LiftResult lift_at(const Scene& scene, const std::string& xi, const Point& p, double t);

}  // namespace spinlie
