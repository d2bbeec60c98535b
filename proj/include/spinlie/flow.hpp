#pragma once

// Integral curves of a vector field by classical RK4, with the variational
// equation for J = dx'/dx carried along.

#include "spinlie/geometry.hpp"

namespace spinlie {

struct FlowResult {
  Point x;  // h_t(p)
  Mat4 J;   // J(mu, nu) = d x'^mu / d x^nu
};

// Fixed step t/steps (steps >= 16, default 64). Throws FlowEscape with the
// exit time if an RK4 stage leaves the domain box.
FlowResult integrate_flow(const VectorField& xi, const Point& p, double t, const Box& domain, int steps = 64);

bool inside(const Box& box, const Point& p);

}  // namespace spinlie
