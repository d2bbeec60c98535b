#include "spinlie/flow.hpp"

#include <cmath>

#include "spinlie/errors.hpp"

namespace spinlie {

bool inside(const Box& box, const Point& p) {
  for (int i = 0; i < 4; ++i)
    if (!(p[i] >= box[i].lo && p[i] <= box[i].hi)) return false;
  return true;
}

namespace {

struct State {
  Eigen::Vector4d x;
  Mat4 J;
};

State rhs(const VectorField& xi, const State& s, const Box& box, double time) {
  const Point p{s.x[0], s.x[1], s.x[2], s.x[3]};
  if (!inside(box, p)) throw FlowEscape(time);
  const VectorAtPoint v = eval_vector(xi, p);
  State d;
  Mat4 A;  // A(mu, r) = d_r xi^mu
  for (int mu = 0; mu < 4; ++mu) {
    d.x[mu] = v.value[mu];
    for (int r = 0; r < 4; ++r) A(mu, r) = v.d[r][mu];
  }
  d.J = A * s.J;
  return d;
}

}  // namespace

FlowResult integrate_flow(const VectorField& xi, const Point& p, double t, const Box& domain, int steps) {
  if (steps < 16) throw DomainError("flow integration needs at least 16 steps");
  if (!std::isfinite(t)) throw DomainError("flow parameter is not finite");
  State s{Eigen::Vector4d(p[0], p[1], p[2], p[3]), Mat4::Identity()};
  const double h = t / steps;
  for (int n = 0; n < steps; ++n) {
    const double t0 = n * h;
    const State k1 = rhs(xi, s, domain, t0);
    const State k2 = rhs(xi, {s.x + 0.5 * h * k1.x, s.J + 0.5 * h * k1.J}, domain, t0 + 0.5 * h);
    const State k3 = rhs(xi, {s.x + 0.5 * h * k2.x, s.J + 0.5 * h * k2.J}, domain, t0 + 0.5 * h);
    const State k4 = rhs(xi, {s.x + h * k3.x, s.J + h * k3.J}, domain, t0 + h);
    s.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    s.J += h / 6.0 * (k1.J + 2.0 * k2.J + 2.0 * k3.J + k4.J);
  }
  const Point end{s.x[0], s.x[1], s.x[2], s.x[3]};
  if (!inside(domain, end)) throw FlowEscape(t);
  return {end, s.J};
}

}  // namespace spinlie
