#pragma once

// Second-order forward-mode jets over the four chart coordinates.

#include <array>
#include <cmath>

namespace spinlie {

using Point = std::array<double, 4>;

// Packed index of the symmetric Hessian entry (i,j).
constexpr int hess_index(int i, int j) {
  if (i > j) {
    const int t = i;
    i = j;
    j = t;
  }
  // rows of the upper triangle: 0:4 entries, 1:3, 2:2, 3:1
  constexpr int row_start[4] = {0, 4, 7, 9};
  return row_start[i] + (j - i);
}

struct Jet2 {
  double value = 0.0;
  std::array<double, 4> grad{};
  std::array<double, 10> hess_packed{};

  constexpr Jet2() = default;
  constexpr Jet2(double v) : value(v) {}  // NOLINT: constants promote implicitly

  static Jet2 variable(int i, double v) {
    Jet2 j(v);
    j.grad[i] = 1.0;
    return j;
  }

  double hess(int i, int j) const { return hess_packed[hess_index(i, j)]; }

  // f(u) lifted through the chain rule given f, f', f'' at u.
  Jet2 chain(double f, double df, double d2f) const {
    Jet2 r(f);
    for (int i = 0; i < 4; ++i) r.grad[i] = df * grad[i];
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const int k = hess_index(i, j);
        r.hess_packed[k] = df * hess_packed[k] + d2f * grad[i] * grad[j];
      }
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    for (int i = 0; i < 4; ++i) grad[i] += o.grad[i];
    for (int k = 0; k < 10; ++k) hess_packed[k] += o.hess_packed[k];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value -= o.value;
    for (int i = 0; i < 4; ++i) grad[i] -= o.grad[i];
    for (int k = 0; k < 10; ++k) hess_packed[k] -= o.hess_packed[k];
    return *this;
  }
  Jet2& operator*=(double s) {
    value *= s;
    for (double& g : grad) g *= s;
    for (double& h : hess_packed) h *= s;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator-(Jet2 a) { return a *= -1.0; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.value * b.value);
    for (int i = 0; i < 4; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const int k = hess_index(i, j);
        r.hess_packed[k] = a.value * b.hess_packed[k] + b.value * a.hess_packed[k] +
                           a.grad[i] * b.grad[j] + a.grad[j] * b.grad[i];
      }
    return r;
  }

  // Caller guarantees b.value != 0.
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double v = b.value;
    return a * b.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
  }
};

// Unchecked elementary functions; symexpr performs the domain checks.
inline Jet2 sqrt(const Jet2& u) {
  const double s = std::sqrt(u.value);
  return u.chain(s, 0.5 / s, -0.25 / (s * u.value));
}
inline Jet2 sin(const Jet2& u) {
  const double s = std::sin(u.value), c = std::cos(u.value);
  return u.chain(s, c, -s);
}
inline Jet2 cos(const Jet2& u) {
  const double s = std::sin(u.value), c = std::cos(u.value);
  return u.chain(c, -s, -c);
}
inline Jet2 tan(const Jet2& u) {
  const double t = std::tan(u.value);
  const double sec2 = 1.0 + t * t;
  return u.chain(t, sec2, 2.0 * t * sec2);
}
inline Jet2 sinh(const Jet2& u) {
  const double s = std::sinh(u.value), c = std::cosh(u.value);
  return u.chain(s, c, s);
}
inline Jet2 cosh(const Jet2& u) {
  const double s = std::sinh(u.value), c = std::cosh(u.value);
  return u.chain(c, s, c);
}
inline Jet2 tanh(const Jet2& u) {
  const double t = std::tanh(u.value);
  const double d = 1.0 - t * t;
  return u.chain(t, d, -2.0 * t * d);
}
inline Jet2 exp(const Jet2& u) {
  const double e = std::exp(u.value);
  return u.chain(e, e, e);
}
inline Jet2 log(const Jet2& u) {
  const double v = u.value;
  return u.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}
inline Jet2 atan(const Jet2& u) {
  const double v = u.value;
  const double d = 1.0 / (1.0 + v * v);
  return u.chain(std::atan(v), d, -2.0 * v * d * d);
}

}  // namespace spinlie
