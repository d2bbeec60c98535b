#include "spinlie/clifford.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "spinlie/errors.hpp"

namespace spinlie {

namespace {

struct ProductEntry {
  BladeMask mask;
  double sign;
};

// Sign from reordering blade a * blade b into canonical order, times the
// eta factors of the generators that square out.
constexpr ProductEntry blade_product(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (int j = 0; j < kDim; ++j) {
    if (!(b & (1u << j))) continue;
    for (int i = j + 1; i < kDim; ++i) {
      if (a & (1u << i)) ++swaps;
    }
  }
  double sign = (swaps % 2) ? -1.0 : 1.0;
  const BladeMask common = a & b;
  for (int i = 0; i < kDim; ++i) {
    if (common & (1u << i)) sign *= eta(i);
  }
  return {a ^ b, sign};
}

using ProductTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

constexpr ProductTable make_table() {
  ProductTable t{};
  for (BladeMask a = 0; a < kBladeCount; ++a)
    for (BladeMask b = 0; b < kBladeCount; ++b) t[a][b] = blade_product(a, b);
  return t;
}

constexpr ProductTable kTable = make_table();

constexpr double reversion_sign(int k) { return ((k * (k - 1) / 2) % 2) ? -1.0 : 1.0; }

template <class Keep>
Multivector filtered_product(const Multivector& a, const Multivector& b, Keep keep) {
  Multivector r;
  auto& out = r.mutable_components();
  for (BladeMask i = 0; i < kBladeCount; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (BladeMask j = 0; j < kBladeCount; ++j) {
      const double bj = b[j];
      if (bj == 0.0 || !keep(i, j)) continue;
      const auto& e = kTable[i][j];
      out[e.mask] += e.sign * ai * bj;
    }
  }
  return r;
}

}  // namespace

std::string blade_key(BladeMask m) {
  if (m == 0) return "s";
  std::string s;
  for (int i = 0; i < kDim; ++i)
    if (m & (1u << i)) s.push_back(static_cast<char>('0' + i));
  return s;
}

BladeMask parse_blade_key(std::string_view key) {
  if (key == "s") return 0;
  if (key.empty() || key.size() > 4) throw InputError("invalid blade key '" + std::string(key) + "'");
  BladeMask m = 0;
  int last = -1;
  for (char ch : key) {
    const int i = ch - '0';
    if (i < 0 || i > 3 || i <= last) throw InputError("invalid blade key '" + std::string(key) + "'");
    m |= 1u << i;
    last = i;
  }
  return m;
}

const std::array<BladeMask, kBladeCount>& blades_by_grade() {
  static const std::array<BladeMask, kBladeCount> order = [] {
    std::array<BladeMask, kBladeCount> o{};
    int n = 0;
    for (int g = 0; g <= kDim; ++g)
      for (BladeMask m = 0; m < kBladeCount; ++m)
        if (blade_grade(m) == g) o[n++] = m;
    // within a grade, ascending mask order is not lexicographic for the keys
    // (e.g. "03" = 0b1001 sorts after "12" = 0b0110); fix by key.
    for (int i = 0; i < kBladeCount; ++i)
      for (int j = i + 1; j < kBladeCount; ++j)
        if (blade_grade(o[i]) == blade_grade(o[j]) && blade_key(o[j]) < blade_key(o[i]))
          std::swap(o[i], o[j]);
    return o;
  }();
  return order;
}

Multivector::Multivector(const Components& components) : c_(components) {
  for (double v : c_)
    if (!std::isfinite(v)) throw DomainError("multivector component is not finite");
}

Multivector Multivector::scalar(double s) { return blade(0, s); }

Multivector Multivector::basis(int a) {
  if (a < 0 || a >= kDim) throw DomainError("generator index out of range");
  return blade(1u << a);
}

Multivector Multivector::blade(BladeMask m, double coeff) {
  if (m >= kBladeCount) throw DomainError("blade mask out of range");
  Multivector r;
  r.c_[m] = coeff;
  return r;
}

bool Multivector::is_even(double tol) const {
  for (BladeMask m = 0; m < kBladeCount; ++m)
    if (blade_grade(m) % 2 && std::abs(c_[m]) > tol) return false;
  return true;
}

bool Multivector::is_homogeneous(int k, double tol) const {
  for (BladeMask m = 0; m < kBladeCount; ++m)
    if (blade_grade(m) != k && std::abs(c_[m]) > tol) return false;
  return true;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeMask, BladeMask) { return true; });
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector wedge(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeMask i, BladeMask j) { return (i & j) == 0; });
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeMask i, BladeMask j) { return (i & ~j) == 0; });
}

double scalar_product(const Multivector& a, const Multivector& b) {
  double s = 0.0;
  for (BladeMask i = 0; i < kBladeCount; ++i) s += kTable[i][i].sign * a[i] * b[i];
  return s;
}

Multivector grade(const Multivector& a, int k) {
  if (k < 0 || k > kDim) throw DomainError("grade index " + std::to_string(k) + " outside 0..4");
  Multivector r;
  for (BladeMask m = 0; m < kBladeCount; ++m)
    if (blade_grade(m) == k) r.mutable_components()[m] = a[m];
  return r;
}

Multivector reversion(const Multivector& a) {
  Multivector r = a;
  for (BladeMask m = 0; m < kBladeCount; ++m) r.mutable_components()[m] *= reversion_sign(blade_grade(m));
  return r;
}

Multivector commutator(const Multivector& a, const Multivector& b) { return a * b - b * a; }

double max_norm(const Multivector& a) {
  double n = 0.0;
  for (double v : a.components()) n = std::max(n, std::abs(v));
  return n;
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return max_norm(a - b); }

Multivector exp_bivector(const Multivector& F, double tol) {
  const double norm = max_norm(F);
  if (!F.is_homogeneous(2, 1e-12 * (1.0 + norm)))
    throw DomainError("exp_bivector: argument is not a pure bivector");
  Multivector B = grade(F, 2);

  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  B *= std::ldexp(1.0, -squarings);

  // With |B| <= 0.5 and 6 bivector components, |B^n| <= (6 * 0.5)^n loosely;
  // terms fall below tol long before 20.
  Multivector sum = Multivector::scalar(1.0);
  Multivector term = Multivector::scalar(1.0);
  for (int n = 1; n <= 20; ++n) {
    term = term * B;
    term *= 1.0 / n;
    sum += term;
    if (max_norm(term) < tol * 1e-3) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

PolarForm polar_decompose(const Multivector& psi, double zero_tol) {
  const double scale = max_norm(psi);
  if (!psi.is_even(1e-12 * (1.0 + scale))) throw DomainError("polar_decompose: spinor has odd-grade parts");
  const Multivector square = psi * reversion(psi);
  const double s = square[0];
  const double p = square[kPseudoscalar];
  const double rho = std::hypot(s, p);
  if (rho <= zero_tol * std::max(1.0, scale * scale)) throw SingularSpinor("psi psi~ vanishes; no polar form");

  // psi psi~ = rho (cos beta - tau sin beta)
  double beta = std::atan2(-p, s);
  if (beta <= -std::numbers::pi) beta = std::numbers::pi;

  // R = exp(+tau beta/2) psi / sqrt(rho); tau commutes with even elements.
  const Multivector phase = Multivector::scalar(std::cos(beta / 2)) +
                            Multivector::pseudoscalar() * std::sin(beta / 2);
  const Multivector rotor = phase * psi / std::sqrt(rho);
  return {rho, beta, rotor};
}

Multivector polar_reconstruct(const PolarForm& p) {
  const Multivector phase = Multivector::scalar(std::cos(p.beta / 2)) -
                            Multivector::pseudoscalar() * std::sin(p.beta / 2);
  return std::sqrt(p.rho) * (phase * p.rotor);
}

std::string to_string(const Multivector& m) {
  std::string out = "{";
  bool first = true;
  char buf[64];
  for (BladeMask b : blades_by_grade()) {
    if (m[b] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%.17g", m[b]);
    if (!first) out += ", ";
    out += "\"" + blade_key(b) + "\": " + buf;
    first = false;
  }
  return out + "}";
}

}  // namespace spinlie
