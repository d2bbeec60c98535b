#pragma once

// Real Clifford algebra Cl(1,3) with metric eta = diag(+1,-1,-1,-1).
//
// Blades are indexed by a 4-bit mask: bit i set means the generator gamma^i
// takes part, factors always in ascending order. Storage is dense (16 reals).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace spinlie {

using BladeMask = unsigned;

inline constexpr int kDim = 4;
inline constexpr int kBladeCount = 16;
inline constexpr BladeMask kPseudoscalar = 0b1111;

// eta_{aa} (and eta^{aa}, the matrix is its own inverse).
constexpr double eta(int a) { return a == 0 ? 1.0 : -1.0; }

constexpr int blade_grade(BladeMask m) {
  return static_cast<int>((m & 1u) + ((m >> 1) & 1u) + ((m >> 2) & 1u) + ((m >> 3) & 1u));
}

// Textual key: "s" for the scalar, otherwise the ascending index digits.
std::string blade_key(BladeMask m);
// Throws InputError on anything that is not one of the 16 canonical keys.
BladeMask parse_blade_key(std::string_view key);

// Canonical ordering used for text output: grade first, then lexicographic
// ("s","0","1","2","3","01",...,"0123").
const std::array<BladeMask, kBladeCount>& blades_by_grade();

class Multivector {
 public:
  using Components = std::array<double, kBladeCount>;

  constexpr Multivector() : c_{} {}
  // Throws DomainError if any component is NaN or infinite.
  explicit Multivector(const Components& components);

  static Multivector scalar(double s);
  static Multivector basis(int a);  // gamma^a
  static Multivector blade(BladeMask m, double coeff = 1.0);
  static Multivector pseudoscalar() { return blade(kPseudoscalar); }

  double operator[](BladeMask m) const { return c_[m]; }
  const Components& components() const { return c_; }
  double scalar_part() const { return c_[0]; }

  bool is_even(double tol = 0.0) const;
  bool is_homogeneous(int k, double tol = 0.0) const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }
  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector& a, const Multivector& b) { return a.c_ == b.c_; }

  // Unchecked component access for algorithms that build results in place.
  Components& mutable_components() { return c_; }

 private:
  Components c_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector wedge(const Multivector& a, const Multivector& b);
// Left contraction: grade-(k-j) part of A_j B_k, zero when j > k.
Multivector left_contraction(const Multivector& a, const Multivector& b);
// <a b>_0. Symmetric; on blades of equal grade it pairs the blade with itself
// through the geometric product, so (g0^g1).(g0^g1) = +1.
double scalar_product(const Multivector& a, const Multivector& b);
// Throws DomainError unless 0 <= k <= 4.
Multivector grade(const Multivector& a, int k);
Multivector reversion(const Multivector& a);
Multivector commutator(const Multivector& a, const Multivector& b);

// Max-abs component norm.
double max_norm(const Multivector& a);
double max_abs_diff(const Multivector& a, const Multivector& b);

// exp(F) for a pure bivector F, by scaling and squaring a truncated series.
// Throws DomainError for non-bivector input.
Multivector exp_bivector(const Multivector& F, double tol = 1e-15);

// psi = rho^{1/2} exp(-tau beta / 2) R with R R~ = 1.
struct PolarForm {
  double rho;
  double beta;  // in (-pi, pi]
  Multivector rotor;
};

// Requires an even multivector; throws SingularSpinor when psi psi~ = 0 and
// DomainError for odd input.
PolarForm polar_decompose(const Multivector& psi, double zero_tol = 1e-14);
Multivector polar_reconstruct(const PolarForm& p);

// Blade-keyed text, e.g. {"s": 1, "01": -0.5}; zero components omitted.
std::string to_string(const Multivector& m);

}  // namespace spinlie
