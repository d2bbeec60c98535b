#pragma once

// Clifford and spinor fields: blade-keyed component expressions in the
// tetrad blade basis (key "01" multiplies gamma^0 ^ gamma^1).

#include <map>

#include "spinlie/clifford.hpp"
#include "spinlie/symexpr.hpp"

namespace spinlie {

class CliffordField {
 public:
  CliffordField() = default;
  // even = true restricts to grades 0, 2, 4; an odd key throws DomainError.
  CliffordField(std::map<BladeMask, ScalarExpr> components, bool even = false);

  static CliffordField constant(const Multivector& m, bool even = false);
  static CliffordField generator(int a);  // gamma^a

  const std::map<BladeMask, ScalarExpr>& components() const { return comps_; }
  bool even() const { return even_; }
  // -1 when components of different grades are present (0 for the zero field).
  int homogeneous_grade() const;

 private:
  std::map<BladeMask, ScalarExpr> comps_;
  bool even_ = false;
};

// A spinor field is an even Clifford field.
using SpinorField = CliffordField;
CliffordField make_spinor(std::map<BladeMask, ScalarExpr> components);

// Value and first coordinate partials of the frame components at a point.
struct FieldJet {
  Multivector value;
  std::array<Multivector, 4> d;
};

FieldJet eval_field(const CliffordField& f, const Point& p);

// Pointwise geometric product, kept symbolic so its derivatives come out of
// the same AD as everything else.
CliffordField field_product(const CliffordField& a, const CliffordField& b);
CliffordField field_sum(const CliffordField& a, const CliffordField& b);

}  // namespace spinlie
