#include "spinlie/fields.hpp"

#include "spinlie/errors.hpp"

namespace spinlie {

CliffordField::CliffordField(std::map<BladeMask, ScalarExpr> components, bool even)
    : comps_(std::move(components)), even_(even) {
  for (const auto& [m, e] : comps_) {
    if (m >= static_cast<BladeMask>(kBladeCount)) throw DomainError("blade mask out of range");
    if (even_ && blade_grade(m) % 2)
      throw DomainError("even field has odd blade '" + blade_key(m) + "'");
  }
}

CliffordField CliffordField::constant(const Multivector& m, bool even) {
  std::map<BladeMask, ScalarExpr> c;
  for (BladeMask b = 0; b < kBladeCount; ++b)
    if (m[b] != 0.0) c.emplace(b, ScalarExpr::number(m[b]));
  return CliffordField(std::move(c), even);
}

CliffordField CliffordField::generator(int a) {
  return CliffordField({{static_cast<BladeMask>(1u << a), ScalarExpr::number(1.0)}});
}

int CliffordField::homogeneous_grade() const {
  int k = -2;
  for (const auto& [m, e] : comps_) {
    if (k == -2) {
      k = blade_grade(m);
    } else if (blade_grade(m) != k) {
      return -1;
    }
  }
  return k == -2 ? 0 : k;
}

CliffordField make_spinor(std::map<BladeMask, ScalarExpr> components) {
  return CliffordField(std::move(components), true);
}

FieldJet eval_field(const CliffordField& f, const Point& p) {
  FieldJet j;
  for (const auto& [m, e] : f.components()) {
    const Jet2 v = e.eval_jet(p);
    j.value.mutable_components()[m] = v.value;
    for (int r = 0; r < 4; ++r) j.d[r].mutable_components()[m] = v.grad[r];
  }
  return j;
}

CliffordField field_product(const CliffordField& a, const CliffordField& b) {
  std::map<BladeMask, ScalarExpr> out;
  for (const auto& [i, ea] : a.components())
    for (const auto& [j, eb] : b.components()) {
      const Multivector prod = Multivector::blade(i) * Multivector::blade(j);
      const BladeMask m = i ^ j;
      const ScalarExpr term = prod[m] < 0 ? -(ea * eb) : ea * eb;
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(m, term);
      } else {
        it->second = it->second + term;
      }
    }
  return CliffordField(std::move(out), a.even() && b.even());
}

CliffordField field_sum(const CliffordField& a, const CliffordField& b) {
  std::map<BladeMask, ScalarExpr> out = a.components();
  for (const auto& [m, e] : b.components()) {
    auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(m, e);
    } else {
      it->second = it->second + e;
    }
  }
  return CliffordField(std::move(out), a.even() && b.even());
}

}  // namespace spinlie
