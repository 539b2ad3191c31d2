#include "semifrac/grothendieck.hpp"

#include <utility>

namespace semifrac {

SignedScalar SignedScalar::minus(Scalar m) {
  SignedScalar s{!m.is_zero(), std::move(m)};
  return s;
}

std::string SignedScalar::str() const {
  return negative ? "-" + mag.str() : mag.str();
}

FormalDifference diff_make(Fraction pos, Fraction neg) {
  if (!(pos.instance() == neg.instance())) throw InstanceMismatch();
  return {std::move(pos), std::move(neg)};
}

FormalDifference diff_of(const Fraction& f) {
  return {f, Fraction::from_base(f.instance().zero())};
}

FormalDifference diff_add(const FormalDifference& a,
                          const FormalDifference& b) {
  return diff_make(frac_add(a.pos, b.pos), frac_add(a.neg, b.neg));
}

FormalDifference diff_scale(const SignedScalar& r, const FormalDifference& d) {
  if (r.negative)
    return diff_make(frac_scale(r.mag, d.neg), frac_scale(r.mag, d.pos));
  return diff_make(frac_scale(r.mag, d.pos), frac_scale(r.mag, d.neg));
}

bool diff_eq(const FormalDifference& a, const FormalDifference& b,
             const Fraction& witness, const Budgets& budget) {
  if (!(a.instance() == b.instance()) ||
      !(a.instance() == witness.instance()))
    throw InstanceMismatch();
  Fraction lhs = frac_add(frac_add(a.pos, b.neg), witness);
  Fraction rhs = frac_add(frac_add(b.pos, a.neg), witness);
  return eq(lhs, rhs, budget).equal();
}

bool triangle_leq(const FormalDifference& a, const FormalDifference& b,
                  const Fraction& witness, const Budgets& budget) {
  if (!(a.instance() == b.instance()) ||
      !(a.instance() == witness.instance()))
    throw InstanceMismatch();
  Fraction lhs = frac_add(frac_add(a.pos, b.neg), witness);
  Fraction rhs = frac_add(frac_add(a.neg, b.pos), witness);
  return leq(lhs, rhs, budget).holds();
}

}  // namespace semifrac
