// Classical fractions num/den over a commutative instance, used as a
// complete equality oracle and a strong order oracle for the symbolic
// fraction semialgebra.
//
//   comm_of_expr     structural recursion from legal expressions to pairs
//   fraction_of_comm num/den back to the symbolic side as num * den^-1
//
// Equality is cross-multiplication with witness t = 1, which decides the
// relation on the shipped instances because their polynomial payloads
// cancel. The order check searches the pivot t over powers of the
// instance's power-universal element.

#pragma once

#include "semifrac/fraction.hpp"

namespace semifrac {

struct CommFraction {
  BaseElement num;
  BaseElement den;  // nonzero

  const Instance& instance() const { return num.inst; }
  std::string str() const;
};

// Checked constructor: same commutative instance, den nonzero.
CommFraction cf_make(BaseElement num, BaseElement den);

CommFraction cf_add(const CommFraction& a, const CommFraction& b);
CommFraction cf_mul(const CommFraction& a, const CommFraction& b);
CommFraction cf_scale(const Scalar& r, const CommFraction& a);
CommFraction cf_inv(const CommFraction& a);  // throws InversionOfZero on num == 0

// num_a * den_b == num_b * den_a, exactly.
bool cf_eq(const CommFraction& a, const CommFraction& b);

struct CfLeqVerdict {
  enum class Kind { Holds, Fails, Unknown };
  Kind kind = Kind::Unknown;
  // Holds: num_a * den_b * t <= num_b * den_a * t coefficient-wise.
  std::optional<BaseElement> t;
  // Fails: a point where the left value exceeds the right value.
  std::optional<MonotoneHom> witness;

  bool holds() const { return kind == Kind::Holds; }
};

CfLeqVerdict cf_leq(const CommFraction& a, const CommFraction& b,
                    const Budgets& budget = {});

// Structural recursion over a legal expression: atoms map to x/1, the
// operations to fraction arithmetic, inversion to a component swap.
// Throws on a noncommutative instance.
CommFraction comm_of_expr(const ExprPtr& e);
CommFraction comm_of_fraction(const Fraction& f);

// num/den back into the symbolic semialgebra as num * den^-1.
Fraction fraction_of_comm(const CommFraction& c);

// Base-form pairs: both denominators trivial and numerators comparable in
// the base preorder.
bool gamma_base_form(const CommFraction& a, const CommFraction& b);

}  // namespace semifrac
