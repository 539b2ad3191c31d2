// Elements of the fraction semialgebra: legal expressions up to the
// generated equivalence. Every Fraction eagerly caches the normal form of
// its representative together with the trace that reaches it.
//
// Equality is a sound three-valued semi-decision:
//   - structural and normal-form agreement produce an Equal with a
//     replayable trace from one representative to the other
//   - inverse-free disagreement on a cancellative instance is NotEqual
//   - commutative instances are decided completely by cross-multiplication
//     (Equal then carries the cross-multiplication certificate)
//   - otherwise a bounded bidirectional search over single rewrite steps
//     runs between the two normal forms; sampled homomorphisms may settle
//     NotEqual; budget exhaustion yields Unknown

#pragma once

#include "semifrac/homext.hpp"
#include "semifrac/rewrite.hpp"

#include <memory>
#include <optional>

namespace semifrac {

class InversionOfZero : public std::domain_error {
 public:
  InversionOfZero() : std::domain_error("cannot invert the zero fraction") {}
};

class Fraction {
 public:
  explicit Fraction(ExprPtr rep);  // throws IllegalExpression
  static Fraction from_base(const BaseElement& v);

  const ExprPtr& rep() const { return rep_; }
  const ExprPtr& nf() const { return nf_; }
  const std::vector<RewriteStep>& nf_steps() const { return *steps_; }
  const Instance& instance() const { return rep_->instance(); }
  bool is_zero() const { return null_; }

 private:
  ExprPtr rep_;
  ExprPtr nf_;
  std::shared_ptr<const std::vector<RewriteStep>> steps_;
  bool null_ = false;
};

Fraction frac_add(const Fraction& a, const Fraction& b);
Fraction frac_mul(const Fraction& a, const Fraction& b);
Fraction frac_scale(const Scalar& r, const Fraction& a);
Fraction frac_inv(const Fraction& a);  // throws InversionOfZero on the zero class

Scalar eval_fraction(const MonotoneHom& h, const Fraction& f);

// Search limits shared by the semi-decision procedures.
struct Budgets {
  size_t rewrite = 10000;   // rewrite applications in equality search
  unsigned m_max = 32;      // certificate-family length bound
  size_t samples = 32;      // sampled homomorphisms
  unsigned t_budget = 6;    // pivot exponent bound for the commutative oracle
  uint64_t seed = 20260819;
};

// Cross-multiplication evidence from the commutative oracle:
// num1 * den2 == num2 * den1 exactly.
struct CrossMulCertificate {
  BaseElement num1, den1, num2, den2;
};

struct EqVerdict {
  enum class Kind { Equal, NotEqual, Unknown };
  Kind kind = Kind::Unknown;
  // Equal evidence: a trace replaying lhs.rep() into rhs.rep(), or a
  // cross-multiplication certificate when decided by the commutative oracle.
  std::vector<RewriteStep> trace;
  std::optional<CrossMulCertificate> cross;
  // NotEqual evidence when a separating homomorphism exists in the sample.
  std::optional<MonotoneHom> witness;

  bool equal() const { return kind == Kind::Equal; }
};

EqVerdict eq(const Fraction& a, const Fraction& b, const Budgets& budget = {});

}  // namespace semifrac
