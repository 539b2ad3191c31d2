// Formal differences of fractions with witness-checked equality and the
// triangle preorder. Everything here takes its witnesses from the caller:
// two differences are pronounced equal (or ordered) only relative to a
// supplied padding fraction, replayed through eq and leq.

#pragma once

#include "semifrac/preorder.hpp"

namespace semifrac {

struct SignedScalar {
  bool negative = false;
  Scalar mag{0};  // zero keeps negative == false

  static SignedScalar plus(Scalar m) { return {false, std::move(m)}; }
  static SignedScalar minus(Scalar m);
  std::string str() const;
};

struct FormalDifference {
  Fraction pos;
  Fraction neg;

  const Instance& instance() const { return pos.instance(); }
};

FormalDifference diff_make(Fraction pos, Fraction neg);
FormalDifference diff_of(const Fraction& f);  // f minus zero

FormalDifference diff_add(const FormalDifference& a, const FormalDifference& b);
FormalDifference diff_scale(const SignedScalar& r, const FormalDifference& d);

// pos1 + neg2 + witness equals pos2 + neg1 + witness.
bool diff_eq(const FormalDifference& a, const FormalDifference& b,
             const Fraction& witness, const Budgets& budget = {});

// pos1 + neg2 + witness precedes neg1 + pos2 + witness in the derived
// preorder.
bool triangle_leq(const FormalDifference& a, const FormalDifference& b,
                  const Fraction& witness, const Budgets& budget = {});

}  // namespace semifrac
