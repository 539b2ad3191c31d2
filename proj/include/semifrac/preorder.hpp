// The derived preorder on fractions, generated by the base preorder and
// closed under sums, scalings and two-sided products.
//
// A one-step comparison a <. b is witnessed by terms (g_i, A_i, B_i, h_i)
// with A_i <= B_i in the base order, a equal to sum g_i A_i h_i and b equal
// to sum g_i B_i h_i. General comparisons chain such steps through
// intermediate fractions. Verification replays both equalities through eq,
// so Holds verdicts are certificate-checked, Fails verdicts carry a
// separating monotone point, and everything else stays Unknown.

#pragma once

#include "semifrac/fraction.hpp"

namespace semifrac {

struct LessdotTerm {
  Fraction g;
  BaseElement A;
  BaseElement B;
  Fraction h;
};

struct LessdotCertificate {
  std::vector<LessdotTerm> terms;  // nonempty
};

struct ChainLink {
  Fraction next;
  LessdotCertificate cert;  // witnesses previous-endpoint <. next
};

struct ChainCertificate {
  Fraction a;
  Fraction b;
  std::vector<ChainLink> links;  // nonempty; last next equals b under eq
};

struct LeqVerdict {
  enum class Kind { Holds, Fails, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ChainCertificate> chain;  // Holds
  std::optional<MonotoneHom> witness;     // Fails: eval(a) > eval(b)

  bool holds() const { return kind == Kind::Holds; }
};

// True iff every A_i <= B_i in the base order and both reconstruction
// equalities come back Equal within budget. Unknown equalities count as
// failure.
bool verify_lessdot(const Fraction& a, const Fraction& b,
                    const LessdotCertificate& cert, const Budgets& budget = {});

bool verify_chain(const ChainCertificate& chain, const Budgets& budget = {});

LeqVerdict leq(const Fraction& a, const Fraction& b, const Budgets& budget = {});

// Collapse of a verified chain into a single padded step: the sum w of the
// chain's intermediates satisfies a + w <. b + w with the concatenated
// certificate.
struct PaddedLessdot {
  Fraction w;
  LessdotCertificate cert;
};

PaddedLessdot chain_to_padded_lessdot(const ChainCertificate& chain);

// Power-universality exponent for a nonzero fraction x: total = pre + lift
// makes u^total * x >= 1, x * u^total >= 1 and u^total >= x in the derived
// preorder. pre is the structural exponent for the inflated unit lambda*u,
// lift removes lambda again.
struct PuWitness {
  unsigned pre = 0;
  unsigned lift = 0;
  unsigned total = 0;
};

// lambda must exceed 1. Throws on Null input; throws logic_error if the
// constructed exponent fails its own post-verification.
PuWitness pu_witness(const Fraction& x, const Scalar& lambda = Scalar(2),
                     const Budgets& budget = {});

}  // namespace semifrac
