// Words over variable indices and polynomials with nonnegative rational
// coefficients. One Polynomial type serves all three base instances: the
// rationals (only the empty word occurs), commutative polynomials (letters
// kept sorted) and noncommutative polynomials (letters in written order).

#pragma once

#include "semifrac/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semifrac {

// A word is a finite sequence of 1-based variable indices; the empty word is
// the monoid unit.
struct Word {
  std::vector<uint32_t> letters;

  static Word unit() { return {}; }
  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  Word concat(const Word& o) const;
  Word sorted() const;  // commutative image

  // True when `suffix` is a suffix; on success `prefix` receives the rest.
  bool strip_suffix(const Word& suffix, Word& prefix) const;
  bool strip_prefix(const Word& prefix, Word& suffix) const;
  // Multiset division for sorted (commutative) words.
  bool strip_multiset(const Word& part, Word& rest) const;

  uint32_t max_letter() const;
  std::string str() const;  // "x1 x1 x2"; empty word renders as ""

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

// Degree-then-lexicographic order; total and compatible with concatenation,
// which the exact-division routines rely on.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Word, Scalar, DegLexLess>;

  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(const Scalar& c);
  static Polynomial variable(uint32_t index);  // 1-based

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;  // 0 when absent
  size_t term_count() const { return terms_.size(); }
  uint32_t max_variable() const;
  Scalar coeff(const Word& w) const;  // 0 when absent

  void set_coeff(const Word& w, const Scalar& c);  // c == 0 erases
  const TermMap& terms() const { return terms_; }

  Polynomial add(const Polynomial& o) const;
  Polynomial mul(const Polynomial& o, bool commutative) const;
  Polynomial scale(const Scalar& r) const;
  Polynomial pow(unsigned e, bool commutative) const;

  // Coefficient-wise comparison; absent words count as zero.
  bool leq(const Polynomial& o) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Scalar eval(std::span<const Scalar> point) const;

  // Greatest c with (1/c)*this still integer-coefficient after clearing
  // denominators: gcd of numerators over lcm of denominators. Zero for the
  // zero polynomial.
  Scalar content() const;

  // "1 + 2 x1 + x1 x2"; zero renders as "0". Terms in DegLex order.
  std::string str() const;

 private:
  TermMap terms_;  // invariant: no zero coefficients stored
};

// Exact one-sided quotients: right_quotient finds q with q*d == c, and
// left_quotient finds q with d*q == c. Returns nothing when no quotient
// exists or when the (unique) quotient has a negative coefficient, i.e.
// falls outside the nonnegative cone.
std::optional<Polynomial> right_quotient(const Polynomial& c, const Polynomial& d,
                                         bool commutative);
std::optional<Polynomial> left_quotient(const Polynomial& c, const Polynomial& d,
                                        bool commutative);

}  // namespace semifrac
