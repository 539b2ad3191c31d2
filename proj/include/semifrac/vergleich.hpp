// Checkers and searches for the four order conditions relating a pair of
// nonzero base elements x, y:
//
//   (a) h(x) >= h(y) for every sampled monotone hom        (Monte-Carlo)
//   (b) x + sum_{j<=m} eps^{j+1} u^j  >=  y                 (exact)
//   (c) x + p(u) >= y with p(r) <= eps                      (exact)
//   (d) p(u) * x >= y with p(r) <= 1 + eps                  (exact)
//
// u is the instance's power-universal element. Powers of u are never
// expanded: coefficients of u^k are read off in closed form, so searches
// stay cheap on noncommutative instances where u^k has (n+1)^k words.

#pragma once

#include "semifrac/fraction.hpp"
#include "semifrac/homext.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semifrac {

// Univariate polynomial over the nonnegative rationals, dense coefficient
// list, no trailing zeros. coeffs[j] multiplies X^j.
struct UniPoly {
  std::vector<Scalar> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> cs);

  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(const Scalar& c, unsigned d);

  bool is_zero() const { return coeffs.empty(); }
  unsigned degree() const;        // 0 for the zero polynomial
  Scalar coeff(unsigned j) const; // 0 beyond the stored range

  Scalar eval(const Scalar& r) const;

  // p(u) as a base element; expands u^j, intended for small degrees.
  BaseElement substitute_u(const Instance& inst) const;

  std::string str() const;  // "1 + 1/4 X^2"; zero renders as "0"
  std::string csv() const;  // "1,0,1/4"
  static std::optional<UniPoly> parse_csv(std::string_view text);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

// Coefficient of the word w in u^k, in closed form: u = 2*(1 + x1 + .. + xn),
// so the coefficient is 2^k * C(k,|w|), times the number of letter orderings
// of w when the instance is commutative (w sorted).
Scalar uk_coeff(unsigned k, const Word& w, bool commutative);

// Coefficient of w in p(u).
Scalar u_poly_coeff(const UniPoly& p, const Word& w, bool commutative);

// Exact coefficient-wise tests, equivalent to base_leq against the expanded
// element but computed per word of y.
//   y <= x + p(u)
bool leq_with_u_pad(const BaseElement& y, const BaseElement& x, const UniPoly& p);
//   y <= p(u) * x
bool leq_u_product(const BaseElement& y, const BaseElement& x, const UniPoly& p);

// Condition (a): evaluate both elements on `samples` sampled homs. A pass is
// a necessary-condition check only; the first violating hom is returned.
struct HomCheckResult {
  bool pass = true;
  std::optional<MonotoneHom> counterexample;
};
HomCheckResult check_condition_a(const BaseElement& x, const BaseElement& y,
                                 size_t samples, uint64_t seed);

// Condition (b): smallest m <= m_max with x + sum_{j<=m} eps^{j+1} u^j >= y.
// The pad records the certificate polynomial sum_{j<=m} eps^{j+1} X^j.
struct ConditionBEvidence {
  unsigned m = 0;
  UniPoly pad;
};
std::optional<ConditionBEvidence> search_condition_b(const BaseElement& x,
                                                     const BaseElement& y,
                                                     const Scalar& epsilon,
                                                     unsigned m_max = 32);
bool verify_condition_b(const BaseElement& x, const BaseElement& y,
                        const Scalar& epsilon, const ConditionBEvidence& ev);

// Condition (c): some p with p(r) <= eps and x + p(u) >= y. First tries the
// condition-(b) family at the largest eps' = 1/2^t whose full-degree value
// sum_{j<=m_max} eps'^{j+1} r^j is <= eps; if that search fails, falls back
// to single monomials c X^d with the least feasible c. Absence means
// "not found within budget", never nonexistence.
std::optional<UniPoly> search_condition_c(const BaseElement& x,
                                          const BaseElement& y, const Scalar& r,
                                          const Scalar& epsilon,
                                          const Budgets& budget = {});
bool verify_condition_c(const BaseElement& x, const BaseElement& y,
                        const Scalar& r, const Scalar& epsilon,
                        const UniPoly& p);

// Condition (d). Construction: k is the least exponent with u^k * x >= 1;
// a condition-(c) run at eps' = eps / r^k (eps when r = 0) yields p0, and
// p = 1 + p0 X^k. Check: p(r) <= 1 + eps exactly and p(u) * x >= y.
std::optional<UniPoly> condition_d_construct(const BaseElement& x,
                                             const BaseElement& y,
                                             const Scalar& r,
                                             const Scalar& epsilon,
                                             const Budgets& budget = {});
bool condition_d_check(const BaseElement& x, const BaseElement& y,
                       const UniPoly& p, const Scalar& r,
                       const Scalar& epsilon);

// Flat record of one condition run, ready for serialization.
struct ConditionReport {
  std::string condition;  // "a" | "b" | "c" | "d"
  std::string instance;
  std::string x_text;
  std::string y_text;
  std::string verdict;  // "pass"|"counterexample"|"found"|"none"|"accept"|"reject"
  std::optional<unsigned> m;
  std::optional<std::string> p_csv;
  std::optional<std::string> r_text;
  std::optional<std::string> epsilon_text;
  std::optional<std::string> counterexample;  // violating hom, condition (a)
  size_t samples = 0;
  unsigned m_max = 0;
  uint64_t seed = 0;
  uint64_t wall_time_ms = 0;
};

}  // namespace semifrac
