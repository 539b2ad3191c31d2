// Base semialgebra instances and their elements.
//
// Three instances ship:
//   qplus      — nonnegative rationals, preordered by <=, power-universal
//                element u = 2
//   polycomm:n — commutative polynomials in x1..xn over the nonnegative
//                rationals whose nonzero members have a positive constant
//                term, coefficient-wise preorder, u = 2 + 2*(x1+..+xn)
//   polync:n   — the same with noncommuting variables
//
// Every element is stored as a Polynomial; qplus members are the constant
// polynomials. All three instances are zero-sum-free and zero-divisor-free,
// and their canonical images in the fraction semialgebra are injective
// (cancellative flag).

#pragma once

#include "semifrac/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifrac {

enum class InstanceKind { QPlus, PolyComm, PolyNC };

struct BaseElement;

struct Instance {
  InstanceKind kind = InstanceKind::QPlus;
  uint32_t n_vars = 0;  // 0 for qplus

  bool commutative() const { return kind != InstanceKind::PolyNC; }
  bool cancellative() const { return true; }

  // "qplus" | "polycomm:N" | "polync:N", N >= 1.
  static std::optional<Instance> parse(std::string_view text);
  std::string str() const;

  bool is_member(const Polynomial& p) const;

  BaseElement zero() const;
  BaseElement one() const;
  BaseElement power_universal() const;  // the fixed u of the instance
  BaseElement make(Polynomial p) const;  // membership-checked
  BaseElement from_scalar(const Scalar& c) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.kind == b.kind && a.n_vars == b.n_vars;
  }
};

class InstanceMismatch : public std::invalid_argument {
 public:
  InstanceMismatch() : std::invalid_argument("operands belong to different instances") {}
};

class MembershipError : public std::invalid_argument {
 public:
  explicit MembershipError(const std::string& what) : std::invalid_argument(what) {}
};

struct BaseElement {
  Instance inst;
  Polynomial value;

  bool is_zero() const { return value.is_zero(); }
  bool is_one() const { return value.is_constant() && value.constant_term().is_one(); }
  // Invertible inside the fraction semialgebra by scalar laws alone.
  bool is_positive_constant() const {
    return value.is_constant() && !value.is_zero();
  }
  std::string str() const { return value.str(); }

  friend bool operator==(const BaseElement& a, const BaseElement& b) {
    return a.inst == b.inst && a.value == b.value;
  }
};

BaseElement base_add(const BaseElement& a, const BaseElement& b);
BaseElement base_mul(const BaseElement& a, const BaseElement& b);
BaseElement base_scale(const Scalar& r, const BaseElement& a);
BaseElement base_pow(const BaseElement& a, unsigned e);

// Coefficient-wise order (numeric <= on qplus).
bool base_leq(const BaseElement& a, const BaseElement& b);

// Smallest k found such that u^k * x >= 1, x * u^k >= 1 and u^k >= x hold in
// the instance. x must be nonzero. Decided by exact coefficient predicates
// without expanding u^k; the expansion-based checks live in the tests.
unsigned base_pu_witness(const BaseElement& x);

// Smallest k with u^k * x >= 1 alone (used by the condition-(d) construction).
unsigned base_pu_first_exponent(const BaseElement& x);

}  // namespace semifrac
