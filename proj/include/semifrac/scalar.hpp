// Exact nonnegative rational scalars.
//
// Scalars are the coefficient domain everywhere in the library: polynomial
// coefficients, scale factors in expressions, evaluation results. They are
// kept in canonical form (gcd-reduced, positive denominator) and are never
// negative; signed arithmetic, where an algorithm needs it internally, is
// done on raw boost rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifrac {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long v) : v_(v) {
    if (v < 0) throw std::invalid_argument("Scalar: negative value");
  }
  explicit Scalar(const BigRational& v) : v_(v) {
    if (v < 0) throw std::invalid_argument("Scalar: negative value");
  }

  static Scalar from_ratio(const BigInt& num, const BigInt& den);

  // Accepts "n" or "n/d" with nonnegative n and positive d.
  static std::optional<Scalar> parse(std::string_view text);

  const BigRational& value() const { return v_; }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  Scalar reciprocal() const {
    if (is_zero()) throw std::domain_error("Scalar: reciprocal of zero");
    return Scalar(1 / v_);
  }

  Scalar pow(unsigned e) const;

  std::string str() const;        // "n" when integral, else "n/d"
  std::string str_ratio() const;  // always "n/d"

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.v_ + b.v_); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(a.v_ * b.v_); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(a.v_ / b.v_);
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

 private:
  BigRational v_;
};

}  // namespace semifrac
