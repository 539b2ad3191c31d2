#include "semifrac/scalar.hpp"

#include <cctype>

namespace semifrac {

Scalar Scalar::from_ratio(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::invalid_argument("Scalar: denominator must be positive");
  if (num < 0) throw std::invalid_argument("Scalar: negative value");
  return Scalar(BigRational(num, den));
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(text)) return std::nullopt;
    return Scalar(BigRational(BigInt(std::string(text))));
  }
  auto n = text.substr(0, slash);
  auto d = text.substr(slash + 1);
  if (!digits(n) || !digits(d)) return std::nullopt;
  BigInt den{std::string(d)};
  if (den == 0) return std::nullopt;
  return Scalar(BigRational(BigInt(std::string(n)), den));
}

Scalar Scalar::pow(unsigned e) const {
  BigRational acc = 1, base = v_;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return Scalar(acc);
}

std::string Scalar::str() const {
  return den() == 1 ? num().str() : num().str() + "/" + den().str();
}

std::string Scalar::str_ratio() const { return num().str() + "/" + den().str(); }

}  // namespace semifrac
