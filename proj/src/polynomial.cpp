#include "semifrac/polynomial.hpp"

#include <algorithm>

namespace semifrac {

Word Word::concat(const Word& o) const {
  Word r;
  r.letters.reserve(letters.size() + o.letters.size());
  r.letters.insert(r.letters.end(), letters.begin(), letters.end());
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

Word Word::sorted() const {
  Word r = *this;
  std::sort(r.letters.begin(), r.letters.end());
  return r;
}

bool Word::strip_suffix(const Word& suffix, Word& prefix) const {
  if (suffix.size() > size()) return false;
  size_t off = size() - suffix.size();
  if (!std::equal(suffix.letters.begin(), suffix.letters.end(), letters.begin() + off))
    return false;
  prefix.letters.assign(letters.begin(), letters.begin() + off);
  return true;
}

bool Word::strip_prefix(const Word& prefix, Word& suffix) const {
  if (prefix.size() > size()) return false;
  if (!std::equal(prefix.letters.begin(), prefix.letters.end(), letters.begin()))
    return false;
  suffix.letters.assign(letters.begin() + prefix.size(), letters.end());
  return true;
}

bool Word::strip_multiset(const Word& part, Word& rest) const {
  // Both words sorted by invariant on the commutative instances.
  rest.letters.clear();
  size_t i = 0, j = 0;
  while (i < letters.size()) {
    if (j < part.letters.size() && letters[i] == part.letters[j]) {
      ++i, ++j;
    } else if (j < part.letters.size() && part.letters[j] < letters[i]) {
      return false;
    } else {
      rest.letters.push_back(letters[i]);
      ++i;
    }
  }
  return j == part.letters.size();
}

uint32_t Word::max_letter() const {
  uint32_t m = 0;
  for (uint32_t l : letters) m = std::max(m, l);
  return m;
}

std::string Word::str() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += 'x';
    s += std::to_string(letters[i]);
  }
  return s;
}

bool DegLexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(Word::unit(), c);
  return p;
}

Polynomial Polynomial::variable(uint32_t index) {
  Polynomial p;
  Word w;
  w.letters.push_back(index);
  p.terms_.emplace(std::move(w), Scalar(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Word::unit());
  return it == terms_.end() ? Scalar(0) : it->second;
}

uint32_t Polynomial::max_variable() const {
  uint32_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

Scalar Polynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::set_coeff(const Word& w, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(w);
  else
    terms_.insert_or_assign(w, c);
}

Polynomial Polynomial::add(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [w, c] : o.terms_) {
    auto it = r.terms_.find(w);
    if (it == r.terms_.end())
      r.terms_.emplace(w, c);
    else
      it->second = it->second + c;
  }
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o, bool commutative) const {
  Polynomial r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      Word w = wa.concat(wb);
      if (commutative) w = w.sorted();
      auto it = r.terms_.find(w);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(w), ca * cb);
      else
        it->second = it->second + ca * cb;
    }
  }
  return r;
}

Polynomial Polynomial::scale(const Scalar& r) const {
  Polynomial out;
  if (r.is_zero()) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, r * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e, bool commutative) const {
  Polynomial acc = Polynomial::constant(Scalar(1));
  for (unsigned i = 0; i < e; ++i) acc = acc.mul(*this, commutative);
  return acc;
}

bool Polynomial::leq(const Polynomial& o) const {
  for (const auto& [w, c] : terms_)
    if (!(c <= o.coeff(w))) return false;
  return true;
}

Scalar Polynomial::eval(std::span<const Scalar> point) const {
  Scalar acc(0);
  for (const auto& [w, c] : terms_) {
    Scalar m = c;
    for (uint32_t l : w.letters) m = m * point[l - 1];
    acc = acc + m;
  }
  return acc;
}

Scalar Polynomial::content() const {
  BigInt g = 0, l = 1;
  for (const auto& [w, c] : terms_) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c.value()));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.value()));
  }
  if (g == 0) return Scalar(0);
  return Scalar(BigRational(g, l));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    if (w.empty()) {
      s += c.str();
    } else if (c.is_one()) {
      s += w.str();
    } else {
      s += c.str();
      s += ' ';
      s += w.str();
    }
  }
  return s;
}

namespace {

// Signed working form for the division algorithms.
using SignedMap = std::map<Word, BigRational, DegLexLess>;

SignedMap to_signed(const Polynomial& p) {
  SignedMap m;
  for (const auto& [w, c] : p.terms()) m.emplace(w, c.value());
  return m;
}

void signed_axpy(SignedMap& target, const BigRational& coef, const Word& w,
                 const Polynomial& d, bool commutative, bool d_on_right) {
  // target -= coef * (d_on_right ? w*d : d*w)
  for (const auto& [wd, cd] : d.terms()) {
    Word prod = d_on_right ? w.concat(wd) : wd.concat(w);
    if (commutative) prod = prod.sorted();
    auto it = target.find(prod);
    BigRational delta = coef * cd.value();
    if (it == target.end()) {
      target.emplace(std::move(prod), -delta);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

std::optional<Polynomial> quotient_impl(const Polynomial& c, const Polynomial& d,
                                        bool commutative, bool right) {
  if (d.is_zero()) return std::nullopt;
  SignedMap rem = to_signed(c);
  const auto& dlead = *d.terms().rbegin();  // DegLex-maximal term of d
  Polynomial q;
  while (!rem.empty()) {
    const auto& [wc, cc] = *rem.rbegin();
    Word wq;
    if (commutative) {
      if (!wc.strip_multiset(dlead.first, wq)) return std::nullopt;
    } else if (right) {
      if (!wc.strip_suffix(dlead.first, wq)) return std::nullopt;
    } else {
      if (!wc.strip_prefix(dlead.first, wq)) return std::nullopt;
    }
    BigRational t = cc / dlead.second.value();
    if (t < 0) return std::nullopt;  // quotient leaves the nonnegative cone
    q.set_coeff(wq, Scalar(t));
    signed_axpy(rem, t, wq, d, commutative, right);
  }
  return q;
}

}  // namespace

std::optional<Polynomial> right_quotient(const Polynomial& c, const Polynomial& d,
                                         bool commutative) {
  return quotient_impl(c, d, commutative, /*right=*/true);
}

std::optional<Polynomial> left_quotient(const Polynomial& c, const Polynomial& d,
                                        bool commutative) {
  return quotient_impl(c, d, commutative, /*right=*/false);
}

}  // namespace semifrac
