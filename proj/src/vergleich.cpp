#include "semifrac/vergleich.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace semifrac {

namespace {

BigInt binom(unsigned k, unsigned j) {
  if (j > k) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= j; ++i) r = r * (k - j + i) / i;
  return r;
}

BigInt factorial(size_t n) {
  BigInt r = 1;
  for (size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// All factorizations w = w1 . w2: prefix splits when order matters, multiset
// divisors (each exactly once) when it does not.
std::vector<std::pair<Word, Word>> word_splits(const Word& w, bool commutative) {
  std::vector<std::pair<Word, Word>> out;
  if (!commutative) {
    for (size_t i = 0; i <= w.size(); ++i) {
      Word w1, w2;
      w1.letters.assign(w.letters.begin(), w.letters.begin() + i);
      w2.letters.assign(w.letters.begin() + i, w.letters.end());
      out.emplace_back(std::move(w1), std::move(w2));
    }
    return out;
  }
  std::vector<std::pair<uint32_t, size_t>> runs;
  for (uint32_t v : w.letters) {
    if (!runs.empty() && runs.back().first == v) {
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }
  std::vector<size_t> take(runs.size(), 0);
  for (;;) {
    Word w1, w2;
    for (size_t i = 0; i < runs.size(); ++i) {
      w1.letters.insert(w1.letters.end(), take[i], runs[i].first);
      w2.letters.insert(w2.letters.end(), runs[i].second - take[i], runs[i].first);
    }
    out.emplace_back(std::move(w1), std::move(w2));
    size_t i = 0;
    while (i < runs.size() && take[i] == runs[i].second) take[i++] = 0;
    if (i == runs.size()) break;
    ++take[i];
  }
  return out;
}

void require_inputs(const BaseElement& x, const BaseElement& y) {
  if (x.inst != y.inst) throw InstanceMismatch();
  if (x.is_zero() || y.is_zero())
    throw std::invalid_argument("condition checks need nonzero elements");
}

void require_positive(const Scalar& epsilon) {
  if (epsilon.is_zero()) throw std::invalid_argument("epsilon must be positive");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

UniPoly::UniPoly(std::vector<Scalar> cs) : coeffs(std::move(cs)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(const Scalar& c, unsigned d) {
  std::vector<Scalar> cs(d + 1, Scalar(0));
  cs[d] = c;
  return UniPoly(std::move(cs));
}

unsigned UniPoly::degree() const {
  return coeffs.empty() ? 0u : static_cast<unsigned>(coeffs.size() - 1);
}

Scalar UniPoly::coeff(unsigned j) const {
  return j < coeffs.size() ? coeffs[j] : Scalar(0);
}

Scalar UniPoly::eval(const Scalar& r) const {
  Scalar acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * r + coeffs[i];
  return acc;
}

BaseElement UniPoly::substitute_u(const Instance& inst) const {
  Polynomial u = inst.power_universal().value;
  Polynomial acc;
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc.mul(u, inst.commutative()).add(Polynomial::constant(coeffs[i]));
  return inst.make(std::move(acc));
}

std::string UniPoly::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += coeffs[j].str();
      continue;
    }
    if (!coeffs[j].is_one()) {
      out += coeffs[j].str();
      out += ' ';
    }
    out += 'X';
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

std::string UniPoly::csv() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (j) out += ',';
    out += coeffs[j].str();
  }
  return out;
}

std::optional<UniPoly> UniPoly::parse_csv(std::string_view text) {
  std::vector<Scalar> cs;
  size_t pos = 0;
  for (;;) {
    size_t comma = text.find(',', pos);
    size_t len = comma == std::string_view::npos ? std::string_view::npos : comma - pos;
    auto c = Scalar::parse(trim(text.substr(pos, len)));
    if (!c) return std::nullopt;
    cs.push_back(*c);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return UniPoly(std::move(cs));
}

Scalar uk_coeff(unsigned k, const Word& w, bool commutative) {
  size_t j = w.size();
  if (j > k) return Scalar(0);
  BigInt num = binom(k, static_cast<unsigned>(j)) << k;
  if (commutative && j > 1) {
    BigInt den = 1;
    size_t run = 1;
    for (size_t i = 1; i <= w.letters.size(); ++i) {
      if (i < w.letters.size() && w.letters[i] == w.letters[i - 1]) {
        ++run;
        continue;
      }
      den *= factorial(run);
      run = 1;
    }
    num *= factorial(j) / den;
  }
  return Scalar(BigRational(num));
}

Scalar u_poly_coeff(const UniPoly& p, const Word& w, bool commutative) {
  Scalar acc(0);
  for (size_t j = w.size(); j < p.coeffs.size(); ++j) {
    if (p.coeffs[j].is_zero()) continue;
    acc = acc + p.coeffs[j] * uk_coeff(static_cast<unsigned>(j), w, commutative);
  }
  return acc;
}

bool leq_with_u_pad(const BaseElement& y, const BaseElement& x, const UniPoly& p) {
  if (y.inst != x.inst) throw InstanceMismatch();
  bool comm = y.inst.commutative();
  for (const auto& [w, yc] : y.value.terms()) {
    if (x.value.coeff(w) + u_poly_coeff(p, w, comm) < yc) return false;
  }
  return true;
}

bool leq_u_product(const BaseElement& y, const BaseElement& x, const UniPoly& p) {
  if (y.inst != x.inst) throw InstanceMismatch();
  bool comm = y.inst.commutative();
  for (const auto& [w, yc] : y.value.terms()) {
    Scalar bound(0);
    for (const auto& [w1, w2] : word_splits(w, comm)) {
      Scalar xc = x.value.coeff(w2);
      if (xc.is_zero()) continue;
      bound = bound + u_poly_coeff(p, w1, comm) * xc;
      if (yc <= bound) break;
    }
    if (bound < yc) return false;
  }
  return true;
}

HomCheckResult check_condition_a(const BaseElement& x, const BaseElement& y,
                                 size_t samples, uint64_t seed) {
  require_inputs(x, y);
  for (const MonotoneHom& h : sample_homs(x.inst, samples, seed)) {
    if (h.apply(x) < h.apply(y)) return {false, h};
  }
  return {};
}

std::optional<ConditionBEvidence> search_condition_b(const BaseElement& x,
                                                     const BaseElement& y,
                                                     const Scalar& epsilon,
                                                     unsigned m_max) {
  require_inputs(x, y);
  require_positive(epsilon);
  bool comm = x.inst.commutative();
  std::vector<Word> words;
  std::vector<Scalar> have, want;
  for (const auto& [w, yc] : y.value.terms()) {
    words.push_back(w);
    want.push_back(yc);
    have.push_back(x.value.coeff(w));
  }
  std::vector<Scalar> pad;
  Scalar epow(1);
  for (unsigned m = 0; m <= m_max; ++m) {
    epow = epow * epsilon;
    pad.push_back(epow);
    bool all = true;
    for (size_t i = 0; i < words.size(); ++i) {
      have[i] = have[i] + epow * uk_coeff(m, words[i], comm);
      if (have[i] < want[i]) all = false;
    }
    if (all) return ConditionBEvidence{m, UniPoly(pad)};
  }
  return std::nullopt;
}

bool verify_condition_b(const BaseElement& x, const BaseElement& y,
                        const Scalar& epsilon, const ConditionBEvidence& ev) {
  if (x.inst != y.inst || epsilon.is_zero()) return false;
  if (ev.pad.coeffs.size() != ev.m + 1) return false;
  Scalar epow(1);
  for (unsigned j = 0; j <= ev.m; ++j) {
    epow = epow * epsilon;
    if (!(ev.pad.coeffs[j] == epow)) return false;
  }
  return leq_with_u_pad(y, x, ev.pad);
}

std::optional<UniPoly> search_condition_c(const BaseElement& x,
                                          const BaseElement& y, const Scalar& r,
                                          const Scalar& epsilon,
                                          const Budgets& budget) {
  require_inputs(x, y);
  require_positive(epsilon);
  const unsigned m_max = budget.m_max;
  constexpr unsigned kShrinkSteps = 32;

  // Largest eps' = 1/2^t whose full-degree geometric value at r is <= eps;
  // shrinking further only weakens the padding, so condition (b) runs once.
  std::optional<Scalar> chosen;
  Scalar ep(1);
  const Scalar half = Scalar::from_ratio(1, 2);
  for (unsigned t = 0; t <= kShrinkSteps; ++t) {
    if (t) ep = ep * half;
    Scalar value(0), term = ep;
    for (unsigned j = 0;;) {
      value = value + term;
      if (++j > m_max) break;
      term = term * ep * r;
    }
    if (value <= epsilon) {
      chosen = ep;
      break;
    }
  }
  if (chosen) {
    if (auto b = search_condition_b(x, y, *chosen, m_max)) return b->pad;
  }

  // Monomial fallback c X^d with the least feasible c per degree.
  bool comm = x.inst.commutative();
  Scalar rpow(1);
  for (unsigned d = 0; d <= m_max; ++d) {
    if (d) rpow = rpow * r;
    bool feasible = true;
    BigRational cmin = 0;
    for (const auto& [w, yc] : y.value.terms()) {
      Scalar xc = x.value.coeff(w);
      if (yc <= xc) continue;
      Scalar k = uk_coeff(d, w, comm);
      if (k.is_zero()) {
        feasible = false;
        break;
      }
      BigRational need = (yc.value() - xc.value()) / k.value();
      if (cmin < need) cmin = need;
    }
    if (!feasible) continue;
    Scalar c{BigRational(cmin)};
    if (c.is_zero()) return UniPoly{};
    if (c * rpow <= epsilon) {
      UniPoly p = UniPoly::monomial(c, d);
      if (leq_with_u_pad(y, x, p)) return p;
    }
  }
  return std::nullopt;
}

bool verify_condition_c(const BaseElement& x, const BaseElement& y,
                        const Scalar& r, const Scalar& epsilon,
                        const UniPoly& p) {
  if (x.inst != y.inst) return false;
  if (!(p.eval(r) <= epsilon)) return false;
  return leq_with_u_pad(y, x, p);
}

std::optional<UniPoly> condition_d_construct(const BaseElement& x,
                                             const BaseElement& y,
                                             const Scalar& r,
                                             const Scalar& epsilon,
                                             const Budgets& budget) {
  require_inputs(x, y);
  require_positive(epsilon);
  unsigned k = base_pu_first_exponent(x);
  Scalar eps_prime =
      (r.is_zero() || k == 0) ? epsilon : epsilon * r.pow(k).reciprocal();
  auto p0 = search_condition_c(x, y, r, eps_prime, budget);
  if (!p0) return std::nullopt;
  std::vector<Scalar> cs(p0->is_zero() ? 1 : k + p0->coeffs.size(), Scalar(0));
  cs[0] = Scalar(1);
  for (size_t j = 0; j < p0->coeffs.size(); ++j) cs[k + j] = cs[k + j] + p0->coeffs[j];
  return UniPoly(std::move(cs));
}

bool condition_d_check(const BaseElement& x, const BaseElement& y,
                       const UniPoly& p, const Scalar& r,
                       const Scalar& epsilon) {
  require_inputs(x, y);
  if (!(p.eval(r) <= Scalar(1) + epsilon)) return false;
  return leq_u_product(y, x, p);
}

}  // namespace semifrac
