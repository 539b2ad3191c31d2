#include "semifrac/instance.hpp"

#include <charconv>

namespace semifrac {

std::optional<Instance> Instance::parse(std::string_view text) {
  if (text == "qplus") return Instance{InstanceKind::QPlus, 0};
  auto with_arity = [&](std::string_view prefix,
                        InstanceKind kind) -> std::optional<Instance> {
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    auto num = text.substr(prefix.size());
    uint32_t n = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || p != num.data() + num.size() || n == 0) return std::nullopt;
    return Instance{kind, n};
  };
  if (auto i = with_arity("polycomm:", InstanceKind::PolyComm)) return i;
  if (auto i = with_arity("polync:", InstanceKind::PolyNC)) return i;
  return std::nullopt;
}

std::string Instance::str() const {
  switch (kind) {
    case InstanceKind::QPlus:
      return "qplus";
    case InstanceKind::PolyComm:
      return "polycomm:" + std::to_string(n_vars);
    case InstanceKind::PolyNC:
      return "polync:" + std::to_string(n_vars);
  }
  return {};
}

bool Instance::is_member(const Polynomial& p) const {
  if (p.max_variable() > n_vars) return false;
  if (kind == InstanceKind::QPlus) return p.is_constant();
  if (p.is_zero()) return true;
  if (p.constant_term().is_zero()) return false;
  if (commutative()) {
    for (const auto& [w, c] : p.terms())
      if (!(w == w.sorted())) return false;
  }
  return true;
}

BaseElement Instance::zero() const { return BaseElement{*this, Polynomial::zero()}; }

BaseElement Instance::one() const {
  return BaseElement{*this, Polynomial::constant(Scalar(1))};
}

BaseElement Instance::power_universal() const {
  if (kind == InstanceKind::QPlus) return from_scalar(Scalar(2));
  Polynomial u = Polynomial::constant(Scalar(2));
  for (uint32_t i = 1; i <= n_vars; ++i)
    u = u.add(Polynomial::variable(i).scale(Scalar(2)));
  return BaseElement{*this, u};
}

BaseElement Instance::make(Polynomial p) const {
  if (!is_member(p)) throw MembershipError("polynomial is not a member of " + str());
  return BaseElement{*this, std::move(p)};
}

BaseElement Instance::from_scalar(const Scalar& c) const {
  return BaseElement{*this, Polynomial::constant(c)};
}

namespace {
void require_same(const Instance& a, const Instance& b) {
  if (!(a == b)) throw InstanceMismatch();
}
}  // namespace

BaseElement base_add(const BaseElement& a, const BaseElement& b) {
  require_same(a.inst, b.inst);
  return BaseElement{a.inst, a.value.add(b.value)};
}

BaseElement base_mul(const BaseElement& a, const BaseElement& b) {
  require_same(a.inst, b.inst);
  return BaseElement{a.inst, a.value.mul(b.value, a.inst.commutative())};
}

BaseElement base_scale(const Scalar& r, const BaseElement& a) {
  return BaseElement{a.inst, a.value.scale(r)};
}

BaseElement base_pow(const BaseElement& a, unsigned e) {
  return BaseElement{a.inst, a.value.pow(e, a.inst.commutative())};
}

bool base_leq(const BaseElement& a, const BaseElement& b) {
  require_same(a.inst, b.inst);
  return a.value.leq(b.value);
}

namespace {

// binomial(k, j) as a big integer
BigInt binomial(unsigned k, unsigned j) {
  if (j > k) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < j; ++i) {
    r *= k - i;
    r /= i + 1;
  }
  return r;
}

// j! / prod(mult_i!) for the letter multiset of a sorted word: the number of
// letter orderings that collapse onto it in the commutative ring.
BigInt word_orderings(const Word& w) {
  BigInt res = 1;
  unsigned remaining = static_cast<unsigned>(w.size());
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    res *= binomial(remaining, static_cast<unsigned>(j - i));
    remaining -= static_cast<unsigned>(j - i);
    i = j;
  }
  return res;
}

// Exact coefficient of the word w in u^k, u = 2 + 2(x1+..+xn): choosing
// which of the k factors carry the letters gives binomial(k, |w|), every
// factor contributes a 2, and in the commutative ring all letter orderings
// land on the same sorted word.
Scalar uk_coeff(unsigned k, const Word& w, bool commutative) {
  BigInt c = binomial(k, static_cast<unsigned>(w.size())) * (BigInt(1) << k);
  if (commutative) c *= word_orderings(w);
  return Scalar(BigRational(c));
}

bool pu_conditions_hold(const BaseElement& x, unsigned k) {
  // u^k * x >= 1 and x * u^k >= 1: both sides' constant term is 2^k * c0(x);
  // every other coefficient of 1 is zero, so the constant decides.
  Scalar c0 = x.value.constant_term();
  Scalar two_k = Scalar(2).pow(k);
  if (!(Scalar(1) <= two_k * c0)) return false;
  // u^k >= x coefficient-wise.
  for (const auto& [w, c] : x.value.terms()) {
    if (w.size() > k) return false;
    if (!(c <= uk_coeff(k, w, x.inst.commutative()))) return false;
  }
  return true;
}

}  // namespace

unsigned base_pu_witness(const BaseElement& x) {
  if (x.is_zero()) throw std::domain_error("base_pu_witness: zero has no witness");
  for (unsigned k = 0;; ++k) {
    if (pu_conditions_hold(x, k)) return k;
    if (k > 1u << 20)
      throw std::logic_error("base_pu_witness: no exponent found");  // unreachable
  }
}

unsigned base_pu_first_exponent(const BaseElement& x) {
  if (x.is_zero()) throw std::domain_error("base_pu_first_exponent: zero input");
  Scalar c0 = x.value.constant_term();
  if (c0.is_zero())
    throw std::domain_error("base_pu_first_exponent: member has zero constant term");
  for (unsigned k = 0;; ++k) {
    if (Scalar(1) <= Scalar(2).pow(k) * c0) return k;
  }
}

}  // namespace semifrac
