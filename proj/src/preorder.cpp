#include "semifrac/preorder.hpp"

#include "semifrac/commoracle.hpp"

#include <cmath>
#include <utility>

namespace semifrac {

namespace {

Fraction base_frac(const BaseElement& v) { return Fraction::from_base(v); }

std::vector<ExprPtr> sum_spine(const ExprPtr& e) {
  std::vector<ExprPtr> out;
  ExprPtr cur = e;
  while (cur->kind() == ExprKind::Add) {
    out.push_back(cur->lhs());
    cur = cur->rhs();
  }
  out.push_back(cur);
  return out;
}

struct Summand {
  Scalar coef{1};
  ExprPtr core;
};

Summand split_summand(const ExprPtr& t) {
  if (t->kind() == ExprKind::Scale) return {t->scalar(), t->lhs()};
  return {Scalar(1), t};
}

// Normal-form cores this prover understands: plain atoms, a bare inverted
// atom, and two-factor products with the inverse on one side.
struct CoreShape {
  enum class K { Atom, BareInv, LeftDenom, RightDenom, Other };
  K k = K::Other;
  std::optional<BaseElement> den;
  std::optional<BaseElement> mid;
};

CoreShape shape_of(const ExprPtr& core) {
  auto inv_atom = [](const ExprPtr& e) -> std::optional<BaseElement> {
    if (e->kind() == ExprKind::Inv && e->lhs()->kind() == ExprKind::Atom)
      return e->lhs()->atom();
    return std::nullopt;
  };
  CoreShape s;
  if (core->kind() == ExprKind::Atom) {
    s.k = CoreShape::K::Atom;
    s.mid = core->atom();
    return s;
  }
  if (auto p = inv_atom(core)) {
    s.k = CoreShape::K::BareInv;
    s.den = *p;
    s.mid = core->instance().one();
    return s;
  }
  if (core->kind() == ExprKind::Mul) {
    if (auto p = inv_atom(core->lhs());
        p && core->rhs()->kind() == ExprKind::Atom) {
      s.k = CoreShape::K::LeftDenom;
      s.den = *p;
      s.mid = core->rhs()->atom();
      return s;
    }
    if (auto p = inv_atom(core->rhs());
        p && core->lhs()->kind() == ExprKind::Atom) {
      s.k = CoreShape::K::RightDenom;
      s.den = *p;
      s.mid = core->lhs()->atom();
      return s;
    }
  }
  return s;
}

bool left_sided(CoreShape::K k) {
  return k == CoreShape::K::BareInv || k == CoreShape::K::LeftDenom;
}

bool right_sided(CoreShape::K k) {
  return k == CoreShape::K::BareInv || k == CoreShape::K::RightDenom;
}

Fraction inv_frac(const BaseElement& p) {
  return Fraction(Expr::make_inv(Expr::make_atom(p)));
}

// One-step witness for summand <. summand, or nothing.
std::optional<LessdotCertificate> summand_cert(const ExprPtr& ta,
                                               const ExprPtr& tb,
                                               const Budgets& budget) {
  const Instance& inst = ta->instance();
  Fraction one = base_frac(inst.one());

  if (structurally_equal(ta, tb)) {
    LessdotCertificate c;
    c.terms.push_back({Fraction(ta), inst.one(), inst.one(), one});
    return c;
  }

  Summand sa = split_summand(ta);
  Summand sb = split_summand(tb);
  CoreShape A = shape_of(sa.core);
  CoreShape B = shape_of(sb.core);
  if (A.k == CoreShape::K::Other || B.k == CoreShape::K::Other)
    return std::nullopt;

  auto single = [&](Fraction g, BaseElement lo, BaseElement hi,
                    Fraction h) -> std::optional<LessdotCertificate> {
    if (!base_leq(lo, hi)) return std::nullopt;
    LessdotCertificate c;
    c.terms.push_back({std::move(g), std::move(lo), std::move(hi), std::move(h)});
    return c;
  };

  BaseElement va = base_scale(sa.coef, *A.mid);
  BaseElement vb = base_scale(sb.coef, *B.mid);

  // Atoms compare directly or after padding both sides by a power of the
  // power-universal element.
  if (A.k == CoreShape::K::Atom && B.k == CoreShape::K::Atom) {
    BaseElement uj = inst.one();
    for (unsigned j = 0; j <= budget.t_budget; ++j) {
      Fraction g = j == 0 ? one : inv_frac(uj);
      if (auto c = single(g, base_mul(uj, va), base_mul(uj, vb), one)) return c;
      uj = base_mul(uj, inst.power_universal());
    }
    return std::nullopt;
  }

  // Shared left denominator p^-1 m; an atom side lifts into it.
  if (left_sided(A.k) && left_sided(B.k) && *A.den == *B.den)
    return single(inv_frac(*A.den), va, vb, one);
  if (left_sided(A.k) && B.k == CoreShape::K::Atom)
    return single(inv_frac(*A.den), va, base_mul(*A.den, vb), one);
  if (A.k == CoreShape::K::Atom && left_sided(B.k))
    return single(inv_frac(*B.den), base_mul(*B.den, va), vb, one);

  // Mirror with the denominator on the right.
  if (right_sided(A.k) && right_sided(B.k) && *A.den == *B.den)
    return single(one, va, vb, inv_frac(*A.den));
  if (right_sided(A.k) && B.k == CoreShape::K::Atom)
    return single(one, va, base_mul(vb, *A.den), inv_frac(*A.den));
  if (A.k == CoreShape::K::Atom && right_sided(B.k))
    return single(one, base_mul(va, *B.den), vb, inv_frac(*B.den));

  // Inversion is antitone: q <= p gives p^-1 <= q^-1.
  if (A.k == CoreShape::K::BareInv && B.k == CoreShape::K::BareInv)
    return single(inv_frac(*A.den), base_scale(sa.coef, *B.den),
                  base_scale(sb.coef, *A.den), inv_frac(*B.den));

  return std::nullopt;
}

std::optional<Fraction> add_all(const std::optional<Fraction>& acc,
                                const Fraction& f) {
  if (!acc) return f;
  return frac_add(*acc, f);
}

// Injective matching of a's summands into b's; leftovers of b pad a second
// link.
std::optional<std::vector<ChainLink>> match_sums(const Fraction& a,
                                                 const Fraction& b,
                                                 const Budgets& budget) {
  const Instance& inst = a.instance();
  std::vector<ExprPtr> sa = sum_spine(a.nf());
  std::vector<ExprPtr> sb = sum_spine(b.nf());
  if (sa.size() > sb.size()) return std::nullopt;

  std::vector<bool> used(sb.size(), false);
  LessdotCertificate joined;
  for (const ExprPtr& ta : sa) {
    bool found = false;
    for (size_t j = 0; j < sb.size() && !found; ++j) {
      if (used[j]) continue;
      if (auto c = summand_cert(ta, sb[j], budget)) {
        joined.terms.insert(joined.terms.end(), c->terms.begin(),
                            c->terms.end());
        used[j] = true;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }

  std::optional<Fraction> matched, leftover;
  for (size_t j = 0; j < sb.size(); ++j) {
    Fraction part{sb[j]};
    if (used[j]) matched = add_all(matched, part);
    else leftover = add_all(leftover, part);
  }

  std::vector<ChainLink> links;
  if (!leftover) {
    links.push_back({b, std::move(joined)});
    return links;
  }

  Fraction one = base_frac(inst.one());
  LessdotCertificate pad;
  pad.terms.push_back({*matched, inst.one(), inst.one(), one});
  pad.terms.push_back({*leftover, inst.zero(), inst.one(), one});
  links.push_back({*matched, std::move(joined)});
  links.push_back({b, std::move(pad)});
  return links;
}

}  // namespace

bool verify_lessdot(const Fraction& a, const Fraction& b,
                    const LessdotCertificate& cert, const Budgets& budget) {
  const Instance& inst = a.instance();
  if (!(inst == b.instance())) throw InstanceMismatch();
  if (cert.terms.empty()) return false;
  for (const LessdotTerm& t : cert.terms) {
    if (!(t.g.instance() == inst) || !(t.h.instance() == inst) ||
        !(t.A.inst == inst) || !(t.B.inst == inst))
      throw InstanceMismatch();
    if (!base_leq(t.A, t.B)) return false;
  }
  auto combine = [&](bool low) {
    std::optional<Fraction> acc;
    for (const LessdotTerm& t : cert.terms) {
      Fraction mid = base_frac(low ? t.A : t.B);
      acc = add_all(acc, frac_mul(frac_mul(t.g, mid), t.h));
    }
    return *acc;
  };
  return eq(a, combine(true), budget).equal() &&
         eq(b, combine(false), budget).equal();
}

bool verify_chain(const ChainCertificate& chain, const Budgets& budget) {
  if (chain.links.empty()) return false;
  const Fraction* prev = &chain.a;
  for (const ChainLink& link : chain.links) {
    if (!verify_lessdot(*prev, link.next, link.cert, budget)) return false;
    prev = &link.next;
  }
  return eq(*prev, chain.b, budget).equal();
}

PaddedLessdot chain_to_padded_lessdot(const ChainCertificate& chain) {
  std::optional<Fraction> w;
  for (size_t i = 0; i + 1 < chain.links.size(); ++i)
    w = add_all(w, chain.links[i].next);
  if (!w) w = base_frac(chain.a.instance().zero());
  LessdotCertificate cert;
  for (const ChainLink& link : chain.links)
    cert.terms.insert(cert.terms.end(), link.cert.terms.begin(),
                      link.cert.terms.end());
  return {*w, std::move(cert)};
}

LeqVerdict leq(const Fraction& a, const Fraction& b, const Budgets& budget) {
  const Instance& inst = a.instance();
  if (!(inst == b.instance())) throw InstanceMismatch();
  LeqVerdict v;
  Fraction one = base_frac(inst.one());

  auto finish = [&](std::vector<ChainLink> links) {
    ChainCertificate chain{a, b, std::move(links)};
    if (!verify_chain(chain, budget)) return false;
    v.kind = LeqVerdict::Kind::Holds;
    v.chain = std::move(chain);
    return true;
  };

  if (a.is_zero()) {
    LessdotCertificate c;
    c.terms.push_back({b, inst.zero(), inst.one(), one});
    if (finish({{b, std::move(c)}})) return v;
  }

  if (!a.is_zero() && eq(a, b, budget).equal()) {
    LessdotCertificate c;
    c.terms.push_back({a, inst.one(), inst.one(), one});
    if (finish({{b, std::move(c)}})) return v;
  }

  if (!a.is_zero() && !b.is_zero()) {
    if (auto links = match_sums(a, b, budget)) {
      if (finish(std::move(*links))) return v;
    }
    if (inst.commutative()) {
      CommFraction ca = comm_of_fraction(a);
      CommFraction cb = comm_of_fraction(b);
      CfLeqVerdict cv = cf_leq(ca, cb, budget);
      if (cv.holds()) {
        BaseElement den = base_mul(base_mul(ca.den, cb.den), *cv.t);
        BaseElement lo = base_mul(base_mul(ca.num, cb.den), *cv.t);
        BaseElement hi = base_mul(base_mul(cb.num, ca.den), *cv.t);
        LessdotCertificate c;
        c.terms.push_back({inv_frac(den), std::move(lo), std::move(hi), one});
        if (finish({{b, std::move(c)}})) return v;
      }
    }
  }

  for (const MonotoneHom& h :
       sample_homs(inst, budget.samples, budget.seed)) {
    if (eval_fraction(h, b) < eval_fraction(h, a)) {
      v.kind = LeqVerdict::Kind::Fails;
      v.witness = h;
      return v;
    }
  }

  v.kind = LeqVerdict::Kind::Unknown;
  return v;
}

namespace {

unsigned log_ceil(const Scalar& base, const Scalar& target) {
  unsigned m = 0;
  Scalar pw(1);
  while (pw < target) {
    pw = pw * base;
    ++m;
  }
  return m;
}

unsigned pu_pre(const ExprPtr& e, const Scalar& lambda) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return base_pu_witness(e->atom());
    case ExprKind::Add: {
      bool lnull = classify(e->lhs()) == LegalityClass::Null;
      bool rnull = classify(e->rhs()) == LegalityClass::Null;
      if (lnull) return pu_pre(e->rhs(), lambda);
      if (rnull) return pu_pre(e->lhs(), lambda);
      unsigned k = std::max(pu_pre(e->lhs(), lambda), pu_pre(e->rhs(), lambda));
      return k + log_ceil(lambda, Scalar(2));
    }
    case ExprKind::Mul:
      return pu_pre(e->lhs(), lambda) + pu_pre(e->rhs(), lambda);
    case ExprKind::Scale: {
      const Scalar& r = e->scalar();
      Scalar target = r < Scalar(1) ? r.reciprocal() : r;
      return log_ceil(lambda, target) + pu_pre(e->lhs(), lambda);
    }
    case ExprKind::Inv:
      return pu_pre(e->lhs(), lambda);
  }
  throw std::logic_error("unreachable expression kind");
}

void pu_verify(const Fraction& x, unsigned total, const Budgets& budget) {
  const Instance& inst = x.instance();
  BaseElement u = inst.power_universal();
  bool exact = x.nf()->kind() == ExprKind::Atom;
  if (exact && inst.kind == InstanceKind::PolyComm) exact = total <= 40;
  if (exact && inst.kind == InstanceKind::PolyNC)
    exact = std::pow(double(inst.n_vars) + 1.0, double(total)) <= 2e5;

  bool ok = true;
  if (exact) {
    BaseElement U = base_pow(u, total);
    BaseElement X = x.nf()->atom();
    BaseElement one = inst.one();
    ok = base_leq(one, base_mul(U, X)) && base_leq(one, base_mul(X, U)) &&
         base_leq(X, U);
  } else {
    for (const MonotoneHom& h :
         sample_homs(inst, budget.samples, budget.seed)) {
      Scalar hu = h.apply(u).pow(total);
      Scalar hx = eval_fraction(h, x);
      ok = ok && Scalar(1) <= hu * hx && hx <= hu;
    }
  }
  if (!ok)
    throw std::logic_error("power-universality witness failed verification");
}

}  // namespace

PuWitness pu_witness(const Fraction& x, const Scalar& lambda,
                     const Budgets& budget) {
  if (x.is_zero())
    throw std::invalid_argument("power-universality needs a nonzero fraction");
  if (!(Scalar(1) < lambda))
    throw std::invalid_argument("lambda must exceed 1");
  PuWitness w;
  w.pre = pu_pre(x.rep(), lambda);
  w.lift = log_ceil(Scalar(2), lambda.pow(w.pre));
  w.total = w.pre + w.lift;
  pu_verify(x, w.total, budget);
  return w;
}

}  // namespace semifrac
