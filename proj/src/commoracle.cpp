#include "semifrac/commoracle.hpp"

#include <utility>

namespace semifrac {

std::string CommFraction::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

CommFraction cf_make(BaseElement num, BaseElement den) {
  if (!(num.inst == den.inst)) throw InstanceMismatch();
  if (!num.inst.commutative())
    throw std::domain_error("classical fractions need a commutative instance");
  if (den.is_zero()) throw std::domain_error("denominator must be nonzero");
  return CommFraction{std::move(num), std::move(den)};
}

CommFraction cf_add(const CommFraction& a, const CommFraction& b) {
  return cf_make(base_add(base_mul(a.num, b.den), base_mul(b.num, a.den)),
                 base_mul(a.den, b.den));
}

CommFraction cf_mul(const CommFraction& a, const CommFraction& b) {
  return cf_make(base_mul(a.num, b.num), base_mul(a.den, b.den));
}

CommFraction cf_scale(const Scalar& r, const CommFraction& a) {
  return cf_make(base_scale(r, a.num), a.den);
}

CommFraction cf_inv(const CommFraction& a) {
  if (a.num.is_zero()) throw InversionOfZero();
  return cf_make(a.den, a.num);
}

bool cf_eq(const CommFraction& a, const CommFraction& b) {
  if (!(a.instance() == b.instance())) throw InstanceMismatch();
  return base_mul(a.num, b.den) == base_mul(b.num, a.den);
}

CfLeqVerdict cf_leq(const CommFraction& a, const CommFraction& b,
                    const Budgets& budget) {
  if (!(a.instance() == b.instance())) throw InstanceMismatch();
  CfLeqVerdict v;
  BaseElement lhs = base_mul(a.num, b.den);
  BaseElement rhs = base_mul(b.num, a.den);

  // Pivot over powers of the power-universal element: every other nonzero
  // member is a scaled sum of them, so nothing smaller is lost.
  BaseElement u = a.instance().power_universal();
  BaseElement t = a.instance().one();
  for (unsigned j = 0; j <= budget.t_budget; ++j) {
    if (base_leq(base_mul(lhs, t), base_mul(rhs, t))) {
      v.kind = CfLeqVerdict::Kind::Holds;
      v.t = t;
      return v;
    }
    t = base_mul(t, u);
  }

  for (const auto& h : sample_homs(a.instance(), budget.samples, budget.seed)) {
    Scalar va = h.apply(a.num) / h.apply(a.den);
    Scalar vb = h.apply(b.num) / h.apply(b.den);
    if (vb < va) {
      v.kind = CfLeqVerdict::Kind::Fails;
      v.witness = h;
      return v;
    }
  }

  v.kind = CfLeqVerdict::Kind::Unknown;
  return v;
}

namespace {

CommFraction comm_rec(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return cf_make(e->atom(), e->instance().one());
    case ExprKind::Add:
      return cf_add(comm_rec(e->lhs()), comm_rec(e->rhs()));
    case ExprKind::Mul:
      return cf_mul(comm_rec(e->lhs()), comm_rec(e->rhs()));
    case ExprKind::Scale:
      return cf_scale(e->scalar(), comm_rec(e->lhs()));
    case ExprKind::Inv:
      return cf_inv(comm_rec(e->lhs()));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

CommFraction comm_of_expr(const ExprPtr& e) {
  if (!e) throw std::invalid_argument("empty expression");
  if (!e->instance().commutative())
    throw std::domain_error("classical fractions need a commutative instance");
  if (classify(e) == LegalityClass::Illegal)
    throw IllegalExpression("expression inverts a null subexpression");
  return comm_rec(e);
}

CommFraction comm_of_fraction(const Fraction& f) {
  return comm_of_expr(f.nf());
}

Fraction fraction_of_comm(const CommFraction& c) {
  return Fraction(Expr::make_mul(Expr::make_atom(c.num),
                                 Expr::make_inv(Expr::make_atom(c.den))));
}

bool gamma_base_form(const CommFraction& a, const CommFraction& b) {
  return a.den.is_one() && b.den.is_one() && base_leq(a.num, b.num);
}

}  // namespace semifrac
