// Fixpoint driver for the oriented rewrite system plus the step enumerator.
//
// Each pass applies the first match found in a fixed scan order, so the
// produced trace is deterministic. Composite transformations emit their
// whole chain of single-family steps through the same validated apply path
// that replay uses.

#include "semifrac/parser.hpp"
#include "semifrac/rewrite.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace semifrac {

namespace {

constexpr size_t kStepLimit = 200000;

ExprPtr zero_atom(const Instance& inst) { return Expr::make_atom(inst.zero()); }
ExprPtr one_atom(const Instance& inst) { return Expr::make_atom(inst.one()); }

ExprPath sub(const ExprPath& p, int i) {
  ExprPath q = p;
  q.push_back(i);
  return q;
}

ExprPath sub(const ExprPath& p, int i, int j) {
  ExprPath q = p;
  q.push_back(i);
  q.push_back(j);
  return q;
}

class Rewriter {
 public:
  explicit Rewriter(ExprPtr root) : root_(std::move(root)) {}

  const ExprPtr& root() const { return root_; }
  size_t step_count() const { return steps_.size(); }
  std::vector<RewriteStep> take_steps() { return std::move(steps_); }

  void apply(RuleId rule, bool reverse, ExprPath path, ExprPtr after) {
    RewriteStep s{rule, reverse, std::move(path), std::move(after)};
    root_ = apply_step(root_, s);
    steps_.push_back(std::move(s));
  }

 private:
  ExprPtr root_;
  std::vector<RewriteStep> steps_;
};

bool is_zero_atom(const ExprPtr& e) {
  return e->kind() == ExprKind::Atom && e->atom().is_zero();
}

bool is_one_atom(const ExprPtr& e) {
  return e->kind() == ExprKind::Atom && e->atom().is_one();
}

// Null nodes become the zero atom, outermost first.
//
// Every handler below takes its node by value: applying a step rebuilds the
// spine above the target path, so references into the old tree would dangle
// mid-chain. A held copy keeps the original pieces alive and stable.
bool collapse_null(Rewriter& rw) {
  std::function<bool(ExprPtr, ExprPath&)> go = [&](ExprPtr n,
                                                   ExprPath& p) -> bool {
    if (classify(n) == LegalityClass::Null) {
      if (n->kind() == ExprKind::Atom) return false;
      rw.apply(RuleId::NullToZero, false, p, zero_atom(n->instance()));
      return true;
    }
    switch (n->kind()) {
      case ExprKind::Atom:
        return false;
      case ExprKind::Scale:
      case ExprKind::Inv: {
        p.push_back(0);
        bool hit = go(n->lhs(), p);
        p.pop_back();
        return hit;
      }
      case ExprKind::Add:
      case ExprKind::Mul: {
        p.push_back(0);
        if (go(n->lhs(), p)) {
          p.pop_back();
          return true;
        }
        p.back() = 1;
        bool hit = go(n->rhs(), p);
        p.pop_back();
        return hit;
      }
    }
    return false;
  };
  ExprPath p;
  return go(rw.root(), p);
}

// Maximal inverse-free subtrees become single atoms.
bool collapse_eval(Rewriter& rw) {
  std::function<bool(ExprPtr, ExprPath&)> go = [&](ExprPtr n,
                                                   ExprPath& p) -> bool {
    if (n->kind() == ExprKind::Atom) return false;
    if (!contains_inv(n)) {
      rw.apply(RuleId::EvalIdentity, false, p, Expr::make_atom(eval_in_S(n)));
      return true;
    }
    switch (n->kind()) {
      case ExprKind::Scale:
      case ExprKind::Inv: {
        p.push_back(0);
        bool hit = go(n->lhs(), p);
        p.pop_back();
        return hit;
      }
      case ExprKind::Add:
      case ExprKind::Mul: {
        p.push_back(0);
        if (go(n->lhs(), p)) {
          p.pop_back();
          return true;
        }
        p.back() = 1;
        bool hit = go(n->rhs(), p);
        p.pop_back();
        return hit;
      }
      default:
        return false;
    }
  };
  ExprPath p;
  return go(rw.root(), p);
}

// Extracts the scalar content of an atom factor and pulls it in front of the
// product. Fires only inside product spines that contain an inverse, so the
// evaluation collapse cannot undo it.
bool pull_atom_content(Rewriter& rw, ExprPtr n, const ExprPath& p, int side) {
  const ExprPtr& f = side == 0 ? n->lhs() : n->rhs();
  const Instance& inst = n->instance();
  Scalar c = f->atom().value.content();
  if (c.is_zero() || c.is_one()) return false;
  Polynomial prim = f->atom().value.scale(c.reciprocal());
  ExprPtr prim_atom = Expr::make_atom(inst.make(prim));
  rw.apply(RuleId::EvalIdentity, false, sub(p, side),
           Expr::make_scale(c, prim_atom));
  if (side == 0) {
    rw.apply(RuleId::ScaleMulLeft, true, p,
             Expr::make_scale(c, Expr::make_mul(prim_atom, n->rhs())));
  } else {
    rw.apply(RuleId::ScaleMulRight, true, p,
             Expr::make_scale(c, Expr::make_mul(n->lhs(), prim_atom)));
  }
  return true;
}

bool try_inv_node(Rewriter& rw, ExprPtr n, const ExprPath& p) {
  const Instance& inst = n->instance();
  const ExprPtr& c = n->lhs();
  switch (c->kind()) {
    case ExprKind::Atom: {
      const BaseElement& v = c->atom();
      if (v.is_one()) {
        rw.apply(RuleId::InvOne, false, p, one_atom(inst));
        return true;
      }
      if (v.is_positive_constant()) {
        Scalar c0 = v.value.constant_term();
        rw.apply(RuleId::EvalIdentity, false, sub(p, 0),
                 Expr::make_scale(c0, one_atom(inst)));
        rw.apply(RuleId::ScaleInv, true, p,
                 Expr::make_scale(c0.reciprocal(), Expr::make_inv(one_atom(inst))));
        rw.apply(RuleId::InvOne, false, sub(p, 0), one_atom(inst));
        rw.apply(RuleId::EvalIdentity, false, p,
                 Expr::make_atom(inst.from_scalar(c0.reciprocal())));
        return true;
      }
      Scalar content = v.value.content();
      if (!content.is_zero() && !content.is_one()) {
        Polynomial prim = v.value.scale(content.reciprocal());
        ExprPtr prim_atom = Expr::make_atom(inst.make(prim));
        rw.apply(RuleId::EvalIdentity, false, sub(p, 0),
                 Expr::make_scale(content, prim_atom));
        rw.apply(RuleId::ScaleInv, true, p,
                 Expr::make_scale(content.reciprocal(), Expr::make_inv(prim_atom)));
        return true;
      }
      return false;
    }
    case ExprKind::Mul: {
      rw.apply(RuleId::InvMul, false, p,
               Expr::make_mul(Expr::make_inv(c->rhs()), Expr::make_inv(c->lhs())));
      return true;
    }
    case ExprKind::Scale: {
      rw.apply(RuleId::ScaleInv, true, p,
               Expr::make_scale(c->scalar().reciprocal(), Expr::make_inv(c->lhs())));
      return true;
    }
    case ExprKind::Inv: {
      const ExprPtr& a = c->lhs();
      ExprPtr inv_a = Expr::make_inv(a);
      rw.apply(RuleId::MulOneRight, true, p, Expr::make_mul(n, one_atom(inst)));
      rw.apply(RuleId::InvCancelLeft, true, sub(p, 1), Expr::make_mul(inv_a, a));
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(n, inv_a), a));
      rw.apply(RuleId::InvCancelLeft, false, sub(p, 0), one_atom(inst));
      rw.apply(RuleId::MulOneLeft, false, p, a);
      return true;
    }
    case ExprKind::Add:
      return false;
  }
  return false;
}

// Cancels Inv(Atom d) against an adjacent atom factor through one of the
// exact one-sided quotients. Four shapes: the inverse on either side, with
// or without a trailing spine.
bool try_division_cancel(Rewriter& rw, ExprPtr n, const ExprPath& p) {
  const Instance& inst = n->instance();
  const ExprPtr& a = n->lhs();
  const ExprPtr& b = n->rhs();
  bool comm = inst.commutative();

  auto quotient_atom = [&](const Polynomial& c, const Polynomial& d,
                           bool left) -> ExprPtr {
    auto q = left ? left_quotient(c, d, comm) : right_quotient(c, d, comm);
    if (!q || !inst.is_member(*q)) return nullptr;
    return Expr::make_atom(inst.make(*q));
  };

  // Atom(c) * Inv(Atom(d)) with c == q*d.
  if (a->kind() == ExprKind::Atom && b->kind() == ExprKind::Inv &&
      b->lhs()->kind() == ExprKind::Atom) {
    const ExprPtr& d = b->lhs();
    ExprPtr qa = quotient_atom(a->atom().value, d->atom().value, false);
    if (qa) {
      rw.apply(RuleId::EvalIdentity, false, sub(p, 0), Expr::make_mul(qa, d));
      rw.apply(RuleId::MulAssoc, false, p,
               Expr::make_mul(qa, Expr::make_mul(d, b)));
      rw.apply(RuleId::InvCancelRight, false, sub(p, 1), one_atom(inst));
      rw.apply(RuleId::MulOneRight, false, p, qa);
      return true;
    }
  }
  // Atom(c) * (Inv(Atom(d)) * rest).
  if (a->kind() == ExprKind::Atom && b->kind() == ExprKind::Mul &&
      b->lhs()->kind() == ExprKind::Inv &&
      b->lhs()->lhs()->kind() == ExprKind::Atom) {
    const ExprPtr& inv_d = b->lhs();
    const ExprPtr& d = inv_d->lhs();
    const ExprPtr& rest = b->rhs();
    ExprPtr qa = quotient_atom(a->atom().value, d->atom().value, false);
    if (qa) {
      rw.apply(RuleId::EvalIdentity, false, sub(p, 0), Expr::make_mul(qa, d));
      rw.apply(RuleId::MulAssoc, false, p,
               Expr::make_mul(qa, Expr::make_mul(d, b)));
      rw.apply(RuleId::MulAssoc, true, sub(p, 1),
               Expr::make_mul(Expr::make_mul(d, inv_d), rest));
      rw.apply(RuleId::InvCancelRight, false, sub(p, 1, 0), one_atom(inst));
      rw.apply(RuleId::MulOneLeft, false, sub(p, 1), rest);
      return true;
    }
  }
  // Inv(Atom(d)) * Atom(c) with c == d*q.
  if (a->kind() == ExprKind::Inv && a->lhs()->kind() == ExprKind::Atom &&
      b->kind() == ExprKind::Atom) {
    const ExprPtr& d = a->lhs();
    ExprPtr qa = quotient_atom(b->atom().value, d->atom().value, true);
    if (qa) {
      rw.apply(RuleId::EvalIdentity, false, sub(p, 1), Expr::make_mul(d, qa));
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(a, d), qa));
      rw.apply(RuleId::InvCancelLeft, false, sub(p, 0), one_atom(inst));
      rw.apply(RuleId::MulOneLeft, false, p, qa);
      return true;
    }
  }
  // Inv(Atom(d)) * (Atom(c) * rest).
  if (a->kind() == ExprKind::Inv && a->lhs()->kind() == ExprKind::Atom &&
      b->kind() == ExprKind::Mul && b->lhs()->kind() == ExprKind::Atom) {
    const ExprPtr& d = a->lhs();
    const ExprPtr& c_atom = b->lhs();
    const ExprPtr& rest = b->rhs();
    ExprPtr qa = quotient_atom(c_atom->atom().value, d->atom().value, true);
    if (qa) {
      rw.apply(RuleId::EvalIdentity, false, sub(p, 1, 0), Expr::make_mul(d, qa));
      rw.apply(RuleId::MulAssoc, false, sub(p, 1),
               Expr::make_mul(d, Expr::make_mul(qa, rest)));
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(a, d), Expr::make_mul(qa, rest)));
      rw.apply(RuleId::InvCancelLeft, false, sub(p, 0), one_atom(inst));
      rw.apply(RuleId::MulOneLeft, false, p, Expr::make_mul(qa, rest));
      return true;
    }
  }
  return false;
}

bool try_mul_node(Rewriter& rw, ExprPtr n, const ExprPath& p) {
  const Instance& inst = n->instance();
  const ExprPtr& a = n->lhs();
  const ExprPtr& b = n->rhs();

  if (a->kind() == ExprKind::Mul) {
    rw.apply(RuleId::MulAssoc, false, p,
             Expr::make_mul(a->lhs(), Expr::make_mul(a->rhs(), b)));
    return true;
  }
  if (is_one_atom(a)) {
    rw.apply(RuleId::MulOneLeft, false, p, b);
    return true;
  }
  if (is_one_atom(b)) {
    rw.apply(RuleId::MulOneRight, false, p, a);
    return true;
  }
  if (a->kind() == ExprKind::Scale) {
    rw.apply(RuleId::ScaleMulLeft, true, p,
             Expr::make_scale(a->scalar(), Expr::make_mul(a->lhs(), b)));
    return true;
  }
  if (b->kind() == ExprKind::Scale) {
    rw.apply(RuleId::ScaleMulRight, true, p,
             Expr::make_scale(b->scalar(), Expr::make_mul(a, b->lhs())));
    return true;
  }
  if (a->kind() == ExprKind::Atom && pull_atom_content(rw, n, p, 0)) return true;
  if (b->kind() == ExprKind::Atom && pull_atom_content(rw, n, p, 1)) return true;

  if (a->kind() == ExprKind::Inv && structurally_equal(a->lhs(), b)) {
    rw.apply(RuleId::InvCancelLeft, false, p, one_atom(inst));
    return true;
  }
  if (b->kind() == ExprKind::Inv && structurally_equal(b->lhs(), a)) {
    rw.apply(RuleId::InvCancelRight, false, p, one_atom(inst));
    return true;
  }
  // Adjacent atom inverses fuse into one inverted product, which the
  // evaluation collapse then turns into a single inverted atom.
  auto is_atom_inv = [](const ExprPtr& e) {
    return e->kind() == ExprKind::Inv && e->lhs()->kind() == ExprKind::Atom;
  };
  if (is_atom_inv(a) && is_atom_inv(b)) {
    rw.apply(RuleId::InvMul, true, p,
             Expr::make_inv(Expr::make_mul(b->lhs(), a->lhs())));
    return true;
  }
  if (b->kind() == ExprKind::Mul) {
    const ExprPtr& h = b->lhs();
    const ExprPtr& rest = b->rhs();
    if (is_atom_inv(a) && is_atom_inv(h)) {
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(a, h), rest));
      rw.apply(RuleId::InvMul, true, sub(p, 0),
               Expr::make_inv(Expr::make_mul(h->lhs(), a->lhs())));
      return true;
    }
    bool left_cancel = a->kind() == ExprKind::Inv && structurally_equal(a->lhs(), h);
    bool right_cancel = h->kind() == ExprKind::Inv && structurally_equal(h->lhs(), a);
    if (left_cancel || right_cancel) {
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(a, h), rest));
      rw.apply(left_cancel ? RuleId::InvCancelLeft : RuleId::InvCancelRight,
               false, sub(p, 0), one_atom(inst));
      rw.apply(RuleId::MulOneLeft, false, p, rest);
      return true;
    }
    if (a->kind() == ExprKind::Atom && h->kind() == ExprKind::Atom) {
      rw.apply(RuleId::MulAssoc, true, p,
               Expr::make_mul(Expr::make_mul(a, h), rest));
      rw.apply(RuleId::EvalIdentity, false, sub(p, 0),
               Expr::make_atom(base_mul(a->atom(), h->atom())));
      return true;
    }
  }
  return try_division_cancel(rw, n, p);
}

bool try_scale_node(Rewriter& rw, ExprPtr n, const ExprPath& p) {
  const ExprPtr& c = n->lhs();
  if (n->scalar().is_one()) {
    rw.apply(RuleId::ScaleOne, false, p, c);
    return true;
  }
  if (c->kind() == ExprKind::Scale) {
    rw.apply(RuleId::ScaleScale, true, p,
             Expr::make_scale(n->scalar() * c->scalar(), c->lhs()));
    return true;
  }
  if (c->kind() == ExprKind::Add) {
    rw.apply(RuleId::ScaleAddDist, false, p,
             Expr::make_add(Expr::make_scale(n->scalar(), c->lhs()),
                            Expr::make_scale(n->scalar(), c->rhs())));
    return true;
  }
  return false;
}

struct SummandParts {
  Scalar coef;
  ExprPtr core;
};

SummandParts decompose_summand(const ExprPtr& t) {
  if (t->kind() == ExprKind::Scale) return {t->scalar(), t->lhs()};
  return {Scalar(1), t};
}

bool try_add_node(Rewriter& rw, ExprPtr n, const ExprPath& p) {
  const ExprPtr& a = n->lhs();
  const ExprPtr& b = n->rhs();

  if (a->kind() == ExprKind::Add) {
    rw.apply(RuleId::AddAssoc, false, p,
             Expr::make_add(a->lhs(), Expr::make_add(a->rhs(), b)));
    return true;
  }
  if (is_zero_atom(a)) {
    rw.apply(RuleId::AddZeroLeft, false, p, b);
    return true;
  }
  if (is_zero_atom(b)) {
    rw.apply(RuleId::AddZeroRight, false, p, a);
    return true;
  }

  bool has_rest = b->kind() == ExprKind::Add;
  const ExprPtr& t1 = a;
  const ExprPtr& t2 = has_rest ? b->lhs() : b;
  SummandParts s1 = decompose_summand(t1);
  SummandParts s2 = decompose_summand(t2);

  if (t1->kind() == ExprKind::Atom && t2->kind() == ExprKind::Atom) {
    // Adjacent atom summands add up in the base.
    ExprPtr merged = Expr::make_atom(base_add(t1->atom(), t2->atom()));
    if (has_rest) {
      rw.apply(RuleId::AddAssoc, true, p,
               Expr::make_add(Expr::make_add(t1, t2), b->rhs()));
      rw.apply(RuleId::EvalIdentity, false, sub(p, 0), merged);
    } else {
      rw.apply(RuleId::EvalIdentity, false, p, merged);
    }
    return true;
  }

  if (structurally_equal(s1.core, s2.core)) {
    ExprPtr w1 = t1->kind() == ExprKind::Scale
                     ? t1
                     : Expr::make_scale(Scalar(1), t1);
    ExprPtr w2 = t2->kind() == ExprKind::Scale
                     ? t2
                     : Expr::make_scale(Scalar(1), t2);
    if (t1->kind() != ExprKind::Scale)
      rw.apply(RuleId::ScaleOne, true, sub(p, 0), w1);
    if (t2->kind() != ExprKind::Scale)
      rw.apply(RuleId::ScaleOne, true, has_rest ? sub(p, 1, 0) : sub(p, 1), w2);
    ExprPtr merged = Expr::make_scale(s1.coef + s2.coef, s1.core);
    if (has_rest) {
      rw.apply(RuleId::AddAssoc, true, p,
               Expr::make_add(Expr::make_add(w1, w2), b->rhs()));
      rw.apply(RuleId::ScaleSplit, true, sub(p, 0), merged);
    } else {
      rw.apply(RuleId::ScaleSplit, true, p, merged);
    }
    return true;
  }

  // Adjacent summands sharing an inverse factor on the same side pull it out
  // of the sum; the leftover sum can then collapse or cancel on its own.
  // Contractive: one product node and one copy of the factor disappear.
  using Split = std::pair<ExprPtr, ExprPtr>;
  auto inv_lead = [](const ExprPtr& core) -> std::optional<Split> {
    if (core->kind() == ExprKind::Inv) return Split{core, nullptr};
    if (core->kind() == ExprKind::Mul && core->lhs()->kind() == ExprKind::Inv)
      return Split{core->lhs(), core->rhs()};
    return std::nullopt;
  };
  auto inv_trail = [](const ExprPtr& core) -> std::optional<Split> {
    if (core->kind() == ExprKind::Inv) return Split{core, nullptr};
    if (core->kind() == ExprKind::Mul && core->rhs()->kind() == ExprKind::Inv)
      return Split{core->rhs(), core->lhs()};
    return std::nullopt;
  };
  auto f1 = inv_lead(s1.core);
  auto f2 = inv_lead(s2.core);
  bool lead = f1 && f2 && structurally_equal(f1->first, f2->first);
  if (!lead) {
    f1 = inv_trail(s1.core);
    f2 = inv_trail(s2.core);
  }
  if (lead || (f1 && f2 && structurally_equal(f1->first, f2->first))) {
    ExprPtr one = one_atom(n->instance());
    ExprPtr inv = f1->first;
    // Rewrites the summand at q into Mul(inv, Y) or Mul(Y, inv); returns Y.
    auto shape = [&](const ExprPtr& t, const SummandParts& s, const Split& f,
                     const ExprPath& q) -> ExprPtr {
      ExprPtr rest = f.second;
      bool scaled = t->kind() == ExprKind::Scale;
      if (!rest) {
        ExprPath cq = scaled ? sub(q, 0) : q;
        if (lead)
          rw.apply(RuleId::MulOneRight, true, cq, Expr::make_mul(inv, one));
        else
          rw.apply(RuleId::MulOneLeft, true, cq, Expr::make_mul(one, inv));
        rest = one;
      }
      if (!scaled) return rest;
      ExprPtr y = Expr::make_scale(s.coef, rest);
      if (lead)
        rw.apply(RuleId::ScaleMulRight, false, q, Expr::make_mul(inv, y));
      else
        rw.apply(RuleId::ScaleMulLeft, false, q, Expr::make_mul(y, inv));
      return y;
    };
    ExprPtr y1 = shape(t1, s1, *f1, sub(p, 0));
    ExprPtr y2 = shape(t2, s2, *f2, has_rest ? sub(p, 1, 0) : sub(p, 1));
    ExprPtr u1 = lead ? Expr::make_mul(inv, y1) : Expr::make_mul(y1, inv);
    ExprPtr u2 = lead ? Expr::make_mul(inv, y2) : Expr::make_mul(y2, inv);
    ExprPath dq = p;
    if (has_rest) {
      rw.apply(RuleId::AddAssoc, true, p,
               Expr::make_add(Expr::make_add(u1, u2), b->rhs()));
      dq = sub(p, 0);
    }
    if (lead)
      rw.apply(RuleId::DistLeft, true, dq,
               Expr::make_mul(inv, Expr::make_add(y1, y2)));
    else
      rw.apply(RuleId::DistRight, true, dq,
               Expr::make_mul(Expr::make_add(y1, y2), inv));
    return true;
  }

  if (render(s2.core) < render(s1.core)) {
    if (has_rest) {
      rw.apply(RuleId::AddAssoc, true, p,
               Expr::make_add(Expr::make_add(t1, t2), b->rhs()));
      rw.apply(RuleId::AddComm, false, sub(p, 0), Expr::make_add(t2, t1));
      rw.apply(RuleId::AddAssoc, false, p,
               Expr::make_add(t2, Expr::make_add(t1, b->rhs())));
    } else {
      rw.apply(RuleId::AddComm, false, p, Expr::make_add(t2, t1));
    }
    return true;
  }
  return false;
}

bool structural_scan(Rewriter& rw, ExprPtr n, ExprPath& p) {
  bool hit = false;
  switch (n->kind()) {
    case ExprKind::Atom:
      return false;
    case ExprKind::Inv:
      hit = try_inv_node(rw, n, p);
      break;
    case ExprKind::Mul:
      hit = try_mul_node(rw, n, p);
      break;
    case ExprKind::Scale:
      hit = try_scale_node(rw, n, p);
      break;
    case ExprKind::Add:
      hit = try_add_node(rw, n, p);
      break;
  }
  if (hit) return true;
  switch (n->kind()) {
    case ExprKind::Atom:
      return false;
    case ExprKind::Scale:
    case ExprKind::Inv: {
      p.push_back(0);
      bool r = structural_scan(rw, n->lhs(), p);
      p.pop_back();
      return r;
    }
    case ExprKind::Add:
    case ExprKind::Mul: {
      p.push_back(0);
      if (structural_scan(rw, n->lhs(), p)) {
        p.pop_back();
        return true;
      }
      p.back() = 1;
      bool r = structural_scan(rw, n->rhs(), p);
      p.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

NormalizeResult normalize(const ExprPtr& e) {
  if (!e) throw std::invalid_argument("normalize: empty expression");
  if (classify(e) == LegalityClass::Illegal)
    throw IllegalExpression("cannot normalize an illegal expression");
  Rewriter rw(e);
  for (;;) {
    if (rw.step_count() > kStepLimit)
      throw std::logic_error("normalize exceeded its step limit");
    if (collapse_null(rw)) continue;
    if (collapse_eval(rw)) continue;
    ExprPath p;
    if (structural_scan(rw, rw.root(), p)) continue;
    break;
  }
  return NormalizeResult{rw.root(), rw.take_steps()};
}

namespace {

void emit(std::vector<RewriteStep>& out, RuleId rule, bool reverse,
          const ExprPath& p, ExprPtr after) {
  out.push_back(RewriteStep{rule, reverse, p, std::move(after)});
}

void enumerate_at(const ExprPtr& n, const ExprPath& p, const StepGenOptions& opts,
                  std::vector<RewriteStep>& out) {
  using K = ExprKind;
  const Instance& inst = n->instance();

  if (n->kind() == K::Add) {
    const ExprPtr& a = n->lhs();
    const ExprPtr& b = n->rhs();
    if (a->kind() == K::Add)
      emit(out, RuleId::AddAssoc, false, p,
           Expr::make_add(a->lhs(), Expr::make_add(a->rhs(), b)));
    if (b->kind() == K::Add)
      emit(out, RuleId::AddAssoc, true, p,
           Expr::make_add(Expr::make_add(a, b->lhs()), b->rhs()));
    emit(out, RuleId::AddComm, false, p, Expr::make_add(b, a));
    if (is_zero_atom(a)) emit(out, RuleId::AddZeroLeft, false, p, b);
    if (is_zero_atom(b)) emit(out, RuleId::AddZeroRight, false, p, a);
    if (a->kind() == K::Mul && b->kind() == K::Mul) {
      if (structurally_equal(a->lhs(), b->lhs()))
        emit(out, RuleId::DistLeft, true, p,
             Expr::make_mul(a->lhs(), Expr::make_add(a->rhs(), b->rhs())));
      if (structurally_equal(a->rhs(), b->rhs()))
        emit(out, RuleId::DistRight, true, p,
             Expr::make_mul(Expr::make_add(a->lhs(), b->lhs()), a->rhs()));
    }
    if (a->kind() == K::Scale && b->kind() == K::Scale) {
      if (a->scalar() == b->scalar())
        emit(out, RuleId::ScaleAddDist, true, p,
             Expr::make_scale(a->scalar(), Expr::make_add(a->lhs(), b->lhs())));
      if (structurally_equal(a->lhs(), b->lhs()))
        emit(out, RuleId::ScaleSplit, true, p,
             Expr::make_scale(a->scalar() + b->scalar(), a->lhs()));
    }
  }

  if (n->kind() == K::Mul) {
    const ExprPtr& a = n->lhs();
    const ExprPtr& b = n->rhs();
    if (a->kind() == K::Mul)
      emit(out, RuleId::MulAssoc, false, p,
           Expr::make_mul(a->lhs(), Expr::make_mul(a->rhs(), b)));
    if (b->kind() == K::Mul)
      emit(out, RuleId::MulAssoc, true, p,
           Expr::make_mul(Expr::make_mul(a, b->lhs()), b->rhs()));
    if (is_one_atom(a)) emit(out, RuleId::MulOneLeft, false, p, b);
    if (is_one_atom(b)) emit(out, RuleId::MulOneRight, false, p, a);
    if (is_zero_atom(a)) emit(out, RuleId::MulZeroLeft, false, p, zero_atom(inst));
    if (is_zero_atom(b)) emit(out, RuleId::MulZeroRight, false, p, zero_atom(inst));
    if (b->kind() == K::Add)
      emit(out, RuleId::DistLeft, false, p,
           Expr::make_add(Expr::make_mul(a, b->lhs()), Expr::make_mul(a, b->rhs())));
    if (a->kind() == K::Add)
      emit(out, RuleId::DistRight, false, p,
           Expr::make_add(Expr::make_mul(a->lhs(), b), Expr::make_mul(a->rhs(), b)));
    if (a->kind() == K::Scale)
      emit(out, RuleId::ScaleMulLeft, true, p,
           Expr::make_scale(a->scalar(), Expr::make_mul(a->lhs(), b)));
    if (b->kind() == K::Scale)
      emit(out, RuleId::ScaleMulRight, true, p,
           Expr::make_scale(b->scalar(), Expr::make_mul(a, b->lhs())));
    if (a->kind() == K::Inv && structurally_equal(a->lhs(), b))
      emit(out, RuleId::InvCancelLeft, false, p, one_atom(inst));
    if (b->kind() == K::Inv && structurally_equal(b->lhs(), a))
      emit(out, RuleId::InvCancelRight, false, p, one_atom(inst));
    if (a->kind() == K::Inv && b->kind() == K::Inv)
      emit(out, RuleId::InvMul, true, p,
           Expr::make_inv(Expr::make_mul(b->lhs(), a->lhs())));
  }

  if (n->kind() == K::Scale) {
    const ExprPtr& c = n->lhs();
    if (n->scalar().is_one()) emit(out, RuleId::ScaleOne, false, p, c);
    if (n->scalar().is_zero()) emit(out, RuleId::ScaleZero, false, p, zero_atom(inst));
    if (c->kind() == K::Add)
      emit(out, RuleId::ScaleAddDist, false, p,
           Expr::make_add(Expr::make_scale(n->scalar(), c->lhs()),
                          Expr::make_scale(n->scalar(), c->rhs())));
    if (c->kind() == K::Mul) {
      emit(out, RuleId::ScaleMulLeft, false, p,
           Expr::make_mul(Expr::make_scale(n->scalar(), c->lhs()), c->rhs()));
      emit(out, RuleId::ScaleMulRight, false, p,
           Expr::make_mul(c->lhs(), Expr::make_scale(n->scalar(), c->rhs())));
    }
    if (c->kind() == K::Scale)
      emit(out, RuleId::ScaleScale, true, p,
           Expr::make_scale(n->scalar() * c->scalar(), c->lhs()));
    if (c->kind() == K::Inv && !n->scalar().is_zero())
      emit(out, RuleId::ScaleInv, false, p,
           Expr::make_inv(Expr::make_scale(n->scalar().reciprocal(), c->lhs())));
    if (opts.include_expansive && !n->scalar().is_zero()) {
      Scalar half = n->scalar() / Scalar(2);
      emit(out, RuleId::ScaleSplit, false, p,
           Expr::make_add(Expr::make_scale(half, c), Expr::make_scale(half, c)));
    }
  }

  if (n->kind() == K::Inv) {
    const ExprPtr& c = n->lhs();
    if (c->kind() == K::Mul)
      emit(out, RuleId::InvMul, false, p,
           Expr::make_mul(Expr::make_inv(c->rhs()), Expr::make_inv(c->lhs())));
    if (is_one_atom(c)) emit(out, RuleId::InvOne, false, p, one_atom(inst));
    if (c->kind() == K::Scale && !c->scalar().is_zero())
      emit(out, RuleId::ScaleInv, true, p,
           Expr::make_scale(c->scalar().reciprocal(), Expr::make_inv(c->lhs())));
  }

  if (n->kind() != K::Atom && !contains_inv(n))
    emit(out, RuleId::EvalIdentity, false, p, Expr::make_atom(eval_in_S(n)));
  if (n->kind() != K::Atom && classify(n) == LegalityClass::Null)
    emit(out, RuleId::NullToZero, false, p, zero_atom(inst));

  if (opts.include_expansive) {
    emit(out, RuleId::MulOneRight, true, p, Expr::make_mul(n, one_atom(inst)));
    emit(out, RuleId::MulOneLeft, true, p, Expr::make_mul(one_atom(inst), n));
    emit(out, RuleId::AddZeroLeft, true, p, Expr::make_add(zero_atom(inst), n));
    emit(out, RuleId::ScaleOne, true, p, Expr::make_scale(Scalar(1), n));
    if (is_one_atom(n)) {
      emit(out, RuleId::InvOne, true, p, Expr::make_inv(one_atom(inst)));
      for (const BaseElement& t : opts.cancel_pool) {
        if (t.is_zero() || !(t.inst == inst)) continue;
        ExprPtr ta = Expr::make_atom(t);
        emit(out, RuleId::InvCancelLeft, true, p,
             Expr::make_mul(Expr::make_inv(ta), ta));
        emit(out, RuleId::InvCancelRight, true, p,
             Expr::make_mul(ta, Expr::make_inv(ta)));
      }
    }
    if (n->kind() == K::Atom && !n->atom().is_zero()) {
      const Polynomial& v = n->atom().value;
      if (n->atom().is_positive_constant() && !n->atom().is_one())
        emit(out, RuleId::EvalIdentity, false, p,
             Expr::make_scale(v.constant_term(), one_atom(inst)));
      for (const BaseElement& d : opts.cancel_pool) {
        if (d.is_zero() || d.is_one() || !(d.inst == inst)) continue;
        if (auto q = right_quotient(v, d.value, inst.commutative());
            q && inst.is_member(*q))
          emit(out, RuleId::EvalIdentity, false, p,
               Expr::make_mul(Expr::make_atom(inst.make(*q)), Expr::make_atom(d)));
        if (auto q = left_quotient(v, d.value, inst.commutative());
            q && inst.is_member(*q))
          emit(out, RuleId::EvalIdentity, false, p,
               Expr::make_mul(Expr::make_atom(d), Expr::make_atom(inst.make(*q))));
      }
    }
  }
}

void enumerate_rec(const ExprPtr& n, ExprPath& p, const StepGenOptions& opts,
                   std::vector<RewriteStep>& out) {
  enumerate_at(n, p, opts, out);
  switch (n->kind()) {
    case ExprKind::Atom:
      return;
    case ExprKind::Scale:
    case ExprKind::Inv:
      p.push_back(0);
      enumerate_rec(n->lhs(), p, opts, out);
      p.pop_back();
      return;
    case ExprKind::Add:
    case ExprKind::Mul:
      p.push_back(0);
      enumerate_rec(n->lhs(), p, opts, out);
      p.back() = 1;
      enumerate_rec(n->rhs(), p, opts, out);
      p.pop_back();
      return;
  }
}

}  // namespace

std::vector<RewriteStep> enumerate_steps(const ExprPtr& e, const StepGenOptions& opts) {
  std::vector<RewriteStep> out;
  ExprPath p;
  enumerate_rec(e, p, opts, out);
  return out;
}

}  // namespace semifrac
