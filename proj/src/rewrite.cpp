#include "semifrac/rewrite.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace semifrac {

namespace {

struct RuleInfo {
  RuleId id;
  const char* name;
  RuleFamily family;
};

constexpr std::array<RuleInfo, 25> kRules = {{
    {RuleId::AddAssoc, "add-assoc", RuleFamily::SemiringLaw},
    {RuleId::MulAssoc, "mul-assoc", RuleFamily::SemiringLaw},
    {RuleId::DistLeft, "dist-left", RuleFamily::SemiringLaw},
    {RuleId::DistRight, "dist-right", RuleFamily::SemiringLaw},
    {RuleId::AddComm, "add-comm", RuleFamily::SemiringLaw},
    {RuleId::AddZeroLeft, "add-zero-left", RuleFamily::SemiringLaw},
    {RuleId::AddZeroRight, "add-zero-right", RuleFamily::SemiringLaw},
    {RuleId::MulOneLeft, "mul-one-left", RuleFamily::UnitAbsorption},
    {RuleId::MulOneRight, "mul-one-right", RuleFamily::UnitAbsorption},
    {RuleId::MulZeroLeft, "mul-zero-left", RuleFamily::UnitAbsorption},
    {RuleId::MulZeroRight, "mul-zero-right", RuleFamily::UnitAbsorption},
    {RuleId::ScaleAddDist, "scale-add-dist", RuleFamily::ScalarLaw},
    {RuleId::ScaleSplit, "scale-split", RuleFamily::ScalarLaw},
    {RuleId::ScaleMulLeft, "scale-mul-left", RuleFamily::ScalarLaw},
    {RuleId::ScaleMulRight, "scale-mul-right", RuleFamily::ScalarLaw},
    {RuleId::ScaleScale, "scale-scale", RuleFamily::ScalarLaw},
    {RuleId::ScaleOne, "scale-one", RuleFamily::ScalarLaw},
    {RuleId::ScaleZero, "scale-zero", RuleFamily::ScalarLaw},
    {RuleId::InvCancelLeft, "inv-cancel-left", RuleFamily::InverseLaw},
    {RuleId::InvCancelRight, "inv-cancel-right", RuleFamily::InverseLaw},
    {RuleId::InvMul, "inv-mul", RuleFamily::InverseLaw},
    {RuleId::InvOne, "inv-one", RuleFamily::InverseLaw},
    {RuleId::ScaleInv, "scale-inv", RuleFamily::InverseLaw},
    {RuleId::EvalIdentity, "eval-identity", RuleFamily::BaseIdentity},
    {RuleId::NullToZero, "null-to-zero", RuleFamily::NullCollapse},
}};

const RuleInfo& info(RuleId id) {
  for (const auto& r : kRules) {
    if (r.id == id) return r;
  }
  throw std::logic_error("unknown rule id");
}

bool eq(const ExprPtr& a, const ExprPtr& b) { return structurally_equal(a, b); }

bool is_zero_atom(const ExprPtr& e) {
  return e->kind() == ExprKind::Atom && e->atom().is_zero();
}

bool is_one_atom(const ExprPtr& e) {
  return e->kind() == ExprKind::Atom && e->atom().is_one();
}

bool is_kind(const ExprPtr& e, ExprKind k) { return e->kind() == k; }

// Validators take the pair in canonical orientation (left pattern, right
// pattern) of the comment in the header.
bool canonical_valid(RuleId rule, const ExprPtr& l, const ExprPtr& r) {
  using K = ExprKind;
  switch (rule) {
    case RuleId::AddAssoc:
      return is_kind(l, K::Add) && is_kind(l->lhs(), K::Add) &&
             is_kind(r, K::Add) && is_kind(r->rhs(), K::Add) &&
             eq(l->lhs()->lhs(), r->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs()->lhs()) &&
             eq(l->rhs(), r->rhs()->rhs());
    case RuleId::MulAssoc:
      return is_kind(l, K::Mul) && is_kind(l->lhs(), K::Mul) &&
             is_kind(r, K::Mul) && is_kind(r->rhs(), K::Mul) &&
             eq(l->lhs()->lhs(), r->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs()->lhs()) &&
             eq(l->rhs(), r->rhs()->rhs());
    case RuleId::DistLeft:
      return is_kind(l, K::Mul) && is_kind(l->rhs(), K::Add) &&
             is_kind(r, K::Add) && is_kind(r->lhs(), K::Mul) &&
             is_kind(r->rhs(), K::Mul) &&
             eq(l->lhs(), r->lhs()->lhs()) && eq(l->lhs(), r->rhs()->lhs()) &&
             eq(l->rhs()->lhs(), r->lhs()->rhs()) &&
             eq(l->rhs()->rhs(), r->rhs()->rhs());
    case RuleId::DistRight:
      return is_kind(l, K::Mul) && is_kind(l->lhs(), K::Add) &&
             is_kind(r, K::Add) && is_kind(r->lhs(), K::Mul) &&
             is_kind(r->rhs(), K::Mul) &&
             eq(l->rhs(), r->lhs()->rhs()) && eq(l->rhs(), r->rhs()->rhs()) &&
             eq(l->lhs()->lhs(), r->lhs()->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs()->lhs());
    case RuleId::AddComm:
      return is_kind(l, K::Add) && is_kind(r, K::Add) &&
             eq(l->lhs(), r->rhs()) && eq(l->rhs(), r->lhs());
    case RuleId::AddZeroLeft:
      return is_kind(l, K::Add) && is_zero_atom(l->lhs()) && eq(l->rhs(), r);
    case RuleId::AddZeroRight:
      return is_kind(l, K::Add) && is_zero_atom(l->rhs()) && eq(l->lhs(), r);
    case RuleId::MulOneLeft:
      return is_kind(l, K::Mul) && is_one_atom(l->lhs()) && eq(l->rhs(), r);
    case RuleId::MulOneRight:
      return is_kind(l, K::Mul) && is_one_atom(l->rhs()) && eq(l->lhs(), r);
    case RuleId::MulZeroLeft:
      return is_kind(l, K::Mul) && is_zero_atom(l->lhs()) && is_zero_atom(r) &&
             classify(l->rhs()) != LegalityClass::Illegal;
    case RuleId::MulZeroRight:
      return is_kind(l, K::Mul) && is_zero_atom(l->rhs()) && is_zero_atom(r) &&
             classify(l->lhs()) != LegalityClass::Illegal;
    case RuleId::ScaleAddDist:
      return is_kind(l, K::Scale) && is_kind(l->lhs(), K::Add) &&
             is_kind(r, K::Add) && is_kind(r->lhs(), K::Scale) &&
             is_kind(r->rhs(), K::Scale) &&
             r->lhs()->scalar() == l->scalar() &&
             r->rhs()->scalar() == l->scalar() &&
             eq(l->lhs()->lhs(), r->lhs()->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs()->lhs());
    case RuleId::ScaleSplit:
      return is_kind(l, K::Scale) && is_kind(r, K::Add) &&
             is_kind(r->lhs(), K::Scale) && is_kind(r->rhs(), K::Scale) &&
             eq(r->lhs()->lhs(), l->lhs()) && eq(r->rhs()->lhs(), l->lhs()) &&
             r->lhs()->scalar() + r->rhs()->scalar() == l->scalar();
    case RuleId::ScaleMulLeft:
      return is_kind(l, K::Scale) && is_kind(l->lhs(), K::Mul) &&
             is_kind(r, K::Mul) && is_kind(r->lhs(), K::Scale) &&
             r->lhs()->scalar() == l->scalar() &&
             eq(l->lhs()->lhs(), r->lhs()->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs());
    case RuleId::ScaleMulRight:
      return is_kind(l, K::Scale) && is_kind(l->lhs(), K::Mul) &&
             is_kind(r, K::Mul) && is_kind(r->rhs(), K::Scale) &&
             r->rhs()->scalar() == l->scalar() &&
             eq(l->lhs()->lhs(), r->lhs()) &&
             eq(l->lhs()->rhs(), r->rhs()->lhs());
    case RuleId::ScaleScale:
      return is_kind(l, K::Scale) && is_kind(r, K::Scale) &&
             is_kind(r->lhs(), K::Scale) &&
             eq(l->lhs(), r->lhs()->lhs()) &&
             r->scalar() * r->lhs()->scalar() == l->scalar();
    case RuleId::ScaleOne:
      return is_kind(l, K::Scale) && l->scalar().is_one() && eq(l->lhs(), r);
    case RuleId::ScaleZero:
      return is_kind(l, K::Scale) && l->scalar().is_zero() && is_zero_atom(r) &&
             classify(l->lhs()) != LegalityClass::Illegal;
    case RuleId::InvCancelLeft:
      return is_kind(l, K::Mul) && is_kind(l->lhs(), K::Inv) &&
             eq(l->lhs()->lhs(), l->rhs()) && is_one_atom(r) &&
             classify(l->rhs()) == LegalityClass::NonNullLegal;
    case RuleId::InvCancelRight:
      return is_kind(l, K::Mul) && is_kind(l->rhs(), K::Inv) &&
             eq(l->rhs()->lhs(), l->lhs()) && is_one_atom(r) &&
             classify(l->lhs()) == LegalityClass::NonNullLegal;
    case RuleId::InvMul:
      return is_kind(l, K::Inv) && is_kind(l->lhs(), K::Mul) &&
             is_kind(r, K::Mul) && is_kind(r->lhs(), K::Inv) &&
             is_kind(r->rhs(), K::Inv) &&
             eq(l->lhs()->lhs(), r->rhs()->lhs()) &&
             eq(l->lhs()->rhs(), r->lhs()->lhs());
    case RuleId::InvOne:
      return is_kind(l, K::Inv) && is_one_atom(l->lhs()) && is_one_atom(r);
    case RuleId::ScaleInv:
      return is_kind(l, K::Scale) && is_kind(l->lhs(), K::Inv) &&
             !l->scalar().is_zero() && is_kind(r, K::Inv) &&
             is_kind(r->lhs(), K::Scale) &&
             r->lhs()->scalar() == l->scalar().reciprocal() &&
             eq(l->lhs()->lhs(), r->lhs()->lhs());
    case RuleId::EvalIdentity:
      return !contains_inv(l) && !contains_inv(r) &&
             eval_in_S(l) == eval_in_S(r);
    case RuleId::NullToZero:
      return classify(l) == LegalityClass::Null && is_zero_atom(r);
  }
  return false;
}

}  // namespace

RuleFamily rule_family(RuleId rule) { return info(rule).family; }

const char* rule_name(RuleId rule) { return info(rule).name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& r : kRules) {
    if (name == r.name) return r.id;
  }
  return std::nullopt;
}

bool valid_step_pair(const ExprPtr& before, const ExprPtr& after, RuleId rule,
                     bool reverse) {
  if (!before || !after) return false;
  if (!(before->instance() == after->instance())) return false;
  const ExprPtr& l = reverse ? after : before;
  const ExprPtr& r = reverse ? before : after;
  return canonical_valid(rule, l, r);
}

ExprPtr apply_step(const ExprPtr& root, const RewriteStep& step) {
  ExprPtr before;
  try {
    before = subtree_at(root, step.path);
  } catch (const std::out_of_range&) {
    throw BadRewriteStep("step path does not exist in the expression");
  }
  if (!valid_step_pair(before, step.after, step.rule, step.reverse)) {
    std::ostringstream os;
    os << "invalid application of rule " << rule_name(step.rule)
       << (step.reverse ? " (reversed)" : "");
    throw BadRewriteStep(os.str());
  }
  return replace_at(root, step.path, step.after);
}

ExprPtr replay_trace(const ExprPtr& start, const std::vector<RewriteStep>& steps) {
  ExprPtr cur = start;
  for (const auto& s : steps) cur = apply_step(cur, s);
  return cur;
}

std::vector<RewriteStep> invert_steps(const ExprPtr& start,
                                      const std::vector<RewriteStep>& steps) {
  std::vector<RewriteStep> out;
  out.reserve(steps.size());
  ExprPtr cur = start;
  for (const auto& s : steps) {
    ExprPtr before = subtree_at(cur, s.path);
    out.push_back(RewriteStep{s.rule, !s.reverse, s.path, before});
    cur = apply_step(cur, s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace semifrac
