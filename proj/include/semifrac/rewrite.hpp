// Oriented rewriting over formal expressions.
//
// Every step names one relation of the generating families (sum/product
// laws, unit and zero absorption, scalar laws, inverse laws, inverse-free
// evaluation identities, null collapse), a direction, a path, and the
// replacement subtree. Steps are validated on application, so a recorded
// trace replays through the same checker that produced it.
//
// normalize() drives the oriented system to a fixpoint:
//   - null subtrees collapse to the zero atom
//   - maximal inverse-free subtrees collapse to a single atom
//   - inverses are pushed through products and scales, cancelled against
//     adjacent factors, eliminated on invertible constants
//   - product spines associate to the right with scalars pulled out front
//   - sum spines associate to the right, drop zero summands, sort by the
//     rendered key and collect scaled duplicates
// Classification is invariant along the way.

#pragma once

#include "semifrac/legality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semifrac {

enum class RuleId {
  AddAssoc,      // (a+b)+c   ~ a+(b+c)
  MulAssoc,      // (a*b)*c   ~ a*(b*c)
  DistLeft,      // a*(b+c)   ~ a*b + a*c
  DistRight,     // (b+c)*a   ~ b*a + c*a
  AddComm,       // a+b       ~ b+a
  AddZeroLeft,   // 0+a       ~ a
  AddZeroRight,  // a+0       ~ a
  MulOneLeft,    // 1*a       ~ a
  MulOneRight,   // a*1       ~ a
  MulZeroLeft,   // 0*a       ~ 0
  MulZeroRight,  // a*0       ~ 0
  ScaleAddDist,  // r.(a+b)   ~ r.a + r.b
  ScaleSplit,    // (r+t).a   ~ r.a + t.a
  ScaleMulLeft,  // r.(a*b)   ~ (r.a)*b
  ScaleMulRight, // r.(a*b)   ~ a*(r.b)
  ScaleScale,    // (rt).a    ~ r.(t.a)
  ScaleOne,      // 1.a       ~ a
  ScaleZero,     // 0.a       ~ 0
  InvCancelLeft, // a^-1 * a  ~ 1
  InvCancelRight,// a * a^-1  ~ 1
  InvMul,        // (a*b)^-1  ~ b^-1 * a^-1
  InvOne,        // 1^-1      ~ 1
  ScaleInv,      // s.(a^-1)  ~ ((1/s).a)^-1 , s > 0
  EvalIdentity,  // a ~ b for inverse-free a, b with equal base values
  NullToZero,    // a ~ 0 for null a
};

enum class RuleFamily {
  SemiringLaw,     // associativity, commutativity, distributivity, zero sums
  UnitAbsorption,  // unit and zero factors
  ScalarLaw,       // scalar-multiple laws
  InverseLaw,      // cancellation and inverse pushing
  BaseIdentity,    // inverse-free expressions with equal base value
  NullCollapse,    // null expressions and the zero element
};

RuleFamily rule_family(RuleId rule);
const char* rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);

struct RewriteStep {
  RuleId rule;
  bool reverse = false;  // replace the right pattern by the left one
  ExprPath path;
  ExprPtr after;  // replacement subtree
};

class BadRewriteStep : public std::runtime_error {
 public:
  explicit BadRewriteStep(const std::string& what) : std::runtime_error(what) {}
};

// True when replacing `before` by `after` is an instance of `rule` in the
// given direction.
bool valid_step_pair(const ExprPtr& before, const ExprPtr& after, RuleId rule,
                     bool reverse);

// Validates and applies; throws BadRewriteStep on a mismatch.
ExprPtr apply_step(const ExprPtr& root, const RewriteStep& step);

ExprPtr replay_trace(const ExprPtr& start, const std::vector<RewriteStep>& steps);

// The reversed step list: applying the result to replay_trace(start, steps)
// yields `start` again.
std::vector<RewriteStep> invert_steps(const ExprPtr& start,
                                      const std::vector<RewriteStep>& steps);

struct NormalizeResult {
  ExprPtr nf;
  std::vector<RewriteStep> steps;
};

// Requires a legal expression.
NormalizeResult normalize(const ExprPtr& e);

struct StepGenOptions {
  // Also emit op-count-increasing moves (unit introduction, scalar splits,
  // cancel-pair insertion against the pool).
  bool include_expansive = false;
  std::vector<BaseElement> cancel_pool;
};

// All valid single steps applicable anywhere in `e` under the options.
std::vector<RewriteStep> enumerate_steps(const ExprPtr& e, const StepGenOptions& opts);

}  // namespace semifrac
