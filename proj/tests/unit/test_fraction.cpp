#include "semifrac/fraction.hpp"

#include "semifrac/parser.hpp"

#include "../testutil.hpp"
#include "doctest.h"

using namespace semifrac;
using testutil::Rng;

namespace {

const Instance kQ = *Instance::parse("qplus");
const Instance kPC2 = *Instance::parse("polycomm:2");
const Instance kNC1 = *Instance::parse("polync:1");
const Instance kNC2 = *Instance::parse("polync:2");

Fraction fr(const char* text, const Instance& inst = kQ) {
  return Fraction(parse_expr(text, inst));
}

}  // namespace

TEST_CASE("construction classifies and caches the normal form") {
  Fraction f = fr("{2} * {6}^-1");
  CHECK_FALSE(f.is_zero());
  REQUIRE(f.nf()->kind() == ExprKind::Atom);
  CHECK(f.nf()->atom() == kQ.from_scalar(Scalar::from_ratio(1, 3)));
  CHECK(replay_trace(f.rep(), f.nf_steps())->kind() == ExprKind::Atom);

  Fraction z = fr("0 . {5} + {0}");
  CHECK(z.is_zero());

  CHECK_THROWS_AS(fr("({0} + 0 . {3})^-1"), IllegalExpression);
  CHECK_THROWS_AS(frac_inv(z), InversionOfZero);
}

TEST_CASE("arithmetic combines representatives formally") {
  Fraction a = fr("{2}");
  Fraction b = fr("{3}^-1");
  Fraction s = frac_add(a, b);
  CHECK(s.rep()->kind() == ExprKind::Add);
  REQUIRE(s.nf()->kind() == ExprKind::Atom);
  CHECK(s.nf()->atom() == kQ.from_scalar(Scalar::from_ratio(7, 3)));

  Fraction p = frac_mul(s, fr("{3}"));
  REQUIRE(p.nf()->kind() == ExprKind::Atom);
  CHECK(p.nf()->atom() == kQ.from_scalar(Scalar(7)));

  CHECK(frac_scale(Scalar(0), a).is_zero());
  CHECK(frac_mul(a, fr("{0}")).is_zero());
  CHECK_FALSE(frac_add(a, fr("{0}")).is_zero());

  CHECK_THROWS_AS(frac_add(a, fr("{2}", kNC1)), InstanceMismatch);
}

TEST_CASE("evaluation respects the fraction structure") {
  MonotoneHom h{kNC1, {Scalar(1)}};
  Fraction f = fr("{1 + x1}^-1 * {2 + x1}", kNC1);
  CHECK(eval_fraction(h, f) == Scalar::from_ratio(3, 2));
}

TEST_CASE("equal scaled constants are equal with a replayable trace") {
  Fraction a = fr("{2} * {6}^-1");
  Fraction b = fr("{3} * {9}^-1");
  EqVerdict v = eq(a, b);
  REQUIRE(v.kind == EqVerdict::Kind::Equal);
  CHECK(structurally_equal(replay_trace(a.rep(), v.trace), b.rep()));

  EqVerdict self = eq(a, a);
  CHECK(self.kind == EqVerdict::Kind::Equal);
  CHECK(self.trace.empty());
}

TEST_CASE("distinct inverses separate at a sampled point") {
  Fraction a = fr("{1 + x1}^-1", kNC1);
  Fraction b = fr("{2 + x1}^-1", kNC1);
  EqVerdict v = eq(a, b);
  REQUIRE(v.kind == EqVerdict::Kind::NotEqual);
  REQUIRE(v.witness.has_value());
  CHECK(eval_fraction(*v.witness, a) != eval_fraction(*v.witness, b));
}

TEST_CASE("noncommuting atoms differ without any separating point") {
  Fraction a = fr("{1 + x1 x2}", kNC2);
  Fraction b = fr("{1 + x2 x1}", kNC2);
  EqVerdict v = eq(a, b);
  CHECK(v.kind == EqVerdict::Kind::NotEqual);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("inverse laws hold up to equality") {
  Fraction a = fr("({1 + x1} + {1 + x2})^-1 * {2}", kNC2);
  CHECK(eq(frac_inv(frac_inv(a)), a).kind == EqVerdict::Kind::Equal);
  CHECK(eq(frac_mul(a, frac_inv(a)), fr("{1}", kNC2)).kind ==
        EqVerdict::Kind::Equal);
  CHECK(eq(frac_mul(frac_inv(a), a), fr("{1}", kNC2)).kind ==
        EqVerdict::Kind::Equal);
  CHECK(eq(frac_inv(fr("{1}", kNC2)), fr("{1}", kNC2)).kind ==
        EqVerdict::Kind::Equal);
}

TEST_CASE("commutative pairs settle by cross-multiplication") {
  Fraction a = fr("{1 + x1}^-1 * {1 + x2}", kPC2);
  Fraction b = fr("{1 + x2} * {1 + x1}^-1", kPC2);
  CHECK_FALSE(structurally_equal(a.nf(), b.nf()));
  EqVerdict v = eq(a, b);
  REQUIRE(v.kind == EqVerdict::Kind::Equal);
  REQUIRE(v.cross.has_value());
  CHECK(base_mul(v.cross->num1, v.cross->den2) ==
        base_mul(v.cross->num2, v.cross->den1));

  EqVerdict w = eq(a, fr("{1 + x2} * {2 + x1}^-1", kPC2));
  CHECK(w.kind == EqVerdict::Kind::NotEqual);
  REQUIRE(w.witness.has_value());
}

TEST_CASE("rewrite search bridges a sum against a folded product") {
  // (x + d) d^-1 and x d^-1 + 1 normalize apart; one cancel-pair insertion
  // closes the gap.
  Fraction a = fr("({1 + x1} + {2 + x1}) * {2 + x1}^-1", kNC1);
  Fraction b = fr("{1 + x1} * {2 + x1}^-1 + {1}", kNC1);
  CHECK_FALSE(structurally_equal(a.nf(), b.nf()));
  EqVerdict v = eq(a, b);
  REQUIRE(v.kind == EqVerdict::Kind::Equal);
  CHECK(structurally_equal(replay_trace(a.rep(), v.trace), b.rep()));
}

TEST_CASE("order-swapped noncommutative products stay unknown in budget") {
  Fraction a = fr("{1 + x1}^-1 * {1 + x2}", kNC2);
  Fraction b = fr("{1 + x2} * {1 + x1}^-1", kNC2);
  Budgets tight;
  tight.rewrite = 300;
  EqVerdict v = eq(a, b, tight);
  CHECK(v.kind == EqVerdict::Kind::Unknown);
}

TEST_CASE("equality is invariant under random single steps") {
  Rng rng(515);
  testutil::ExprGenOptions opts;
  opts.depth = 3;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance& inst = trial % 2 ? kNC2 : kPC2;
    ExprPtr e = testutil::rand_expr(rng, inst, opts);
    Fraction f{e};
    auto steps = enumerate_steps(e, {});
    if (steps.empty()) continue;
    ExprPtr moved = apply_step(e, steps[rng.next(steps.size())]);
    CHECK(eq(f, Fraction{moved}).kind == EqVerdict::Kind::Equal);
  }
}
