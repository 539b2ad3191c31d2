#include "semifrac/grothendieck.hpp"

#include "semifrac/parser.hpp"

#include "../testutil.hpp"
#include "doctest.h"

using namespace semifrac;
using testutil::Rng;

namespace {

const Instance kQ = *Instance::parse("qplus");
const Instance kPC1 = *Instance::parse("polycomm:1");
const Instance kNC1 = *Instance::parse("polync:1");

Fraction fr(const char* text, const Instance& inst) {
  return Fraction(parse_expr(text, inst));
}

Fraction zero_of(const Instance& inst) { return Fraction::from_base(inst.zero()); }

FormalDifference rand_diff(Rng& rng, const Instance& inst) {
  testutil::ExprGenOptions opts;
  opts.depth = 2;
  return diff_make(Fraction(testutil::rand_expr(rng, inst, opts)),
                   Fraction(testutil::rand_expr(rng, inst, opts)));
}

}  // namespace

TEST_CASE("signed scalars keep zero positive") {
  SignedScalar m = SignedScalar::minus(*Scalar::parse("3/2"));
  CHECK(m.negative);
  CHECK(m.str() == "-3/2");
  SignedScalar z = SignedScalar::minus(Scalar(0));
  CHECK_FALSE(z.negative);
  CHECK(z.str() == "0");
  CHECK(SignedScalar::plus(Scalar(2)).str() == "2");
}

TEST_CASE("difference construction and instance guards") {
  FormalDifference d = diff_of(fr("{2 + x1}", kPC1));
  CHECK(d.neg.is_zero());
  CHECK(d.instance() == kPC1);

  CHECK_THROWS_AS(diff_make(fr("{1}", kQ), fr("{1}", kPC1)), InstanceMismatch);
  FormalDifference q = diff_of(fr("{1}", kQ));
  CHECK_THROWS_AS(diff_add(q, d), InstanceMismatch);
  CHECK_THROWS_AS(diff_eq(d, d, fr("{1}", kQ)), InstanceMismatch);
  CHECK_THROWS_AS(triangle_leq(d, d, fr("{1}", kQ)), InstanceMismatch);
}

TEST_CASE("witnessed equality: shared summands cancel") {
  Fraction a = fr("{1 + x1}", kNC1);
  Fraction b = fr("{2}^-1", kNC1);
  Fraction c = fr("{3 + x1 x1}", kNC1);
  Fraction w0 = zero_of(kNC1);

  FormalDifference d = diff_make(a, b);
  CHECK(diff_eq(d, d, w0));
  CHECK(diff_eq(diff_make(frac_add(a, c), frac_add(b, c)), d, w0));
  CHECK(diff_eq(d, d, c));
}

TEST_CASE("witnessed equality: value gaps survive every witness") {
  FormalDifference d1 = diff_make(fr("{3}", kQ), fr("{1}", kQ));
  FormalDifference d2 = diff_make(fr("{1}", kQ), fr("{0}", kQ));
  for (const char* wtext : {"{0}", "{1}", "{5}", "{2}^-1"}) {
    CHECK_FALSE(diff_eq(d1, d2, fr(wtext, kQ)));
  }
}

TEST_CASE("signed scaling: negative factors swap the components") {
  Fraction a = fr("{2 + x1}", kPC1);
  Fraction b = fr("{1 + x1}^-1", kPC1);
  FormalDifference d = diff_make(a, b);
  Fraction w0 = zero_of(kPC1);

  FormalDifference neg = diff_scale(SignedScalar::minus(Scalar(1)), d);
  CHECK(diff_eq(neg, diff_make(b, a), w0));
  CHECK(render(neg.pos.nf()) == render(b.nf()));
  CHECK(render(neg.neg.nf()) == render(a.nf()));

  FormalDifference unit = diff_scale(SignedScalar::plus(Scalar(1)), d);
  CHECK(diff_eq(unit, d, w0));

  FormalDifference twice = diff_scale(SignedScalar::plus(Scalar(2)), d);
  FormalDifference thrice = diff_scale(SignedScalar::plus(Scalar(3)), twice);
  FormalDifference six = diff_scale(SignedScalar::plus(Scalar(6)), d);
  CHECK(diff_eq(thrice, six, w0));

  FormalDifference zero = diff_scale(SignedScalar::plus(Scalar(0)), d);
  CHECK(diff_eq(zero, diff_of(zero_of(kPC1)), w0));
}

TEST_CASE("signed scaling distributes over signed sums of factors") {
  Rng rng(20260819);
  const Instance insts[] = {kQ, kPC1, kNC1};
  struct Pair {
    SignedScalar r, s, sum;
  };
  const Pair pairs[] = {
      {SignedScalar::plus(Scalar(3)), SignedScalar::minus(Scalar(1)),
       SignedScalar::plus(Scalar(2))},
      {SignedScalar::plus(*Scalar::parse("1/2")), SignedScalar::minus(Scalar(2)),
       SignedScalar::minus(*Scalar::parse("3/2"))},
      {SignedScalar::minus(Scalar(1)), SignedScalar::minus(Scalar(2)),
       SignedScalar::minus(Scalar(3))},
      {SignedScalar::plus(Scalar(2)), SignedScalar::plus(Scalar(3)),
       SignedScalar::plus(Scalar(5))},
      {SignedScalar::minus(Scalar(1)), SignedScalar::plus(Scalar(1)),
       SignedScalar::plus(Scalar(0))},
  };
  for (int trial = 0; trial < 15; ++trial) {
    const Instance& inst = insts[trial % 3];
    FormalDifference d = rand_diff(rng, inst);
    const Pair& p = pairs[trial % 5];
    FormalDifference lhs = diff_scale(p.sum, d);
    FormalDifference rhs = diff_add(diff_scale(p.r, d), diff_scale(p.s, d));
    CHECK(diff_eq(lhs, rhs, zero_of(inst)));
  }
}

TEST_CASE("triangle preorder: reflexivity and base ordering") {
  FormalDifference d = diff_make(fr("{1 + x1}^-1", kNC1), fr("{2}", kNC1));
  CHECK(triangle_leq(d, d, zero_of(kNC1)));

  FormalDifference dx = diff_of(fr("{1 + x1}", kPC1));
  FormalDifference dy = diff_of(fr("{2 + 2 x1}", kPC1));
  CHECK(triangle_leq(dx, dy, zero_of(kPC1)));
  CHECK_FALSE(triangle_leq(dy, dx, zero_of(kPC1)));
}

TEST_CASE("triangle preorder: adding a difference preserves verified order") {
  Rng rng(41);
  const Instance insts[] = {kQ, kPC1, kNC1};
  for (int trial = 0; trial < 12; ++trial) {
    const Instance& inst = insts[trial % 3];
    Fraction a = Fraction::from_base(testutil::rand_member(rng, inst, false));
    Fraction b = Fraction::from_base(testutil::rand_member(rng, inst, false));
    Fraction c = Fraction::from_base(testutil::rand_member(rng, inst, false));
    Fraction w0 = zero_of(inst);

    FormalDifference d1 = diff_make(a, b);
    FormalDifference d2 = diff_make(frac_add(a, c), b);
    REQUIRE(triangle_leq(d1, d2, w0));

    FormalDifference e = rand_diff(rng, inst);
    CHECK(triangle_leq(diff_add(d1, e), diff_add(d2, e), w0));
  }
}
