#include "semifrac/vergleich.hpp"

#include "semifrac/parser.hpp"

#include "../testutil.hpp"
#include "doctest.h"

using namespace semifrac;
using testutil::Rng;

namespace {

const Instance kQ = *Instance::parse("qplus");
const Instance kPC1 = *Instance::parse("polycomm:1");
const Instance kPC2 = *Instance::parse("polycomm:2");
const Instance kNC1 = *Instance::parse("polync:1");
const Instance kNC2 = *Instance::parse("polync:2");

Scalar sc(const char* text) { return *Scalar::parse(text); }

UniPoly rand_poly(Rng& rng) {
  std::vector<Scalar> cs;
  unsigned deg = static_cast<unsigned>(rng.next(4));
  for (unsigned j = 0; j <= deg; ++j) cs.push_back(testutil::rand_scalar(rng, true));
  return UniPoly(std::move(cs));
}

}  // namespace

TEST_CASE("univariate polynomials: construction, evaluation, text forms") {
  UniPoly p(std::vector<Scalar>{Scalar(1), Scalar(0), sc("1/4"), Scalar(0)});
  CHECK(p.coeffs.size() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Scalar(1));
  CHECK(p.coeff(1) == Scalar(0));
  CHECK(p.coeff(2) == sc("1/4"));
  CHECK(p.coeff(7) == Scalar(0));
  CHECK(p.str() == "1 + 1/4 X^2");
  CHECK(p.csv() == "1,0,1/4");
  CHECK(p.eval(Scalar(2)) == Scalar(2));
  CHECK(p.eval(Scalar(0)) == Scalar(1));

  CHECK(UniPoly{}.is_zero());
  CHECK(UniPoly{}.eval(Scalar(5)) == Scalar(0));
  CHECK(UniPoly{}.str() == "0");
  CHECK(UniPoly{}.csv() == "0");
  CHECK(UniPoly(std::vector<Scalar>{Scalar(0), Scalar(0)}).is_zero());

  CHECK(UniPoly::constant(sc("3/2")).str() == "3/2");
  CHECK(UniPoly::monomial(Scalar(1), 1).str() == "X");
  CHECK(UniPoly::monomial(Scalar(2), 3).str() == "2 X^3");
  CHECK(UniPoly::monomial(sc("1/8"), 1).eval(Scalar(2)) == sc("1/4"));
}

TEST_CASE("univariate polynomial csv round trips") {
  for (const char* text : {"0", "1,0,1/4", "1/2,1/4,1/8,1/16", "0,0,0,0,1/32"}) {
    auto p = UniPoly::parse_csv(text);
    REQUIRE(p.has_value());
    CHECK(p->csv() == text);
  }
  CHECK(UniPoly::parse_csv(" 1 , 0 , 1/4 ")->csv() == "1,0,1/4");
  CHECK(UniPoly::parse_csv("1,0,0")->csv() == "1");
  CHECK_FALSE(UniPoly::parse_csv("").has_value());
  CHECK_FALSE(UniPoly::parse_csv("1,a").has_value());
  CHECK_FALSE(UniPoly::parse_csv("-1").has_value());
  CHECK_FALSE(UniPoly::parse_csv("1,,2").has_value());
}

TEST_CASE("substitution of the power-universal element") {
  UniPoly p = UniPoly::monomial(sc("1/4"), 2);
  BaseElement e = p.substitute_u(kPC1);
  CHECK(e == parse_base("1 + 2 x1 + x1 x1", kPC1));

  UniPoly q(std::vector<Scalar>{Scalar(1), sc("1/2")});
  CHECK(q.substitute_u(kQ) == kQ.from_scalar(Scalar(2)));
  CHECK(UniPoly{}.substitute_u(kNC1).is_zero());
}

TEST_CASE("closed-form u-power coefficients match the expanded powers") {
  for (const Instance& inst : {kQ, kPC2, kNC2}) {
    bool comm = inst.commutative();
    Polynomial u = inst.power_universal().value;
    for (unsigned k = 0; k <= 5; ++k) {
      Polynomial uk = u.pow(k, comm);
      for (const auto& [w, c] : uk.terms()) {
        CHECK(uk_coeff(k, w, comm) == c);
      }
      size_t expect;
      if (inst.kind == InstanceKind::QPlus) {
        expect = 1;
      } else if (comm) {
        expect = (k + 1) * (k + 2) / 2;
      } else {
        expect = (size_t{1} << (k + 1)) - 1;
      }
      CHECK(uk.term_count() == expect);
    }
  }
  Word empty;
  CHECK(uk_coeff(3, empty, true) == Scalar(8));
  Word two{{1, 1}};
  CHECK(uk_coeff(1, two, true).is_zero());
}

TEST_CASE("padded comparisons agree with materialized elements") {
  Rng rng(20260819);
  const Instance insts[] = {kQ, kPC1, kPC2, kNC1, kNC2};
  for (int trial = 0; trial < 60; ++trial) {
    const Instance& inst = insts[trial % 5];
    BaseElement x = testutil::rand_member(rng, inst, false);
    BaseElement y = testutil::rand_member(rng, inst, false);
    UniPoly p = rand_poly(rng);
    BaseElement pu = p.substitute_u(inst);
    CHECK(leq_with_u_pad(y, x, p) == base_leq(y, base_add(x, pu)));
    CHECK(leq_u_product(y, x, p) == base_leq(y, base_mul(pu, x)));
    if (!p.is_zero()) {
      BaseElement boundary = base_mul(pu, x);
      CHECK(leq_u_product(boundary, x, p));
      CHECK_FALSE(leq_u_product(base_add(boundary, inst.one()), x, p));
    }
  }
}

TEST_CASE("condition (a): sampled homomorphism comparison") {
  BaseElement x = parse_base("2 + x1 x1", kPC1);
  BaseElement y = parse_base("1 + 2 x1", kPC1);
  CHECK(check_condition_a(x, x, 32, 7).pass);
  CHECK(check_condition_a(x, y, 64, 7).pass);

  HomCheckResult down = check_condition_a(kQ.one(), kQ.from_scalar(Scalar(2)), 8, 7);
  REQUIRE_FALSE(down.pass);
  REQUIRE(down.counterexample.has_value());
  CHECK(down.counterexample->apply(kQ.one()) < Scalar(2));

  HomCheckResult rev = check_condition_a(y, x, 64, 7);
  REQUIRE_FALSE(rev.pass);
  REQUIRE(rev.counterexample.has_value());
  CHECK(rev.counterexample->apply(y) < rev.counterexample->apply(x));

  CHECK_THROWS_AS(check_condition_a(kQ.zero(), kQ.one(), 4, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_condition_a(kQ.one(), kPC1.one(), 4, 7), InstanceMismatch);
}

TEST_CASE("condition (b): minimal padding exponent") {
  BaseElement x = parse_base("2 + x1 x1", kPC1);
  BaseElement y = parse_base("1 + 2 x1", kPC1);
  auto ev = search_condition_b(x, y, sc("1/2"));
  REQUIRE(ev.has_value());
  CHECK(ev->m == 3);
  CHECK(ev->pad.csv() == "1/2,1/4,1/8,1/16");
  CHECK(verify_condition_b(x, y, sc("1/2"), *ev));

  ConditionBEvidence short_ev{2, UniPoly(std::vector<Scalar>{sc("1/2"), sc("1/4"), sc("1/8")})};
  CHECK_FALSE(verify_condition_b(x, y, sc("1/2"), short_ev));
  ConditionBEvidence tampered{3, UniPoly(std::vector<Scalar>{sc("1/2"), sc("1/4"), sc("1/8"), Scalar(2)})};
  CHECK_FALSE(verify_condition_b(x, y, sc("1/2"), tampered));

  auto nc = search_condition_b(parse_base("2 + x1 x1", kNC1),
                               parse_base("1 + 2 x1", kNC1), sc("1/2"));
  REQUIRE(nc.has_value());
  CHECK(nc->m == 3);

  auto self = search_condition_b(x, x, sc("1/3"));
  REQUIRE(self.has_value());
  CHECK(self->m == 0);
  CHECK(self->pad.csv() == "1/3");

  BaseElement one = kQ.one(), two = kQ.from_scalar(Scalar(2));
  CHECK_FALSE(search_condition_b(one, two, sc("1/4"), 10).has_value());
  auto at_half = search_condition_b(one, two, sc("1/2"), 10);
  REQUIRE(at_half.has_value());
  CHECK(at_half->m == 1);

  CHECK_THROWS_AS(search_condition_b(x, y, Scalar(0)), std::invalid_argument);
  CHECK_THROWS_AS(search_condition_b(kQ.zero(), two, sc("1/2")),
                  std::invalid_argument);
}

TEST_CASE("condition (b) at a single epsilon is weaker than the full family") {
  BaseElement one = kQ.one(), two = kQ.from_scalar(Scalar(2));
  auto ev = search_condition_b(one, two, Scalar(1));
  REQUIRE(ev.has_value());
  CHECK(ev->m == 0);
  CHECK_FALSE(check_condition_a(one, two, 8, 7).pass);
}

TEST_CASE("condition (c): geometric family, then monomial fallback") {
  BaseElement x = parse_base("2 + x1 x1", kPC1);
  BaseElement y = parse_base("1 + 2 x1", kPC1);

  auto p1 = search_condition_c(x, y, Scalar(2), Scalar(1));
  REQUIRE(p1.has_value());
  CHECK(p1->csv() == "0,0,1/4");
  CHECK(p1->eval(Scalar(2)) == Scalar(1));
  CHECK(verify_condition_c(x, y, Scalar(2), Scalar(1), *p1));

  auto p2 = search_condition_c(x, y, Scalar(2), sc("1/2"));
  REQUIRE(p2.has_value());
  CHECK(p2->csv() == "0,0,0,0,1/32");
  CHECK(p2->eval(Scalar(2)) == sc("1/2"));
  CHECK(verify_condition_c(x, y, Scalar(2), sc("1/2"), *p2));

  auto nc = search_condition_c(parse_base("2 + x1 x1", kNC1),
                               parse_base("1 + 2 x1", kNC1), Scalar(2), Scalar(1));
  REQUIRE(nc.has_value());
  CHECK(nc->csv() == "0,0,1/4");

  auto self = search_condition_c(x, x, Scalar(2), Scalar(1));
  REQUIRE(self.has_value());
  CHECK(self->degree() == 0);
  CHECK(self->coeff(0) == sc("1/4"));
  CHECK(verify_condition_c(x, x, Scalar(2), Scalar(1), *self));

  BaseElement one = kQ.one(), two = kQ.from_scalar(Scalar(2));
  CHECK_FALSE(search_condition_c(one, two, Scalar(2), sc("1/4")).has_value());
  auto flat = search_condition_c(one, two, Scalar(2), Scalar(1));
  REQUIRE(flat.has_value());
  CHECK(flat->csv() == "1");

  CHECK_FALSE(verify_condition_c(x, y, Scalar(2), sc("1/2"), *p1));
  CHECK_THROWS_AS(search_condition_c(x, y, Scalar(2), Scalar(0)),
                  std::invalid_argument);
}

TEST_CASE("condition (d): construction shifts by the unit-domination exponent") {
  BaseElement x = parse_base("2 + x1 x1", kPC1);
  BaseElement y = parse_base("1 + 2 x1", kPC1);

  auto p = condition_d_construct(x, y, Scalar(2), Scalar(1));
  REQUIRE(p.has_value());
  CHECK(p->csv() == "1,0,1/4");
  CHECK(p->eval(Scalar(2)) == Scalar(2));
  CHECK(condition_d_check(x, y, *p, Scalar(2), Scalar(1)));

  BaseElement small = parse_base("1/4 + x1", kPC1);
  CHECK(base_pu_first_exponent(small) == 2);
  auto ps = condition_d_construct(small, small, Scalar(2), Scalar(1));
  REQUIRE(ps.has_value());
  CHECK(ps->csv() == "1,0,1/8");
  CHECK(ps->eval(Scalar(2)) == sc("3/2"));
  CHECK(condition_d_check(small, small, *ps, Scalar(2), Scalar(1)));
}

TEST_CASE("condition (d): exact threshold checking") {
  BaseElement x = parse_base("2 + x1 x1", kPC1);
  UniPoly p(std::vector<Scalar>{Scalar(1), sc("1/8")});
  CHECK(p.eval(Scalar(2)) == sc("5/4"));
  CHECK(condition_d_check(x, x, p, Scalar(2), sc("1/4")));
  CHECK_FALSE(condition_d_check(x, x, p, Scalar(2), sc("1/5")));

  CHECK(condition_d_check(x, x, UniPoly::constant(Scalar(1)), Scalar(7), Scalar(0)));
  CHECK_FALSE(condition_d_check(kQ.one(), kQ.from_scalar(Scalar(2)),
                                UniPoly::constant(Scalar(1)), Scalar(1), Scalar(1)));
}

TEST_CASE("successful padding searches replay and pass the sampled check") {
  Rng rng(91);
  const Instance insts[] = {kQ, kPC1, kNC2};
  const Scalar eps_values[] = {sc("1/4"), sc("1/2")};
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance& inst = insts[trial % 3];
    BaseElement x = testutil::rand_member(rng, inst, false);
    BaseElement y = rng.chance(50) ? x : base_scale(sc("1/2"), x);
    for (const Scalar& eps : eps_values) {
      auto ev = search_condition_b(x, y, eps);
      REQUIRE(ev.has_value());
      CHECK(ev->m == 0);
      CHECK(verify_condition_b(x, y, eps, *ev));
      ++found;
    }
    CHECK(check_condition_a(x, y, 16, 20260819 + trial).pass);
  }
  CHECK(found == 60);
}

TEST_CASE("construction output always passes check mode") {
  Rng rng(17);
  const Instance insts[] = {kQ, kPC1, kPC2, kNC1};
  const Scalar rs[] = {Scalar(0), Scalar(1), Scalar(2), sc("1/2")};
  for (int trial = 0; trial < 40; ++trial) {
    const Instance& inst = insts[trial % 4];
    BaseElement x = testutil::rand_member(rng, inst, false);
    BaseElement y = testutil::rand_member(rng, inst, false);
    Scalar r = rs[rng.next(4)];
    Scalar eps = testutil::rand_scalar(rng);
    auto p = condition_d_construct(x, y, r, eps);
    if (p.has_value()) {
      CHECK(condition_d_check(x, y, *p, r, eps));
    }
  }
}
