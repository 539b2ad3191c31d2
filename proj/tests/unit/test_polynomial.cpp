#include "semifrac/polynomial.hpp"

#include "doctest.h"

#include <array>

using namespace semifrac;

namespace {

Word w(std::initializer_list<uint32_t> ls) {
  Word r;
  r.letters = ls;
  return r;
}

Polynomial from_terms(std::initializer_list<std::pair<Word, Scalar>> terms) {
  Polynomial p;
  for (const auto& [word, c] : terms) p.set_coeff(word, c);
  return p;
}

}  // namespace

TEST_CASE("word operations") {
  Word ab = w({1, 2});
  Word ba = w({2, 1});
  CHECK(ab.concat(ba) == w({1, 2, 2, 1}));
  CHECK(ba.sorted() == ab);
  CHECK(Word::unit().empty());

  Word pre;
  CHECK(w({1, 2, 3}).strip_suffix(w({2, 3}), pre));
  CHECK(pre == w({1}));
  CHECK_FALSE(w({1, 2, 3}).strip_suffix(w({1, 2}), pre));

  Word suf;
  CHECK(w({1, 2, 3}).strip_prefix(w({1, 2}), suf));
  CHECK(suf == w({3}));

  Word rest;
  CHECK(w({1, 1, 2, 3}).strip_multiset(w({1, 3}), rest));
  CHECK(rest == w({1, 2}));
  CHECK_FALSE(w({1, 2}).strip_multiset(w({3}), rest));

  CHECK(w({3, 1, 7}).max_letter() == 7);
  CHECK(w({1, 1, 2}).str() == "x1 x1 x2");
}

TEST_CASE("deglex order: degree first, then lexicographic") {
  DegLexLess lt;
  CHECK(lt(Word::unit(), w({1})));
  CHECK(lt(w({2}), w({1, 1})));
  CHECK(lt(w({1, 2}), w({2, 1})));
  CHECK_FALSE(lt(w({2, 1}), w({1, 2})));
  CHECK_FALSE(lt(w({1}), w({1})));
}

TEST_CASE("polynomial arithmetic, commutative and not") {
  Polynomial x1 = Polynomial::variable(1);
  Polynomial x2 = Polynomial::variable(2);

  Polynomial nc = x1.mul(x2, false).add(x2.mul(x1, false));
  CHECK(nc.coeff(w({1, 2})) == Scalar(1));
  CHECK(nc.coeff(w({2, 1})) == Scalar(1));
  CHECK(nc.term_count() == 2);

  Polynomial comm = x1.mul(x2, true).add(x2.mul(x1, true));
  CHECK(comm.coeff(w({1, 2})) == Scalar(2));
  CHECK(comm.term_count() == 1);

  Polynomial p = Polynomial::constant(Scalar(2)).add(x1);
  Polynomial sq = p.mul(p, true);
  CHECK(sq.coeff(Word::unit()) == Scalar(4));
  CHECK(sq.coeff(w({1})) == Scalar(4));
  CHECK(sq.coeff(w({1, 1})) == Scalar(1));

  CHECK(p.pow(3, true) == p.mul(p, true).mul(p, true));
  CHECK(p.pow(0, true) == Polynomial::constant(Scalar(1)));

  CHECK(p.scale(Scalar(0)).is_zero());
  CHECK(p.scale(Scalar(3)).coeff(w({1})) == Scalar(3));
}

TEST_CASE("polynomial accessors and rendering") {
  Polynomial z = Polynomial::zero();
  CHECK(z.is_zero());
  CHECK(z.str() == "0");
  CHECK(z.constant_term().is_zero());

  Polynomial p = from_terms({{Word::unit(), Scalar(1)},
                             {w({1}), Scalar(2)},
                             {w({1, 2}), Scalar(1)}});
  CHECK(p.str() == "1 + 2 x1 + x1 x2");
  CHECK(p.max_variable() == 2);
  CHECK_FALSE(p.is_constant());
  CHECK(Polynomial::constant(Scalar(5)).is_constant());

  p.set_coeff(w({1}), Scalar(0));
  CHECK(p.term_count() == 2);
}

TEST_CASE("coefficient-wise comparison") {
  Polynomial x1 = Polynomial::variable(1);
  Polynomial one = Polynomial::constant(Scalar(1));
  Polynomial p = one.add(x1);
  Polynomial q = one.add(x1).add(x1);
  CHECK(p.leq(q));
  CHECK_FALSE(q.leq(p));
  CHECK(Polynomial::zero().leq(p));
  CHECK_FALSE(one.leq(x1));
}

TEST_CASE("evaluation at a point") {
  Polynomial p = Polynomial::constant(Scalar(1))
                     .add(Polynomial::variable(1).scale(Scalar(2)))
                     .add(Polynomial::variable(1).mul(Polynomial::variable(2), false));
  std::array<Scalar, 2> pt = {Scalar(3), Scalar::from_ratio(1, 2)};
  // 1 + 2*3 + 3*(1/2)
  CHECK(p.eval(pt) == Scalar::from_ratio(17, 2));
}

TEST_CASE("content is the coefficient gcd") {
  CHECK(Polynomial::zero().content().is_zero());
  Polynomial p = from_terms({{Word::unit(), Scalar::from_ratio(1, 2)},
                             {w({1}), Scalar::from_ratio(1, 3)}});
  CHECK(p.content() == Scalar::from_ratio(1, 6));
  Polynomial q = from_terms({{Word::unit(), Scalar(4)}, {w({1}), Scalar(6)}});
  CHECK(q.content() == Scalar(2));
  CHECK(q.scale(q.content().reciprocal()).content().is_one());
}

TEST_CASE("exact one-sided quotients in the free algebra") {
  Polynomial x1 = Polynomial::variable(1);
  Polynomial x2 = Polynomial::variable(2);
  Polynomial one = Polynomial::constant(Scalar(1));

  // (1 + x1) * x2 == x2 + x1 x2, right-divide by x2.
  Polynomial c = x2.add(x1.mul(x2, false));
  auto q = right_quotient(c, x2, false);
  REQUIRE(q.has_value());
  CHECK(*q == one.add(x1));
  CHECK(q->mul(x2, false) == c);

  // No left quotient: x2 + x1 x2 is not x2 * anything.
  CHECK_FALSE(left_quotient(c, x2, false).has_value());

  // Left quotient by (1 + x1).
  auto lq = left_quotient(c, one.add(x1), false);
  REQUIRE(lq.has_value());
  CHECK(*lq == x2);

  // Quotient exists numerically but has a negative coefficient: rejected.
  // (1 + 2 x1) = (1 + x1)*q would need q = 1 + x1 - x1^2 + ...
  CHECK_FALSE(right_quotient(one.add(x1.scale(Scalar(2))), one.add(x1), false)
                  .has_value());
}

TEST_CASE("exact quotients in the commutative algebra") {
  Polynomial x1 = Polynomial::variable(1);
  Polynomial x2 = Polynomial::variable(2);
  Polynomial one = Polynomial::constant(Scalar(1));

  Polynomial a = one.add(x1);
  Polynomial b = one.add(x2);
  Polynomial prod = a.mul(b, true);
  auto q = right_quotient(prod, b, true);
  REQUIRE(q.has_value());
  CHECK(*q == a);
  // Commutative: left and right quotients agree.
  auto lq = left_quotient(prod, b, true);
  REQUIRE(lq.has_value());
  CHECK(*lq == a);

  CHECK_FALSE(right_quotient(a, b, true).has_value());

  // Scalars divide exactly.
  auto qs = right_quotient(a.scale(Scalar(6)), Polynomial::constant(Scalar(3)), true);
  REQUIRE(qs.has_value());
  CHECK(*qs == a.scale(Scalar(2)));
}

TEST_CASE("random multiply-divide round trips") {
  // Deterministic small generator over two noncommuting variables.
  uint64_t state = 42;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<uint32_t>(state >> 33);
  };
  auto rand_poly = [&](bool comm) {
    Polynomial p = Polynomial::constant(Scalar(1 + next() % 3));
    int terms = 1 + static_cast<int>(next() % 3);
    for (int t = 0; t < terms; ++t) {
      Word word;
      int len = 1 + static_cast<int>(next() % 2);
      for (int i = 0; i < len; ++i) word.letters.push_back(1 + next() % 2);
      if (comm) word = word.sorted();
      p.set_coeff(word, p.coeff(word) + Scalar(1 + next() % 2));
    }
    return p;
  };
  for (int round = 0; round < 50; ++round) {
    bool comm = round % 2 == 0;
    Polynomial a = rand_poly(comm);
    Polynomial b = rand_poly(comm);
    Polynomial c = a.mul(b, comm);
    auto q = right_quotient(c, b, comm);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    auto lq = left_quotient(c, a, comm);
    REQUIRE(lq.has_value());
    CHECK(*lq == b);
  }
}
