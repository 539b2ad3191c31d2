#include "semifrac/scalar.hpp"

#include "doctest.h"

using namespace semifrac;

TEST_CASE("scalar construction and canonical form") {
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(Scalar::from_ratio(2, 6) == Scalar::from_ratio(1, 3));
  CHECK(Scalar::from_ratio(4, 2).str() == "2");
  CHECK_THROWS_AS(Scalar(-3), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::from_ratio(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::from_ratio(-1, 2), std::invalid_argument);
}

TEST_CASE("scalar parse accepts n and n/d") {
  CHECK(Scalar::parse("7").value() == Scalar(7));
  CHECK(Scalar::parse("3/4").value() == Scalar::from_ratio(3, 4));
  CHECK(Scalar::parse("0").value().is_zero());
  CHECK(Scalar::parse("10/5").value() == Scalar(2));
  CHECK_FALSE(Scalar::parse("").has_value());
  CHECK_FALSE(Scalar::parse("-1").has_value());
  CHECK_FALSE(Scalar::parse("1/0").has_value());
  CHECK_FALSE(Scalar::parse("1.5").has_value());
  CHECK_FALSE(Scalar::parse("2/").has_value());
  CHECK_FALSE(Scalar::parse("/2").has_value());
  CHECK_FALSE(Scalar::parse("1e2").has_value());
}

TEST_CASE("scalar arithmetic stays exact") {
  Scalar a = Scalar::from_ratio(1, 3);
  Scalar b = Scalar::from_ratio(1, 6);
  CHECK(a + b == Scalar::from_ratio(1, 2));
  CHECK(a * b == Scalar::from_ratio(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
  CHECK(Scalar::from_ratio(2, 3).reciprocal() == Scalar::from_ratio(3, 2));
  CHECK_THROWS_AS(Scalar(0).reciprocal(), std::domain_error);

  // No drift over many operations: sum of 1/k(k+1) telescopes.
  Scalar acc(0);
  for (long k = 1; k <= 200; ++k)
    acc = acc + Scalar::from_ratio(1, BigInt(k) * (k + 1));
  CHECK(acc == Scalar::from_ratio(200, 201));
}

TEST_CASE("scalar pow and rendering") {
  CHECK(Scalar(2).pow(10) == Scalar(1024));
  CHECK(Scalar::from_ratio(1, 2).pow(5) == Scalar::from_ratio(1, 32));
  CHECK(Scalar(5).pow(0).is_one());
  CHECK(Scalar(0).pow(0).is_one());
  CHECK(Scalar::from_ratio(7, 2).str() == "7/2");
  CHECK(Scalar(7).str_ratio() == "7/1");
  CHECK(Scalar::from_ratio(7, 2).str_ratio() == "7/2");
}

TEST_CASE("scalar ordering is the numeric order") {
  CHECK(Scalar::from_ratio(1, 3) < Scalar::from_ratio(1, 2));
  CHECK(Scalar::from_ratio(2, 4) <= Scalar::from_ratio(1, 2));
  CHECK(Scalar(3) > Scalar::from_ratio(5, 2));
  CHECK(Scalar(0) <= Scalar(0));
}
