#include <random>

#include "doctest.h"
#include "kproper/errors.hpp"
#include "kproper/linalg.hpp"
#include "kproper/rational.hpp"
#include "oracles.hpp"

using namespace kproper;

TEST_CASE("rationals normalise on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("canonical rational strings parse and reject everything else") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("123456789012345678901234567891/2").str() == "123456789012345678901234567891/2");
  for (const char* bad : {"2/4", "+1", "-0", "3/1", "007", "1/-2", "1/0", "", "1.5", "1/", "/2", " 1", "0/5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
  try {
    Rational::parse("2/4");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
}

TEST_CASE("rational arithmetic is exact on random inputs") {
  std::mt19937 rng(20241016);
  for (int i = 0; i < 500; ++i) {
    const Rational x = oracle::random_rational(rng, -50, 50, 40);
    Rational y = oracle::random_rational(rng, -50, 50, 40);
    if (y.is_zero()) y = Rational(1, 3);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(Rational::parse(x.str()) == x);
    CHECK(x.denominator() >= 1);
  }
}

TEST_CASE("primitive divides by the gcd and keeps the sign") {
  CHECK(primitive(IntVector{2, 4}) == IntVector{1, 2});
  CHECK(primitive(IntVector{1, 0}) == IntVector{1, 0});
  CHECK(primitive(IntVector{0, -3}) == IntVector{0, -1});
  try {
    primitive(IntVector{0, 0});
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "zero vector has no primitive representative");
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-30, 30);
  for (int i = 0; i < 200; ++i) {
    IntVector v{entry(rng), entry(rng), entry(rng)};
    if (v == IntVector{0, 0, 0}) continue;
    CHECK(primitive(primitive(v)) == primitive(v));
  }
}

TEST_CASE("solve_exact") {
  const auto id = to_rational(IntMatrix::identity(2));
  CHECK(*solve_exact(id, RatVector{3, 7}) == RatVector{3, 7});
  CHECK_FALSE(solve_exact(RatMatrix::from_rows({{1, 2}, {2, 4}}), RatVector{1, 1}).has_value());
  CHECK(*solve_exact(RatMatrix::from_rows({{1, 0}, {1, 1}}), RatVector{-1, -1}) == RatVector{-1, 0});
  CHECK_THROWS_AS(solve_exact(id, RatVector{1, 2, 3}), DomainError);

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    RatMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = oracle::random_rational(rng, -9, 9, 5);
    const RatVector b{oracle::random_rational(rng, -9, 9, 5), oracle::random_rational(rng, -9, 9, 5),
                      oracle::random_rational(rng, -9, 9, 5)};
    const auto x = solve_exact(a, b);
    CHECK(x.has_value() == !determinant(a).is_zero());
    if (x) CHECK(matvec(a, *x) == b);
  }
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(IntMatrix::identity(3)));
  CHECK(is_unimodular(IntMatrix::from_rows({{0, -1}, {1, -1}})));
  CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) CHECK(is_unimodular(oracle::random_unimodular(rng)));
}
