#include <doctest.h>

#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "affine_lab/rational.hpp"

using affine_lab::Count;
using affine_lab::Rational;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(mpz_class(0), mpz_class(-7)).str() == "0");
  CHECK(Rational(mpz_class(8), mpz_class(4)).is_integer());
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("3/4") == Rational(mpz_class(3), mpz_class(4)));
  CHECK(Rational::parse(" -10/4 ") == Rational(mpz_class(-5), mpz_class(2)));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("+2") == Rational(2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(mpz_class(1), mpz_class(3));
  CHECK(third + third + third == Rational(1));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(1) - third == Rational(mpz_class(2), mpz_class(3)));
  CHECK((-third).sign() == -1);
  CHECK(third.reciprocal() == Rational(3));
  CHECK(Rational(mpz_class(2), mpz_class(3)) / Rational(mpz_class(4), mpz_class(9)) == Rational(mpz_class(3), mpz_class(2)));
}

TEST_CASE("ordering and hashing agree with equality") {
  const Rational a(mpz_class(1), mpz_class(2));
  const Rational b(mpz_class(2), mpz_class(4));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(mpz_class(1), mpz_class(3)) < a);
  std::unordered_set<Rational> s{a, b, Rational(1)};
  CHECK(s.size() == 2);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rational(mpz_class(-7), mpz_class(3));
  CHECK(os.str() == "-7/3");
}

TEST_CASE("make_set sorts and deduplicates") {
  const auto s = affine_lab::make_set({Rational(3), Rational(1), Rational(mpz_class(6), mpz_class(2)), Rational(2)});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Rational(1));
  CHECK(s[2] == Rational(3));
  CHECK(affine_lab::set_contains(s, Rational(2)));
  CHECK_FALSE(affine_lab::set_contains(s, Rational(4)));
}

TEST_CASE("checked counts detect overflow") {
  const Count big = std::numeric_limits<Count>::max();
  CHECK(affine_lab::checked_add(2, 3) == 5);
  CHECK(affine_lab::checked_mul(6, 7) == 42);
  CHECK(affine_lab::checked_pow(3, 4) == 81);
  CHECK(affine_lab::checked_pow(5, 0) == 1);
  CHECK_THROWS_AS(affine_lab::checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(affine_lab::checked_mul(big / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(affine_lab::checked_pow(2, 64), std::overflow_error);
}
