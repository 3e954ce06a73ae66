#include <doctest.h>

#include <stdexcept>

#include "affine_lab/generators.hpp"

using namespace affine_lab;

namespace {
ScalarSet set(std::initializer_list<long> xs) {
  ScalarSet out;
  for (long x : xs) out.emplace_back(x);
  return make_set(out);
}
GenSpec spec(GenKind kind, Rational start, Rational step, std::size_t n) {
  GenSpec s;
  s.kind = kind;
  s.start = std::move(start);
  s.step = std::move(step);
  s.n = n;
  return s;
}
}  // namespace

TEST_CASE("splitmix reference outputs") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 other(0);
  CHECK(other.uniform(1) == 1);
  CHECK_THROWS_AS(other.uniform(0), std::invalid_argument);
}

TEST_CASE("progressions") {
  CHECK(generate(spec(GenKind::Arithmetic, 1, 1, 4)) == set({1, 2, 3, 4}));
  CHECK(generate(spec(GenKind::Geometric, 1, 2, 4)) == set({1, 2, 4, 8}));
  CHECK(generate(spec(GenKind::Arithmetic, 5, -2, 3)) == set({1, 3, 5}));
  CHECK_THROWS_AS(generate(spec(GenKind::Arithmetic, 1, 0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(generate(spec(GenKind::Geometric, 0, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(generate(spec(GenKind::Geometric, 1, -1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(generate(spec(GenKind::Arithmetic, 1, 1, 0)), std::invalid_argument);
}

TEST_CASE("seeded random sets are pinned") {
  GenSpec s;
  s.kind = GenKind::RandomInt;
  s.seed = 7;
  s.range = 100;
  s.n = 5;
  CHECK(generate(s) == set({4, 5, 47, 75, 88}));
  CHECK(generate(s) == generate(s));
  s.range = 4;
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
  s.range = 5;
  CHECK(generate(s) == set({1, 2, 3, 4, 5}));
}

TEST_CASE("explicit sets") {
  GenSpec s;
  s.kind = GenKind::Explicit;
  s.values = {Rational(3), Rational(1), Rational(3)};
  s.n = 0;
  CHECK(generate(s) == set({1, 3}));
  s.n = 3;
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("descriptors") {
  const GenSpec ap = parse_gen_descriptor("ap:1:1:8");
  CHECK(ap.kind == GenKind::Arithmetic);
  CHECK(ap.n == 8);
  CHECK(describe(ap) == "ap:1:1:8");
  const GenSpec gp = parse_gen_descriptor("gp:1/2:3:4");
  CHECK(generate(gp).back() == Rational(mpz_class(27), mpz_class(2)));
  const GenSpec r = parse_gen_descriptor("rand:7:100:5");
  CHECK(r.kind == GenKind::RandomInt);
  CHECK(describe(r) == "rand:7:100:5");
  CHECK(generate(r) == set({4, 5, 47, 75, 88}));
  CHECK(parse_gen_kind("random_int") == GenKind::RandomInt);
  CHECK_THROWS_AS(parse_gen_descriptor("ap:1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_descriptor("zz:1:1:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_descriptor("ap:x:1:3"), std::invalid_argument);
}
