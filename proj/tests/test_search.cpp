#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "primeveil/search.hpp"

using namespace primeveil;
using primeveil::testing::naive_eval;
using primeveil::testing::trial_division_is_prime;

TEST_CASE("lex_search finds the first prime in scan order") {
  SearchOutcome s = lex_search(parse("x^2+y^2+x*y"), 12);
  REQUIRE(s.kind == SearchOutcome::Kind::Prime);
  CHECK(s.witness->point == EvalPoint{1, 1});
  CHECK(s.witness->value == 3);
  CHECK(s.steps == 1);

  SearchOutcome s2 = lex_search(parse("x*y"), 12);
  REQUIRE(s2.kind == SearchOutcome::Kind::Prime);
  CHECK(s2.witness->point == EvalPoint{1, 2});
  CHECK(s2.witness->value == 2);
  CHECK(s2.steps == 2);
}

TEST_CASE("lex_search exhausts composite-only grids") {
  SearchOutcome s = lex_search(parse("4*x*y"), 100);
  REQUIRE(s.kind == SearchOutcome::Kind::Exhausted);
  CHECK(s.points_scanned == 10'000);
  CHECK(s.max_value_seen == 40'000);
}

TEST_CASE("lex_search witness survives a full re-scan oracle") {
  testing::PolyGen gen(57);
  for (int iter = 0; iter < 20; ++iter) {
    Polynomial p = gen.random_poly();
    SearchOutcome s = lex_search(p, 10);
    if (s.kind != SearchOutcome::Kind::Prime) {
      for (std::uint64_t x = 1; x <= 10; ++x)
        for (std::uint64_t y = 1; y <= 10; ++y)
          CHECK_FALSE(trial_division_is_prime(naive_eval(p, x, y)));
      continue;
    }
    CHECK(trial_division_is_prime(s.witness->value));
    std::uint64_t idx = 0;
    for (std::uint64_t x = 1; x <= 10; ++x) {
      for (std::uint64_t y = 1; y <= 10; ++y) {
        ++idx;
        if (EvalPoint{x, y} == s.witness->point) {
          CHECK(idx == s.steps);
          goto done;
        }
        CHECK_FALSE(trial_division_is_prime(naive_eval(p, x, y)));
      }
    }
  done:;
  }
}

TEST_CASE("early_prime_check reports the first event") {
  EarlyPrimeOutcome first = early_prime_check(parse("x^2+y^2+x*y"), 12);
  REQUIRE(first.kind == EarlyPrimeOutcome::Kind::PrimeFirst);
  CHECK(first.witness->point == EvalPoint{1, 1});
  CHECK(first.witness->value == 3);
  CHECK(first.steps == 1);

  EarlyPrimeOutcome collision = early_prime_check(parse("4*x*y"), 12);
  REQUIRE(collision.kind == EarlyPrimeOutcome::Kind::CollisionFirst);
  CHECK(*collision.point == EvalPoint{2, 1});
  CHECK(collision.value == 8);
  CHECK(*collision.first_point == EvalPoint{1, 2});
  CHECK(collision.steps == 13);

  EarlyPrimeOutcome squares = early_prime_check(parse("x^2+2*x*y+y^2"), 12);
  REQUIRE(squares.kind == EarlyPrimeOutcome::Kind::CollisionFirst);
  CHECK(*squares.point == EvalPoint{2, 1});
  CHECK(squares.value == 9);
  CHECK(*squares.first_point == EvalPoint{1, 2});
  CHECK(squares.steps == 13);
}

TEST_CASE("early_prime_check returns Neither when nothing happens in range") {
  // 4xy in a single row never repeats and never goes prime
  EarlyPrimeOutcome none = early_prime_check(parse("4*x*y"), 1);
  REQUIRE(none.kind == EarlyPrimeOutcome::Kind::Neither);
  CHECK(none.points_scanned == 1);
}

TEST_CASE("verify_prime_free agrees with lex_search") {
  testing::PolyGen gen(77);
  for (int iter = 0; iter < 20; ++iter) {
    Polynomial p = gen.random_poly();
    PrimeFreeReport r = verify_prime_free(p, 9);
    SearchOutcome s = lex_search(p, 9);
    CHECK(r.clean == (s.kind == SearchOutcome::Kind::Exhausted));
    if (!r.clean) {
      CHECK(r.counterexample->point == s.witness->point);
      CHECK(r.counterexample->value == s.witness->value);
    }
  }
}

TEST_CASE("verify_prime_free spot checks") {
  PrimeFreeReport clean = verify_prime_free(parse("4*x*y"), 200);
  CHECK(clean.clean);
  CHECK(clean.points == 40'000);

  PrimeFreeReport squares = verify_prime_free(parse("x^2+2*x*y+y^2"), 200);
  CHECK(squares.clean);

  PrimeFreeReport dirty = verify_prime_free(parse("x*y"), 5);
  REQUIRE_FALSE(dirty.clean);
  CHECK(dirty.counterexample->point == EvalPoint{1, 2});
  CHECK(dirty.counterexample->value == 2);
}

TEST_CASE("verify_prime_free is deterministic across jobs") {
  testing::PolyGen gen(87);
  for (int iter = 0; iter < 10; ++iter) {
    Polynomial p = gen.random_poly();
    PrimeFreeReport seq = verify_prime_free(p, 12, 1);
    PrimeFreeReport par = verify_prime_free(p, 12, 4);
    CHECK(seq.clean == par.clean);
    CHECK(seq.points == par.points);
    if (!seq.clean) CHECK(seq.counterexample->point == par.counterexample->point);
  }
}

TEST_CASE("grid_gcd spot values") {
  CHECK(grid_gcd(parse("4*x*y"), 5) == 4);
  CHECK(grid_gcd(parse("x^2+y^2+x*y"), 5) == 1);
  CHECK(grid_gcd(parse("x^2+2*x*y+y^2"), 5) == 1);
  CHECK(grid_gcd(parse("6*x*y + 12*x"), 3) == 6);
}

TEST_CASE("grid_gcd divisibility chain and membership") {
  testing::PolyGen gen(97);
  for (int iter = 0; iter < 15; ++iter) {
    Polynomial p = gen.random_poly();
    Nat prev = 0;
    for (std::uint64_t bound = 1; bound <= 20; ++bound) {
      Nat g = grid_gcd(p, bound);
      if (bound > 1) CHECK(mpz_divisible_p(prev.get_mpz_t(), g.get_mpz_t()));
      prev = g;
    }
    Nat g5 = grid_gcd(p, 5);
    for (std::uint64_t x = 1; x <= 5; ++x)
      for (std::uint64_t y = 1; y <= 5; ++y) {
        Nat v = naive_eval(p, x, y);
        CHECK(mpz_divisible_p(v.get_mpz_t(), g5.get_mpz_t()));
      }
  }
}
