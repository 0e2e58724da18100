#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "primeveil/poly.hpp"

using namespace primeveil;
using primeveil::testing::naive_eval;

namespace {

Polynomial::TermMap terms_of(const Polynomial& p) { return p.terms(); }

ParseError capture_parse_error(const char* text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: ", text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse accepts the paper-style forms") {
  Polynomial p = parse("4xy");
  Polynomial::TermMap expected{{{1, 1}, 4}};
  CHECK(terms_of(p) == expected);

  Polynomial q = parse("x^2 + 2*x*y + y^2");
  Polynomial::TermMap expected_q{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
  CHECK(terms_of(q) == expected_q);

  CHECK(parse("4xy") == parse("4*x*y"));
  CHECK(parse("4 x y") == parse("4*x*y"));
  CHECK(parse("x*x") == parse("x^2"));
  CHECK(parse("x^0y") == parse("y"));
  CHECK(parse("2x^3y^4") == parse("2 * x^3 * y^4"));
  CHECK(parse("x + x") == parse("2x"));
  CHECK(parse("0*x + y") == parse("y"));
  CHECK(parse("12345678901234567890123456789*x").terms().begin()->second ==
        Nat("12345678901234567890123456789"));
}

TEST_CASE("parse rejects what the class forbids") {
  auto constant = capture_parse_error("x + 1");
  CHECK(constant.kind() == ParseErrorKind::ConstantTerm);
  CHECK(constant.offset() == 4);

  CHECK(capture_parse_error("x^0").kind() == ParseErrorKind::ConstantTerm);
  CHECK(capture_parse_error("3").kind() == ParseErrorKind::ConstantTerm);

  auto negative = capture_parse_error("x - y");
  CHECK(negative.kind() == ParseErrorKind::Negative);
  CHECK(negative.offset() == 2);

  auto unknown = capture_parse_error("4xz");
  CHECK(unknown.kind() == ParseErrorKind::UnknownVariable);
  CHECK(unknown.offset() == 2);

  CHECK(capture_parse_error("").kind() == ParseErrorKind::Empty);
  CHECK(capture_parse_error("   ").kind() == ParseErrorKind::Empty);
  CHECK(capture_parse_error("0*x").kind() == ParseErrorKind::Empty);

  CHECK(capture_parse_error("x +").kind() == ParseErrorKind::Syntax);
  CHECK(capture_parse_error("x ^").kind() == ParseErrorKind::Syntax);
  CHECK(capture_parse_error("4**x").kind() == ParseErrorKind::Syntax);
  CHECK(capture_parse_error("x y 4").kind() == ParseErrorKind::Syntax);
  CHECK(capture_parse_error("x^65").kind() == ParseErrorKind::Syntax);
  CHECK(capture_parse_error("x^40*x^40").kind() == ParseErrorKind::Syntax);

  auto syntax = capture_parse_error("x & y");
  CHECK(syntax.kind() == ParseErrorKind::Syntax);
  CHECK(syntax.offset() == 2);
}

TEST_CASE("canonical string follows the fixed ordering") {
  CHECK(to_canonical_string(parse("4xy")) == "4*x*y");
  CHECK(to_canonical_string(parse("y^2 + x*y + x^2")) == "x^2 + x*y + y^2");
  CHECK(to_canonical_string(parse("2y^3")) == "2*y^3");
  CHECK(to_canonical_string(parse("y + x^2")) == "x^2 + y");
  CHECK(to_canonical_string(parse("x + y + x*y")) == "x*y + x + y");
}

TEST_CASE("parse round-trips the canonical string") {
  testing::PolyGen gen(42);
  for (int iter = 0; iter < 200; ++iter) {
    Polynomial p = gen.random_poly(6, 7, 30);
    CHECK(parse(to_canonical_string(p)) == p);
  }
}

TEST_CASE("eval matches the worked examples") {
  Polynomial p = parse("x^2+y^2+x*y");
  CHECK(p.eval(1, 2) == 7);
  CHECK(p.eval(2, 2) == 12);
  CHECK(parse("4*x*y").eval(2, 2) == 16);
}

TEST_CASE("Horner evaluation equals the naive sum") {
  testing::PolyGen gen(7);
  for (int iter = 0; iter < 300; ++iter) {
    Polynomial p = gen.random_poly(6, 8, 50);
    Nat x(static_cast<unsigned long>(gen.pick(0, 40)));
    Nat y(static_cast<unsigned long>(gen.pick(0, 40)));
    CHECK(p.eval(x, y) == naive_eval(p, x, y));
  }
}

TEST_CASE("positivity and monotonicity on the positive grid") {
  testing::PolyGen gen(3);
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial p = gen.random_poly();
    for (std::uint64_t x = 1; x <= 8; ++x) {
      for (std::uint64_t y = 1; y <= 8; ++y) {
        Nat here = naive_eval(p, x, y);
        CHECK(p.eval(x, y) >= 1);
        CHECK(naive_eval(p, x + 1, y) >= here);
        CHECK(naive_eval(p, x, y + 1) >= here);
      }
    }
  }
}

TEST_CASE("specialize substitutes one variable") {
  Polynomial p = parse("4*x*y");
  Polynomial s = specialize(p, Var::Y, 1);
  CHECK(to_canonical_string(s) == "4*x");

  Polynomial q = specialize(parse("x^2*y + x*y^2"), Var::Y, 2);
  CHECK(to_canonical_string(q) == "2*x^2 + 4*x");

  CHECK_THROWS_AS(specialize(parse("x^2+y^2+x*y"), Var::Y, 1), ConstantTermError);
  CHECK_THROWS_AS(specialize(parse("x"), Var::X, 5), ConstantTermError);

  // substitution is evaluation-compatible wherever it is defined
  Polynomial r = parse("x^2*y + 3*x*y^3 + x");
  Polynomial ry = specialize(r, Var::Y, 4);
  for (std::uint64_t x = 1; x <= 6; ++x)
    CHECK(ry.eval(x, 1) == r.eval(x, 4));
}

TEST_CASE("values_upto returns distinct values with least witnesses") {
  auto vals = values_upto(parse("4*x*y"), 15);
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == ValueWitness{{1, 1}, 4});
  CHECK(vals[1] == ValueWitness{{1, 2}, 8});
  CHECK(vals[2] == ValueWitness{{1, 3}, 12});

  auto vals2 = values_upto(parse("x^2+y^2+x*y"), 11);
  REQUIRE(vals2.size() == 2);
  CHECK(vals2[0] == ValueWitness{{1, 1}, 3});
  CHECK(vals2[1] == ValueWitness{{1, 2}, 7});

  auto vals3 = values_upto(parse("x^2+2*x*y+y^2"), 15);
  REQUIRE(vals3.size() == 2);
  CHECK(vals3[0] == ValueWitness{{1, 1}, 4});
  CHECK(vals3[1] == ValueWitness{{1, 2}, 9});
}

TEST_CASE("values_upto agrees with a brute-force grid oracle") {
  testing::PolyGen gen(19);
  for (int iter = 0; iter < 30; ++iter) {
    Polynomial p = gen.random_poly(4, 3, 6);
    Nat cap(static_cast<unsigned long>(gen.pick(1, 150)));

    // oracle: evaluate everything on a grid past the cap; any x-dependent
    // polynomial has f(x,1) >= x, so 151 rows always overshoot a cap of 150
    std::map<Nat, EvalPoint> expected;
    std::uint64_t xr = p.depends_on_x() ? 151 : 1;
    std::uint64_t yr = p.depends_on_y() ? 151 : 1;
    for (std::uint64_t x = 1; x <= xr; ++x)
      for (std::uint64_t y = 1; y <= yr; ++y) {
        Nat v = naive_eval(p, x, y);
        if (v <= cap) expected.try_emplace(v, EvalPoint{x, y});
      }
    if (p.depends_on_x()) REQUIRE(naive_eval(p, 152, 1) > cap);
    if (p.depends_on_y()) REQUIRE(naive_eval(p, 1, 152) > cap);

    auto got = values_upto(p, cap);
    REQUIRE(got.size() == expected.size());
    std::size_t idx = 0;
    for (const auto& [value, point] : expected) {
      CHECK(got[idx].value == value);
      CHECK(got[idx].point == point);
      ++idx;
    }
  }
}

TEST_CASE("values_upto trips the point guard instead of running away") {
  Limits tight;
  tight.max_points = 100;
  CHECK_THROWS_AS(values_upto(parse("x"), Nat(1'000'000), tight), ResourceLimitError);
}

TEST_CASE("parser survives arbitrary input without crashing") {
  const std::string charset = "xy0123456789+*^ ()-z.#\t";
  std::mt19937 rng(353);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
  int parsed = 0, rejected = 0;
  for (int iter = 0; iter < 5000; ++iter) {
    std::string text;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) text += charset[pick(rng)];
    try {
      Polynomial p = parse(text);
      // anything accepted must round-trip
      CHECK(parse(to_canonical_string(p)) == p);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.offset() <= text.size());
      ++rejected;
    }
  }
  CHECK(parsed > 0);
  CHECK(rejected > 0);
}

TEST_CASE("shift quotient is exact and matches the stated values") {
  CHECK(shift_quotient(parse("4*x*y"), 1, 1, 3) == 4);
  CHECK(shift_quotient(parse("x^2+y^2+x*y"), 1, 1, 1) == 4);
  CHECK(shift_quotient(parse("x^2"), 2, 5, 7) == 0);
}

TEST_CASE("shift divisibility holds across the tested box") {
  testing::PolyGen gen(23);
  for (int iter = 0; iter < 20; ++iter) {
    Polynomial p = gen.random_poly();
    for (std::uint64_t x = 1; x <= 6; ++x)
      for (std::uint64_t y = 1; y <= 6; ++y)
        for (std::uint64_t a = 1; a <= 6; ++a) {
          Nat diff = naive_eval(p, x, y + a) - naive_eval(p, x, y);
          CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(a)));
          // and the library quotient reproduces it
          CHECK(shift_quotient(p, x, y, a) * Nat(static_cast<unsigned long>(a)) == diff);
        }
  }
}

TEST_CASE("gcd(x,y) divides f(x,y) and the coprimality implication holds") {
  testing::PolyGen gen(29);
  for (int iter = 0; iter < 25; ++iter) {
    Polynomial p = gen.random_poly();
    for (std::uint64_t x = 1; x <= 12; ++x)
      for (std::uint64_t y = 1; y <= 12; ++y) {
        Nat v = p.eval(x, y);
        Nat g = gcd(x, y);
        CHECK(mpz_divisible_p(v.get_mpz_t(), g.get_mpz_t()));
        if (gcd(Nat(static_cast<unsigned long>(x)), v) == 1) CHECK(g == 1);
      }
  }
}

TEST_CASE("eval point wrapper and zero-argument evaluation") {
  Polynomial p = parse("x^2*y + x");
  CHECK(eval(p, EvalPoint{3, 2}) == 21);
  CHECK(p.eval(3, 0) == 3);   // terms containing y vanish
  CHECK(p.eval(0, 5) == 0);   // no constant term
}
