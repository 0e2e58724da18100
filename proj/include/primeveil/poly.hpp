#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primeveil/errors.hpp"
#include "primeveil/numeric.hpp"

namespace primeveil {

// Largest exponent accepted per variable; keeps f(2,2) and the tuple bound
// computable at desk scale.
inline constexpr unsigned kMaxExponent = 64;

// Sparse bivariate polynomial with strictly positive coefficients and no
// constant term: every stored key (i, j) has i + j >= 1.
class Polynomial {
public:
  using Exponents = std::pair<unsigned, unsigned>;  // (i, j) for x^i * y^j
  using TermMap = std::map<Exponents, Nat>;

  // Validates the class invariants: at least one term, no (0,0) key, all
  // coefficients > 0, exponents <= kMaxExponent. Throws std::invalid_argument.
  static Polynomial from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  unsigned degree_x() const { return d1_; }
  unsigned degree_y() const { return d2_; }
  bool depends_on_x() const { return d1_ > 0; }
  bool depends_on_y() const { return d2_ > 0; }

  // Nested Horner evaluation; exact. Zero arguments are permitted (the
  // polynomial is defined on all of Z>=0 even though witnesses never use 0).
  Nat eval(const Nat& x, const Nat& y) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

private:
  Polynomial() = default;
  TermMap terms_;
  unsigned d1_ = 0;
  unsigned d2_ = 0;
};

// Grid point with positive coordinates.
struct EvalPoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
  friend auto operator<=>(const EvalPoint&, const EvalPoint&) = default;
};

struct ValueWitness {
  EvalPoint point;
  Nat value;
  friend bool operator==(const ValueWitness&, const ValueWitness&) = default;
};

enum class Var { X, Y };

// Accepted syntax: sum of terms, each an optional decimal coefficient
// followed by variable factors in x and y; "*" is optional everywhere,
// "^" introduces an exponent, juxtaposition multiplies ("4xy").
Polynomial parse(std::string_view text);

// Deterministic rendering; parse(to_canonical_string(p)) == p.
// Terms ordered by total degree descending, then x-degree descending.
std::string to_canonical_string(const Polynomial& p);

Nat eval(const Polynomial& p, EvalPoint at);

// Substitute `value` for one variable. Throws ConstantTermError if the result
// would pick up a constant term (leaving the class).
Polynomial specialize(const Polynomial& p, Var variable, const Nat& value);

// Every lattice point (x, y) with f(x, y) <= cap, in lexicographic point
// order. A variable the polynomial does not depend on is clamped to 1.
std::vector<ValueWitness> points_upto(const Polynomial& p, const Nat& cap,
                                      const Limits& limits = {});

// Every distinct value <= cap paired with its lexicographically least
// witness, sorted ascending by value.
std::vector<ValueWitness> values_upto(const Polynomial& p, const Nat& cap,
                                      const Limits& limits = {});

// (f(x, y+a) - f(x, y)) / a, always an exact non-negative integer for this
// polynomial class. Throws InternalError if the division has a remainder.
Nat shift_quotient(const Polynomial& p, const Nat& x, const Nat& y, const Nat& a);

}  // namespace primeveil
