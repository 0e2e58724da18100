#pragma once

#include <cstdint>
#include <optional>

#include "primeveil/numeric.hpp"
#include "primeveil/poly.hpp"

namespace primeveil {

struct SearchOutcome {
  enum class Kind { Prime, Exhausted };
  Kind kind = Kind::Exhausted;
  std::optional<ValueWitness> witness;  // Prime
  std::uint64_t steps = 0;              // 1-based scan index of the witness
  std::uint64_t points_scanned = 0;     // Exhausted
  Nat max_value_seen;                   // Exhausted
};

struct EarlyPrimeOutcome {
  enum class Kind { PrimeFirst, CollisionFirst, Neither };
  Kind kind = Kind::Neither;
  std::optional<ValueWitness> witness;   // PrimeFirst
  std::optional<EvalPoint> point;        // CollisionFirst: repeating point
  Nat value;                             // CollisionFirst: repeated value
  std::optional<EvalPoint> first_point;  // CollisionFirst: earlier witness
  std::uint64_t steps = 0;
  std::uint64_t points_scanned = 0;  // Neither
};

struct PrimeFreeReport {
  bool clean = false;
  std::optional<ValueWitness> counterexample;
  std::uint64_t points = 0;
};

// Scan (x, y) over [1, bound]^2 in lexicographic order; stop at the first
// prime value.
SearchOutcome lex_search(const Polynomial& p, std::uint64_t bound);

// Same scan, reporting whichever comes first: a prime value or a repeated
// value. A colliding value is never prime (its first occurrence would have
// stopped the scan), so the two events cannot tie.
EarlyPrimeOutcome early_prime_check(const Polynomial& p, std::uint64_t bound);

// clean == true iff no point of [1, bound]^2 evaluates to a prime.
PrimeFreeReport verify_prime_free(const Polynomial& p, std::uint64_t bound,
                                  unsigned jobs = 1);

// gcd of all values over [1, bound]^2; an upper multiple of the fixed divisor
// of the value set, non-increasing under divisibility as the bound grows.
Nat grid_gcd(const Polynomial& p, std::uint64_t bound);

}  // namespace primeveil
