#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace primeveil {

// Non-negative integer of unbounded magnitude.
using Nat = mpz_class;

Nat gcd(const Nat& a, const Nat& b);
Nat gcd3(const Nat& a, const Nat& b, const Nat& c);

struct Primality {
  bool is_prime;
  // true only when a "prime" answer comes from the combined strong/Lucas
  // test above the deterministic witness bound
  bool probabilistic;
};

// Largest n (exclusive) for which the fixed strong-pseudoprime witness set
// {2,3,5,...,41} is known to decide primality exactly: 3317044064679887385961981.
extern const Nat kDeterministicPrimalityBound;

Primality classify_prime(const Nat& n);
bool is_prime(const Nat& n);

// Process-wide count of probabilistic "prime" answers handed out so far.
// Lets callers flag reports whose primality answers left the deterministic range.
std::uint64_t probabilistic_primality_answers();

}  // namespace primeveil
