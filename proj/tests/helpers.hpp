#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "primeveil/numeric.hpp"
#include "primeveil/poly.hpp"

namespace primeveil::testing {

// ---- independent oracles; none of these may call the code they check ----

// plain trial division
inline bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool trial_division_is_prime(const Nat& n) {
  if (n < 2) return false;
  Nat d = 2;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    ++d;
  }
  return true;
}

// term-by-term power-and-sum evaluation
inline Nat naive_eval(const Polynomial& p, const Nat& x, const Nat& y) {
  Nat total = 0;
  for (const auto& [exps, coeff] : p.terms()) {
    Nat xt, yt;
    mpz_pow_ui(xt.get_mpz_t(), x.get_mpz_t(), exps.first);
    mpz_pow_ui(yt.get_mpz_t(), y.get_mpz_t(), exps.second);
    total += coeff * xt * yt;
  }
  return total;
}

inline Nat naive_eval(const Polynomial& p, std::uint64_t x, std::uint64_t y) {
  return naive_eval(p, Nat(static_cast<unsigned long>(x)), Nat(static_cast<unsigned long>(y)));
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---- deterministic random polynomial generators ----

struct PolyGen {
  std::mt19937 rng;

  explicit PolyGen(std::uint32_t seed) : rng(seed) {}

  std::uint64_t pick(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  }

  // small sparse polynomial; exponents in [0, max_exp], never (0,0)
  Polynomial random_poly(unsigned max_terms = 5, unsigned max_exp = 4,
                         unsigned max_coeff = 9) {
    Polynomial::TermMap terms;
    unsigned n = static_cast<unsigned>(pick(1, max_terms));
    while (terms.size() < n) {
      unsigned i = static_cast<unsigned>(pick(0, max_exp));
      unsigned j = static_cast<unsigned>(pick(0, max_exp));
      if (i == 0 && j == 0) continue;
      terms[{i, j}] = Nat(static_cast<unsigned long>(pick(1, max_coeff)));
    }
    return Polynomial::from_terms(std::move(terms));
  }

  // polynomial genuinely depending on both variables
  Polynomial random_both_vars_poly(unsigned max_terms = 5, unsigned max_exp = 4,
                                   unsigned max_coeff = 9) {
    for (;;) {
      Polynomial p = random_poly(max_terms, max_exp, max_coeff);
      if (p.depends_on_x() && p.depends_on_y()) return p;
    }
  }

  // polynomial with a small tuple bound f(2,2) <= max_b
  Polynomial random_small_bound_poly(std::uint64_t max_b) {
    for (;;) {
      Polynomial p = random_poly(3, 2, 3);
      if (p.eval(2, 2) <= Nat(static_cast<unsigned long>(max_b))) return p;
    }
  }
};

}  // namespace primeveil::testing
