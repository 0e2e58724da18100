#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primeveil/certify.hpp"
#include "primeveil/numeric.hpp"
#include "primeveil/poly.hpp"

namespace primeveil {

// One violating instantiation: the variable assignment that was tested plus
// the computed values relevant to the claim. `label` tags the clause for
// claims with more than one (e.g. shift direction, sub-clauses).
struct Counterexample {
  std::vector<std::pair<std::string, Nat>> assignment;
  std::vector<std::pair<std::string, Nat>> values;
  std::string label;
};

enum class ClaimStatus { Upheld, Falsified };

const char* claim_status_name(ClaimStatus s);

struct ClaimReport {
  std::string claim_id;
  std::string polynomial;
  std::vector<std::pair<std::string, std::uint64_t>> ranges;
  std::uint64_t checked = 0;  // full instantiation count, independent of the cap
  std::uint64_t skipped = 0;  // instantiations outside the claim's domain
  std::vector<Counterexample> counterexamples;  // capped
  std::uint64_t counterexamples_total = 0;
  ClaimStatus status = ClaimStatus::Upheld;
};

struct ClaimOptions {
  std::uint64_t counterexample_cap = 10;
};

// Shift-divisibility claims over all e, a, x, y in [1, bound], each in both
// shift directions (the negative direction only where y - a >= 1):
//   part 1: e | f(x, y+a) and e | a  =>  e | f(x, y)
//   part 2: e | f(x, y)   and e | a  =>  e | f(x, y+a)
//   part 3: e | f(x, y+a) and e | f(x, y)  =>  e | a
std::array<ClaimReport, 3> check_shift_lemma(const Polynomial& p, std::uint64_t bound,
                                             const ClaimOptions& opts = {});

// Composition claims:
//   A: f(v, v) with v = f(a, b) is never prime, for a, b in [1, bound].
//   B: f(x, w) with w = f(x, 0) is never prime, for x in [1, bound];
//      instantiations with w = 0 are skipped and counted.
std::array<ClaimReport, 2> check_composition(const Polynomial& p, std::uint64_t bound,
                                             const ClaimOptions& opts = {});

// Pairwise-coprimality claims (four statements; statement 4 runs at its own,
// smaller bound because it quantifies six variables):
//   1: any of f(x, y+f(x,b)), f(x,y), f(x,b) prime => the three pairwise coprime
//   2: f(x, y+f(a,b)) prime => gcd(f(x,y), f(a,b)) = 1 or both equal and prime;
//      when y = x additionally gcd(b, y) = 1
//   3: f(x, b+f(x,b)) prime => f(x,b) prime
//   4: f(x+f(a,b), y+f(c,d)) prime => gcd3 of the three inner values = 1 or all
//      equal and prime; when a = x and b = y additionally gcd(x,y,c,d) = 1
std::array<ClaimReport, 4> check_corollary_m(const Polynomial& p, std::uint64_t bound,
                                             std::uint64_t statement4_bound = 4,
                                             const ClaimOptions& opts = {});

// Gcd claims:
//   A (compositeness form): gcd(x, y) > 1 => f(x, y) not prime.
//   B: gcd(a, f(a,b)) = 1 => gcd(a, b) = 1.
// The divisibility form gcd(x,y) | f(x,y) is asserted as a self-check and
// throws InternalError if it ever fails.
std::array<ClaimReport, 2> check_gcd_theorems(const Polynomial& p, std::uint64_t bound,
                                              const ClaimOptions& opts = {});

struct MinimalObstructionEntry {
  std::string polynomial;
  bool depends_on_both = false;
  bool prime_free = false;  // empirical, up to the report's bound
  std::optional<ValueWitness> prime_witness;   // when not prime-free
  std::optional<ObstructionFound> obstruction; // when prime-free
};

// Corpus-level check of the conjecture that every prime-free polynomial
// admits at least one obstruction tuple. Prime-freeness is only empirical up
// to prime_free_bound; both the unfiltered corpus and the sub-corpus of
// polynomials depending on both variables are summarized.
struct MinimalObstructionReport {
  ClaimReport summary;            // all empirically prime-free polynomials
  ClaimReport summary_both_vars;  // restricted to genuinely bivariate ones
  std::vector<MinimalObstructionEntry> entries;
  std::uint64_t prime_free_bound = 0;
};

MinimalObstructionReport check_minimal_obstruction(const std::vector<Polynomial>& corpus,
                                                   std::uint64_t prime_free_bound,
                                                   const ClaimOptions& opts = {},
                                                   const Limits& limits = {});

}  // namespace primeveil
