#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "primeveil/errors.hpp"
#include "primeveil/numeric.hpp"
#include "primeveil/poly.hpp"

namespace primeveil {

enum class TupleStatus {
  ObstructionGcd,             // values not all equal, gcd3 > 1
  ObstructionEqualComposite,  // all equal and the common value is not prime
  Violation,                  // neither condition holds
};

const char* tuple_status_name(TupleStatus s);

// The recursive obstruction condition on a value triple
// (u, v, w) = (f(a,b), f(c,d), f(x,y)).
TupleStatus check_tuple(const Nat& u, const Nat& v, const Nat& w);

// Distinguishes which clause a Violation failed.
enum class ViolationDetail {
  GcdOneNotAllEqual,  // values differ yet share no common factor
  EqualAndPrime,      // all equal and prime
};

struct ObstructionTuple {
  std::uint64_t a = 0, b = 0, c = 0, d = 0, x = 0, y = 0;
  Nat u, v, w;  // f(a,b), f(c,d), f(x,y)
  friend bool operator==(const ObstructionTuple&, const ObstructionTuple&) = default;
};

// Violation witness for the univariate condition: a pair (a, x) with
// x + f(a) <= f(2) whose values fail both clauses.
struct UnivariatePair {
  std::uint64_t a = 0, x = 0;
  Nat fa, fx;
  friend bool operator==(const UnivariatePair&, const UnivariatePair&) = default;
};

struct Certificate {
  Nat bound_B;                            // f(2,2), or f(2) univariate
  std::uint64_t tuples_checked = 0;       // distinct value triples evaluated
  std::uint64_t distinct_value_pairs = 0; // distinct (f(a,b), f(c,d)) pairs
  std::uint64_t sweep_bound = 0;
  std::uint64_t sweep_points = 0;
  bool primality_probabilistic = false;
};

enum class Verdict { PrimeFound, PrimeFree, Inconclusive };

const char* verdict_name(Verdict v);

struct CertifyOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ValueWitness> witness;                  // PrimeFound
  std::optional<Certificate> certificate;               // PrimeFree
  std::optional<ObstructionTuple> violation;            // Inconclusive, bivariate
  std::optional<UnivariatePair> violation_univariate;   // Inconclusive, univariate
  std::optional<ViolationDetail> violation_detail;      // Inconclusive
};

struct CertifyOptions {
  std::optional<std::uint64_t> sweep_bound;  // defaults to the tuple bound B
  unsigned jobs = 1;
  Limits limits{};
};

// Two phases: exhaustive prime sweep over [1, sweep_bound]^2, then the tuple
// scan for all (a,b,c,d,x,y) with x + f(a,b) <= B and y + f(c,d) <= B where
// B = f(2,2). PrimeFree means the sweep was clean and every tuple is
// obstructed; the first tuple (canonical order) failing both clauses yields
// Inconclusive.
CertifyOutcome certify_bivariate(const Polynomial& p, const CertifyOptions& opts = {});

// Same procedure for a polynomial constant in y, with B = f(2) and pairs
// (a, x), x + f(a) <= B. Throws NotUnivariateError if p depends on y.
CertifyOutcome certify_univariate(const Polynomial& p, const CertifyOptions& opts = {});

// Full tuple stream in canonical order: (a,b) lexicographic over feasible
// points, then (c,d), then (x,y). Stop by returning false from the visitor.
void for_each_tuple(const Polynomial& p, const Limits& limits,
                    const std::function<bool(const ObstructionTuple&)>& visit);

std::vector<ObstructionTuple> enumerate_tuples(const Polynomial& p,
                                               const Limits& limits = {});

struct ObstructionFound {
  ObstructionTuple tuple;
  TupleStatus status;
};

// First tuple in canonical order whose triple satisfies either obstruction
// clause; nullopt when the stream has none.
std::optional<ObstructionFound> find_first_obstruction(const Polynomial& p,
                                                       const Limits& limits = {});

}  // namespace primeveil
