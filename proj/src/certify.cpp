#include "primeveil/certify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace primeveil {

const char* tuple_status_name(TupleStatus s) {
  switch (s) {
    case TupleStatus::ObstructionGcd: return "obstruction_gcd";
    case TupleStatus::ObstructionEqualComposite: return "obstruction_equal_composite";
    case TupleStatus::Violation: return "violation";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PrimeFound: return "prime_found";
    case Verdict::PrimeFree: return "prime_free";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

TupleStatus check_tuple(const Nat& u, const Nat& v, const Nat& w) {
  if (u < 1 || v < 1 || w < 1)
    throw std::invalid_argument("tuple values must be positive");
  if (u == v && v == w)
    return is_prime(u) ? TupleStatus::Violation : TupleStatus::ObstructionEqualComposite;
  return gcd3(u, v, w) > 1 ? TupleStatus::ObstructionGcd : TupleStatus::Violation;
}

namespace {

std::uint64_t to_u64(const Nat& n) {
  if (!mpz_fits_ulong_p(n.get_mpz_t()))
    throw InternalError("bound does not fit a machine word");
  return mpz_get_ui(n.get_mpz_t());
}

// lazily filled table of f over [1, xmax] x [1, ymax]; falls back to direct
// evaluation when the table would be larger than the configured cell cap
class ValueGrid {
public:
  ValueGrid(const Polynomial& p, std::uint64_t xmax, std::uint64_t ymax,
            std::uint64_t max_cells)
      : p_(p), ymax_(ymax) {
    cached_ = xmax >= 1 && ymax >= 1 && xmax <= max_cells / ymax;
    if (cached_) rows_.resize(xmax + 1);
  }

  const Nat& at(std::uint64_t x, std::uint64_t y) {
    if (!cached_) {
      scratch_ = p_.eval(Nat(static_cast<unsigned long>(x)), Nat(static_cast<unsigned long>(y)));
      return scratch_;
    }
    auto& row = rows_[x];
    if (row.empty()) {
      row.reserve(ymax_);
      Nat xv(static_cast<unsigned long>(x));
      for (std::uint64_t yy = 1; yy <= ymax_; ++yy)
        row.push_back(p_.eval(xv, Nat(static_cast<unsigned long>(yy))));
    }
    return row[y - 1];
  }

private:
  const Polynomial& p_;
  std::uint64_t ymax_;
  bool cached_ = false;
  std::vector<std::vector<Nat>> rows_;
  Nat scratch_;
};

// Memoizing scanner over rectangles [1, B-u] x [1, B-v]. The tuple condition
// depends only on the value triple, so each distinct (u, v) pair is scanned
// once and each distinct triple is classified once.
class RectScanner {
public:
  RectScanner(const Polynomial& p, std::uint64_t bound_b, const Limits& limits)
      : bound_b_(bound_b),
        grid_(p, bound_b - 1, bound_b - 1, limits.max_grid_cells) {}

  TupleStatus status(const Nat& u, const Nat& v, const Nat& w) {
    auto key = std::make_tuple(u, v, w);
    auto it = triples_.find(key);
    if (it != triples_.end()) return it->second;
    TupleStatus s = check_tuple(u, v, w);
    triples_.emplace(std::move(key), s);
    return s;
  }

  // first (x, y) in lexicographic order whose triple is a Violation
  std::optional<EvalPoint> first_violation(const Nat& u, const Nat& v) {
    auto key = std::make_pair(u, v);
    auto it = violation_memo_.find(key);
    if (it != violation_memo_.end()) return it->second;
    std::optional<EvalPoint> found = scan_rect(u, v, TupleStatus::Violation);
    violation_memo_.emplace(std::move(key), found);
    return found;
  }

  // first (x, y) whose triple satisfies either obstruction clause
  std::optional<EvalPoint> first_obstruction(const Nat& u, const Nat& v) {
    auto key = std::make_pair(u, v);
    auto it = obstruction_memo_.find(key);
    if (it != obstruction_memo_.end()) return it->second;
    std::optional<EvalPoint> found;
    std::uint64_t xmax = bound_b_ - to_u64(u), ymax = bound_b_ - to_u64(v);
    for (std::uint64_t x = 1; x <= xmax && !found; ++x)
      for (std::uint64_t y = 1; y <= ymax; ++y)
        if (status(u, v, grid_.at(x, y)) != TupleStatus::Violation) {
          found = EvalPoint{x, y};
          break;
        }
    obstruction_memo_.emplace(std::move(key), found);
    return found;
  }

  const Nat& value_at(std::uint64_t x, std::uint64_t y) { return grid_.at(x, y); }

  std::uint64_t triples_checked() const { return triples_.size(); }

  template <typename Set>
  void collect_triples(Set& out) const {
    for (const auto& [key, status] : triples_) out.insert(key);
  }

private:
  std::optional<EvalPoint> scan_rect(const Nat& u, const Nat& v, TupleStatus wanted) {
    std::uint64_t xmax = bound_b_ - to_u64(u), ymax = bound_b_ - to_u64(v);
    for (std::uint64_t x = 1; x <= xmax; ++x)
      for (std::uint64_t y = 1; y <= ymax; ++y)
        if (status(u, v, grid_.at(x, y)) == wanted) return EvalPoint{x, y};
    return std::nullopt;
  }

  std::uint64_t bound_b_;
  ValueGrid grid_;
  std::map<std::tuple<Nat, Nat, Nat>, TupleStatus> triples_;
  std::map<std::pair<Nat, Nat>, std::optional<EvalPoint>> violation_memo_;
  std::map<std::pair<Nat, Nat>, std::optional<EvalPoint>> obstruction_memo_;
};

struct TupleScanInput {
  Nat bound_B;
  std::uint64_t bound_b = 0;
  std::vector<ValueWitness> feasible;  // lattice points with f <= B-1, lex order
  std::uint64_t distinct_values = 0;
};

Nat checked_bound(const Nat& B, const Limits& limits) {
  if (B > Nat(static_cast<unsigned long>(limits.b_cap))) {
    throw ResourceLimitError("tuple bound B = " + B.get_str() +
                             " exceeds the configured cap " + std::to_string(limits.b_cap));
  }
  return B;
}

TupleScanInput prepare_tuple_scan(const Polynomial& p, const Nat& B, const Limits& limits,
                                  bool distinct_projection) {
  TupleScanInput in;
  in.bound_B = B;
  in.bound_b = to_u64(B);
  in.feasible = points_upto(p, B - 1, limits);

  std::set<Nat> distinct;
  Nat span_points = 0, span_distinct = 0;
  for (const auto& w : in.feasible) {
    Nat slack = B - w.value;
    span_points += slack;
    if (distinct.insert(w.value).second) span_distinct += slack;
  }
  in.distinct_values = distinct.size();

  const Nat& span = distinct_projection ? span_distinct : span_points;
  if (span * span > Nat(static_cast<unsigned long>(limits.max_tuples)))
    throw ResourceLimitError("projected tuple count " + Nat(span * span).get_str() +
                             " exceeds the work guard");
  return in;
}

ViolationDetail classify_violation(const Nat& u, const Nat& v, const Nat& w) {
  return (u == v && v == w) ? ViolationDetail::EqualAndPrime
                            : ViolationDetail::GcdOneNotAllEqual;
}

struct ViolationCandidate {
  std::size_t ia = 0, ic = 0;
  EvalPoint pt;
};

// scan all (a,b) x (c,d) rectangles; returns the canonical-order-first
// violation or nullopt if every tuple is obstructed
std::optional<ViolationCandidate> scan_for_violation(const TupleScanInput& in,
                                                     const Polynomial& p,
                                                     const Limits& limits, unsigned jobs,
                                                     std::uint64_t& triples_out) {
  const std::size_t n = in.feasible.size();
  if (jobs <= 1 || n <= 1) {
    RectScanner scanner(p, in.bound_b, limits);
    for (std::size_t ia = 0; ia < n; ++ia) {
      const Nat& u = in.feasible[ia].value;
      for (std::size_t ic = 0; ic < n; ++ic) {
        const Nat& v = in.feasible[ic].value;
        if (auto hit = scanner.first_violation(u, v)) {
          triples_out = scanner.triples_checked();
          return ViolationCandidate{ia, ic, *hit};
        }
      }
    }
    triples_out = scanner.triples_checked();
    return std::nullopt;
  }

  // workers take (a,b) indices strided; the memoized scans keep per-worker
  // state and the reduction takes the lexicographically least candidate
  std::atomic<std::uint64_t> best_ia{UINT64_MAX};
  std::vector<std::optional<ViolationCandidate>> results(jobs);
  std::vector<std::set<std::tuple<Nat, Nat, Nat>>> triple_sets(jobs);
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](unsigned t) {
    try {
      RectScanner scanner(p, in.bound_b, limits);
      for (std::size_t ia = t; ia < n; ia += jobs) {
        if (ia > best_ia.load(std::memory_order_relaxed)) continue;
        const Nat& u = in.feasible[ia].value;
        bool found = false;
        for (std::size_t ic = 0; ic < n && !found; ++ic) {
          const Nat& v = in.feasible[ic].value;
          if (auto hit = scanner.first_violation(u, v)) {
            results[t] = ViolationCandidate{ia, ic, *hit};
            std::uint64_t cur = best_ia.load(std::memory_order_relaxed);
            while (ia < cur &&
                   !best_ia.compare_exchange_weak(cur, ia, std::memory_order_relaxed)) {
            }
            found = true;
          }
        }
        if (found) break;  // later strides of this worker are larger ia
      }
      scanner.collect_triples(triple_sets[t]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::optional<ViolationCandidate> best;
  for (const auto& r : results) {
    if (!r) continue;
    if (!best || r->ia < best->ia ||
        (r->ia == best->ia && (r->ic < best->ic ||
                               (r->ic == best->ic && r->pt < best->pt)))) {
      best = r;
    }
  }
  if (!best) {
    std::set<std::tuple<Nat, Nat, Nat>> all;
    for (auto& s : triple_sets) all.merge(s);
    triples_out = all.size();
  } else {
    triples_out = 0;  // counts are only reported on full scans
  }
  return best;
}

}  // namespace

CertifyOutcome certify_bivariate(const Polynomial& p, const CertifyOptions& opts) {
  const Limits& limits = opts.limits;
  Nat B = checked_bound(p.eval(2, 2), limits);
  std::uint64_t bound_b = to_u64(B);
  std::uint64_t sweep = opts.sweep_bound.value_or(bound_b);
  if (sweep < bound_b)
    throw std::invalid_argument("sweep_bound must be at least f(2,2) = " + B.get_str());
  if (Nat(static_cast<unsigned long>(sweep)) * Nat(static_cast<unsigned long>(sweep)) >
      Nat(static_cast<unsigned long>(limits.max_sweep_points)))
    throw ResourceLimitError("sweep of " + std::to_string(sweep) +
                             "^2 points exceeds the sweep guard");

  std::uint64_t prob_before = probabilistic_primality_answers();

  // phase 1: exhaustive base sweep, lexicographic
  {
    Nat xv = 1;
    for (std::uint64_t x = 1; x <= sweep; ++x, ++xv) {
      Nat yv = 1;
      for (std::uint64_t y = 1; y <= sweep; ++y, ++yv) {
        Nat v = p.eval(xv, yv);
        if (is_prime(v)) {
          CertifyOutcome out;
          out.verdict = Verdict::PrimeFound;
          out.witness = ValueWitness{{x, y}, std::move(v)};
          return out;
        }
      }
    }
  }

  // phase 2: tuple scan
  TupleScanInput in = prepare_tuple_scan(p, B, limits, /*distinct_projection=*/true);
  std::uint64_t triples = 0;
  auto hit = scan_for_violation(in, p, limits, opts.jobs, triples);
  if (hit) {
    const auto& pa = in.feasible[hit->ia];
    const auto& pc = in.feasible[hit->ic];
    ObstructionTuple t;
    t.a = pa.point.x;
    t.b = pa.point.y;
    t.c = pc.point.x;
    t.d = pc.point.y;
    t.x = hit->pt.x;
    t.y = hit->pt.y;
    t.u = pa.value;
    t.v = pc.value;
    t.w = eval(p, hit->pt);
    CertifyOutcome out;
    out.verdict = Verdict::Inconclusive;
    out.violation_detail = classify_violation(t.u, t.v, t.w);
    out.violation = std::move(t);
    return out;
  }

  Certificate cert;
  cert.bound_B = B;
  cert.tuples_checked = triples;
  cert.distinct_value_pairs = in.distinct_values * in.distinct_values;
  cert.sweep_bound = sweep;
  cert.sweep_points = sweep * sweep;
  cert.primality_probabilistic = probabilistic_primality_answers() > prob_before;
  CertifyOutcome out;
  out.verdict = Verdict::PrimeFree;
  out.certificate = std::move(cert);
  return out;
}

CertifyOutcome certify_univariate(const Polynomial& p, const CertifyOptions& opts) {
  if (p.degree_y() != 0)
    throw NotUnivariateError("polynomial depends on y; the univariate condition needs f(x) only");
  const Limits& limits = opts.limits;
  Nat B = checked_bound(p.eval(2, 1), limits);
  std::uint64_t bound_b = to_u64(B);
  std::uint64_t sweep = opts.sweep_bound.value_or(bound_b);
  if (sweep < bound_b)
    throw std::invalid_argument("sweep_bound must be at least f(2) = " + B.get_str());
  if (sweep > limits.max_sweep_points)
    throw ResourceLimitError("sweep exceeds the sweep guard");

  std::uint64_t prob_before = probabilistic_primality_answers();

  Nat xv = 1;
  for (std::uint64_t x = 1; x <= sweep; ++x, ++xv) {
    Nat v = p.eval(xv, 1);
    if (is_prime(v)) {
      CertifyOutcome out;
      out.verdict = Verdict::PrimeFound;
      out.witness = ValueWitness{{x, 1}, std::move(v)};
      return out;
    }
  }

  std::vector<ValueWitness> feasible = points_upto(p, B - 1, limits);

  // cache f over the x range actually visited
  std::vector<Nat> fx_cache(bound_b, Nat(0));
  bool cache_filled = false;
  auto fx_at = [&](std::uint64_t x) -> const Nat& {
    if (!cache_filled) {
      Nat cv = 1;
      for (std::uint64_t i = 1; i < bound_b; ++i, ++cv) fx_cache[i] = p.eval(cv, 1);
      cache_filled = true;
    }
    return fx_cache[x];
  };

  std::map<std::pair<Nat, Nat>, TupleStatus> memo;
  std::set<Nat> distinct_u;
  for (const auto& pa : feasible) {
    const Nat& u = pa.value;
    distinct_u.insert(u);
    std::uint64_t xmax = bound_b - to_u64(u);
    for (std::uint64_t x = 1; x <= xmax; ++x) {
      const Nat& fx = fx_at(x);
      auto key = std::make_pair(u, fx);
      auto it = memo.find(key);
      TupleStatus s;
      if (it != memo.end()) {
        s = it->second;
      } else {
        s = check_tuple(u, u, fx);
        memo.emplace(std::move(key), s);
      }
      if (s == TupleStatus::Violation) {
        CertifyOutcome out;
        out.verdict = Verdict::Inconclusive;
        out.violation_univariate = UnivariatePair{pa.point.x, x, u, fx};
        out.violation_detail = classify_violation(u, u, fx);
        return out;
      }
    }
  }

  Certificate cert;
  cert.bound_B = B;
  cert.tuples_checked = memo.size();
  cert.distinct_value_pairs = distinct_u.size();
  cert.sweep_bound = sweep;
  cert.sweep_points = sweep;
  cert.primality_probabilistic = probabilistic_primality_answers() > prob_before;
  CertifyOutcome out;
  out.verdict = Verdict::PrimeFree;
  out.certificate = std::move(cert);
  return out;
}

void for_each_tuple(const Polynomial& p, const Limits& limits,
                    const std::function<bool(const ObstructionTuple&)>& visit) {
  Nat B = checked_bound(p.eval(2, 2), limits);
  TupleScanInput in = prepare_tuple_scan(p, B, limits, /*distinct_projection=*/false);
  ValueGrid grid(p, in.bound_b - 1, in.bound_b - 1, limits.max_grid_cells);

  for (const auto& pa : in.feasible) {
    std::uint64_t xmax = in.bound_b - to_u64(pa.value);
    for (const auto& pc : in.feasible) {
      std::uint64_t ymax = in.bound_b - to_u64(pc.value);
      for (std::uint64_t x = 1; x <= xmax; ++x) {
        for (std::uint64_t y = 1; y <= ymax; ++y) {
          ObstructionTuple t;
          t.a = pa.point.x;
          t.b = pa.point.y;
          t.c = pc.point.x;
          t.d = pc.point.y;
          t.x = x;
          t.y = y;
          t.u = pa.value;
          t.v = pc.value;
          t.w = grid.at(x, y);
          if (!visit(t)) return;
        }
      }
    }
  }
}

std::vector<ObstructionTuple> enumerate_tuples(const Polynomial& p, const Limits& limits) {
  std::vector<ObstructionTuple> out;
  for_each_tuple(p, limits, [&](const ObstructionTuple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<ObstructionFound> find_first_obstruction(const Polynomial& p,
                                                       const Limits& limits) {
  Nat B = checked_bound(p.eval(2, 2), limits);
  TupleScanInput in = prepare_tuple_scan(p, B, limits, /*distinct_projection=*/true);
  RectScanner scanner(p, in.bound_b, limits);

  for (const auto& pa : in.feasible) {
    for (const auto& pc : in.feasible) {
      if (auto hit = scanner.first_obstruction(pa.value, pc.value)) {
        ObstructionTuple t;
        t.a = pa.point.x;
        t.b = pa.point.y;
        t.c = pc.point.x;
        t.d = pc.point.y;
        t.x = hit->x;
        t.y = hit->y;
        t.u = pa.value;
        t.v = pc.value;
        t.w = scanner.value_at(hit->x, hit->y);
        TupleStatus s = check_tuple(t.u, t.v, t.w);
        return ObstructionFound{std::move(t), s};
      }
    }
  }
  return std::nullopt;
}

}  // namespace primeveil
