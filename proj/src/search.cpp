#include "primeveil/search.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

namespace primeveil {

namespace {

void require_bound(std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
}

}  // namespace

SearchOutcome lex_search(const Polynomial& p, std::uint64_t bound) {
  require_bound(bound);
  SearchOutcome out;
  Nat max_seen = 0;
  std::uint64_t steps = 0;
  Nat xv = 1;
  for (std::uint64_t x = 1; x <= bound; ++x, ++xv) {
    Nat yv = 1;
    for (std::uint64_t y = 1; y <= bound; ++y, ++yv) {
      ++steps;
      Nat v = p.eval(xv, yv);
      if (v > max_seen) max_seen = v;
      if (is_prime(v)) {
        out.kind = SearchOutcome::Kind::Prime;
        out.witness = ValueWitness{{x, y}, std::move(v)};
        out.steps = steps;
        return out;
      }
    }
  }
  out.kind = SearchOutcome::Kind::Exhausted;
  out.points_scanned = steps;
  out.max_value_seen = std::move(max_seen);
  return out;
}

EarlyPrimeOutcome early_prime_check(const Polynomial& p, std::uint64_t bound) {
  require_bound(bound);
  EarlyPrimeOutcome out;
  std::map<Nat, EvalPoint> first_seen;
  std::uint64_t steps = 0;
  Nat xv = 1;
  for (std::uint64_t x = 1; x <= bound; ++x, ++xv) {
    Nat yv = 1;
    for (std::uint64_t y = 1; y <= bound; ++y, ++yv) {
      ++steps;
      Nat v = p.eval(xv, yv);
      if (is_prime(v)) {
        out.kind = EarlyPrimeOutcome::Kind::PrimeFirst;
        out.witness = ValueWitness{{x, y}, std::move(v)};
        out.steps = steps;
        return out;
      }
      auto [it, inserted] = first_seen.try_emplace(v, EvalPoint{x, y});
      if (!inserted) {
        out.kind = EarlyPrimeOutcome::Kind::CollisionFirst;
        out.point = EvalPoint{x, y};
        out.value = std::move(v);
        out.first_point = it->second;
        out.steps = steps;
        return out;
      }
    }
  }
  out.kind = EarlyPrimeOutcome::Kind::Neither;
  out.points_scanned = steps;
  return out;
}

PrimeFreeReport verify_prime_free(const Polynomial& p, std::uint64_t bound, unsigned jobs) {
  require_bound(bound);
  PrimeFreeReport report;

  auto scan_rows = [&](std::uint64_t first_row, std::uint64_t stride,
                       const std::atomic<std::uint64_t>* best_row)
      -> std::optional<ValueWitness> {
    for (std::uint64_t x = first_row; x <= bound; x += stride) {
      if (best_row && x > best_row->load(std::memory_order_relaxed)) break;
      Nat xv(static_cast<unsigned long>(x));
      Nat yv = 1;
      for (std::uint64_t y = 1; y <= bound; ++y, ++yv) {
        Nat v = p.eval(xv, yv);
        if (is_prime(v)) return ValueWitness{{x, y}, std::move(v)};
      }
    }
    return std::nullopt;
  };

  std::optional<ValueWitness> found;
  if (jobs <= 1 || bound < 4) {
    found = scan_rows(1, 1, nullptr);
  } else {
    std::atomic<std::uint64_t> best_row{UINT64_MAX};
    std::vector<std::optional<ValueWitness>> results(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        auto r = scan_rows(t + 1, jobs, &best_row);
        if (r) {
          std::uint64_t cur = best_row.load(std::memory_order_relaxed);
          while (r->point.x < cur &&
                 !best_row.compare_exchange_weak(cur, r->point.x,
                                                 std::memory_order_relaxed)) {
          }
          results[t] = std::move(r);
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& r : results) {
      if (r && (!found || r->point < found->point)) found = r;
    }
  }

  if (found) {
    report.clean = false;
    report.points = (found->point.x - 1) * bound + found->point.y;  // lex index
    report.counterexample = std::move(found);
  } else {
    report.clean = true;
    report.points = bound * bound;
  }
  return report;
}

Nat grid_gcd(const Polynomial& p, std::uint64_t bound) {
  require_bound(bound);
  Nat g = 0;
  Nat xv = 1;
  for (std::uint64_t x = 1; x <= bound; ++x, ++xv) {
    Nat yv = 1;
    for (std::uint64_t y = 1; y <= bound; ++y, ++yv) {
      g = gcd(g, p.eval(xv, yv));
      if (g == 1) return g;
    }
  }
  return g;
}

}  // namespace primeveil
