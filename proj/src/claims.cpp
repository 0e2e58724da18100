#include "primeveil/claims.hpp"

#include <stdexcept>

#include "primeveil/search.hpp"

namespace primeveil {

const char* claim_status_name(ClaimStatus s) {
  return s == ClaimStatus::Upheld ? "upheld" : "falsified";
}

namespace {

Nat nat(std::uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

bool divides(std::uint64_t e, const Nat& v) {
  return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(e)) != 0;
}

struct Builder {
  ClaimReport report;
  std::uint64_t cap;

  Builder(std::string id, const Polynomial& p,
          std::vector<std::pair<std::string, std::uint64_t>> ranges, std::uint64_t cap_in)
      : cap(cap_in) {
    report.claim_id = std::move(id);
    report.polynomial = to_canonical_string(p);
    report.ranges = std::move(ranges);
  }

  void counterexample(Counterexample ce) {
    report.status = ClaimStatus::Falsified;
    ++report.counterexamples_total;
    if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(ce));
  }
};

void require_bound(std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
}

// f(x, y) for x in [1, xmax], y in [1, ymax], fully materialized
std::vector<std::vector<Nat>> value_grid(const Polynomial& p, std::uint64_t xmax,
                                         std::uint64_t ymax) {
  std::vector<std::vector<Nat>> g(xmax + 1);
  for (std::uint64_t x = 1; x <= xmax; ++x) {
    g[x].reserve(ymax);
    Nat xv = nat(x);
    for (std::uint64_t y = 1; y <= ymax; ++y) g[x].push_back(p.eval(xv, nat(y)));
  }
  return g;
}

const Nat& grid_at(const std::vector<std::vector<Nat>>& g, std::uint64_t x, std::uint64_t y) {
  return g[x][y - 1];
}

}  // namespace

std::array<ClaimReport, 3> check_shift_lemma(const Polynomial& p, std::uint64_t bound,
                                             const ClaimOptions& opts) {
  require_bound(bound);
  std::vector<std::pair<std::string, std::uint64_t>> ranges = {
      {"e", bound}, {"a", bound}, {"x", bound}, {"y", bound}};
  Builder part1("shift_lemma_1", p, ranges, opts.counterexample_cap);
  Builder part2("shift_lemma_2", p, ranges, opts.counterexample_cap);
  Builder part3("shift_lemma_3", p, ranges, opts.counterexample_cap);

  // f needed on y in [1, 2*bound] for the positive shift
  auto grid = value_grid(p, bound, 2 * bound);

  auto record = [&](Builder& b, std::uint64_t e, std::uint64_t a, std::uint64_t x,
                    std::uint64_t y, const char* shifted_name, const Nat& shifted,
                    const Nat& base, const char* label) {
    Counterexample ce;
    ce.assignment = {{"e", nat(e)}, {"a", nat(a)}, {"x", nat(x)}, {"y", nat(y)}};
    ce.values = {{shifted_name, shifted}, {"f(x,y)", base}};
    ce.label = label;
    b.counterexample(std::move(ce));
  };

  for (std::uint64_t e = 1; e <= bound; ++e) {
    for (std::uint64_t a = 1; a <= bound; ++a) {
      bool e_div_a = (a % e) == 0;
      for (std::uint64_t x = 1; x <= bound; ++x) {
        for (std::uint64_t y = 1; y <= bound; ++y) {
          const Nat& base = grid_at(grid, x, y);
          bool e_div_base = divides(e, base);

          const Nat& up = grid_at(grid, x, y + a);
          bool e_div_up = divides(e, up);
          part1.report.checked++;
          part2.report.checked++;
          part3.report.checked++;
          if (e_div_up && e_div_a && !e_div_base)
            record(part1, e, a, x, y, "f(x,y+a)", up, base, "+a");
          if (e_div_base && e_div_a && !e_div_up)
            record(part2, e, a, x, y, "f(x,y+a)", up, base, "+a");
          if (e_div_up && e_div_base && !e_div_a)
            record(part3, e, a, x, y, "f(x,y+a)", up, base, "+a");

          if (y > a) {  // negative shift, y - a >= 1
            const Nat& down = grid_at(grid, x, y - a);
            bool e_div_down = divides(e, down);
            part1.report.checked++;
            part2.report.checked++;
            part3.report.checked++;
            if (e_div_down && e_div_a && !e_div_base)
              record(part1, e, a, x, y, "f(x,y-a)", down, base, "-a");
            if (e_div_base && e_div_a && !e_div_down)
              record(part2, e, a, x, y, "f(x,y-a)", down, base, "-a");
            if (e_div_down && e_div_base && !e_div_a)
              record(part3, e, a, x, y, "f(x,y-a)", down, base, "-a");
          }
        }
      }
    }
  }
  return {std::move(part1.report), std::move(part2.report), std::move(part3.report)};
}

std::array<ClaimReport, 2> check_composition(const Polynomial& p, std::uint64_t bound,
                                             const ClaimOptions& opts) {
  require_bound(bound);
  Builder claim_a("composition_a", p, {{"a", bound}, {"b", bound}}, opts.counterexample_cap);
  Builder claim_b("composition_b", p, {{"x", bound}}, opts.counterexample_cap);

  for (std::uint64_t a = 1; a <= bound; ++a) {
    Nat av = nat(a);
    for (std::uint64_t b = 1; b <= bound; ++b) {
      claim_a.report.checked++;
      Nat v = p.eval(av, nat(b));
      Nat self = p.eval(v, v);
      if (is_prime(self)) {
        Counterexample ce;
        ce.assignment = {{"a", av}, {"b", nat(b)}};
        ce.values = {{"f(a,b)", v}, {"f(f(a,b),f(a,b))", self}};
        claim_a.counterexample(std::move(ce));
      }
    }
  }

  for (std::uint64_t x = 1; x <= bound; ++x) {
    Nat xv = nat(x);
    Nat w = p.eval(xv, 0);  // y = 0 is allowed for this claim only
    if (w == 0) {
      claim_b.report.skipped++;
      continue;
    }
    claim_b.report.checked++;
    Nat self = p.eval(xv, w);
    if (is_prime(self)) {
      Counterexample ce;
      ce.assignment = {{"x", xv}};
      ce.values = {{"f(x,0)", w}, {"f(x,f(x,0))", self}};
      claim_b.counterexample(std::move(ce));
    }
  }
  return {std::move(claim_a.report), std::move(claim_b.report)};
}

std::array<ClaimReport, 4> check_corollary_m(const Polynomial& p, std::uint64_t bound,
                                             std::uint64_t statement4_bound,
                                             const ClaimOptions& opts) {
  require_bound(bound);
  require_bound(statement4_bound);
  Builder s1("coprime_1", p, {{"x", bound}, {"y", bound}, {"b", bound}},
             opts.counterexample_cap);
  Builder s2("coprime_2", p, {{"x", bound}, {"y", bound}, {"a", bound}, {"b", bound}},
             opts.counterexample_cap);
  Builder s3("coprime_3", p, {{"x", bound}, {"b", bound}}, opts.counterexample_cap);
  Builder s4("coprime_4", p,
             {{"x", statement4_bound},
              {"a", statement4_bound},
              {"b", statement4_bound},
              {"y", statement4_bound},
              {"c", statement4_bound},
              {"d", statement4_bound}},
             opts.counterexample_cap);

  auto grid = value_grid(p, bound, bound);

  // statement 1: variables in order of appearance x, y, b
  for (std::uint64_t x = 1; x <= bound; ++x) {
    Nat xv = nat(x);
    for (std::uint64_t y = 1; y <= bound; ++y) {
      for (std::uint64_t b = 1; b <= bound; ++b) {
        s1.report.checked++;
        const Nat& fxb = grid_at(grid, x, b);
        const Nat& fxy = grid_at(grid, x, y);
        Nat shifted = p.eval(xv, nat(y) + fxb);
        if (is_prime(shifted) || is_prime(fxy) || is_prime(fxb)) {
          if (gcd(shifted, fxy) != 1 || gcd(shifted, fxb) != 1 || gcd(fxy, fxb) != 1) {
            Counterexample ce;
            ce.assignment = {{"x", xv}, {"y", nat(y)}, {"b", nat(b)}};
            ce.values = {{"f(x,y+f(x,b))", shifted}, {"f(x,y)", fxy}, {"f(x,b)", fxb}};
            s1.counterexample(std::move(ce));
          }
        }
      }
    }
  }

  // statement 2: x, y, a, b
  for (std::uint64_t x = 1; x <= bound; ++x) {
    Nat xv = nat(x);
    for (std::uint64_t y = 1; y <= bound; ++y) {
      const Nat& fxy = grid_at(grid, x, y);
      for (std::uint64_t a = 1; a <= bound; ++a) {
        for (std::uint64_t b = 1; b <= bound; ++b) {
          s2.report.checked++;
          const Nat& fab = grid_at(grid, a, b);
          Nat shifted = p.eval(xv, nat(y) + fab);
          if (!is_prime(shifted)) continue;
          bool ok = gcd(fxy, fab) == 1 || (fxy == fab && is_prime(fxy));
          if (!ok) {
            Counterexample ce;
            ce.assignment = {{"x", xv}, {"y", nat(y)}, {"a", nat(a)}, {"b", nat(b)}};
            ce.values = {{"f(x,y+f(a,b))", shifted}, {"f(x,y)", fxy}, {"f(a,b)", fab}};
            ce.label = "main";
            s2.counterexample(std::move(ce));
          }
          if (y == x && gcd(nat(b), nat(y)) != 1) {
            Counterexample ce;
            ce.assignment = {{"x", xv}, {"y", nat(y)}, {"a", nat(a)}, {"b", nat(b)}};
            ce.values = {{"f(x,y+f(a,b))", shifted}, {"gcd(b,y)", gcd(nat(b), nat(y))}};
            ce.label = "y=x subclause";
            s2.counterexample(std::move(ce));
          }
        }
      }
    }
  }

  // statement 3: x, b
  for (std::uint64_t x = 1; x <= bound; ++x) {
    Nat xv = nat(x);
    for (std::uint64_t b = 1; b <= bound; ++b) {
      s3.report.checked++;
      const Nat& fxb = grid_at(grid, x, b);
      Nat shifted = p.eval(xv, nat(b) + fxb);
      if (is_prime(shifted) && !is_prime(fxb)) {
        Counterexample ce;
        ce.assignment = {{"x", xv}, {"b", nat(b)}};
        ce.values = {{"f(x,b+f(x,b))", shifted}, {"f(x,b)", fxb}};
        s3.counterexample(std::move(ce));
      }
    }
  }

  // statement 4: x, a, b, y, c, d at its own bound
  auto grid4 = value_grid(p, statement4_bound, statement4_bound);
  for (std::uint64_t x = 1; x <= statement4_bound; ++x) {
    for (std::uint64_t a = 1; a <= statement4_bound; ++a) {
      for (std::uint64_t b = 1; b <= statement4_bound; ++b) {
        const Nat& fab = grid_at(grid4, a, b);
        Nat shifted_x = nat(x) + fab;
        for (std::uint64_t y = 1; y <= statement4_bound; ++y) {
          const Nat& fxy = grid_at(grid4, x, y);
          for (std::uint64_t c = 1; c <= statement4_bound; ++c) {
            for (std::uint64_t d = 1; d <= statement4_bound; ++d) {
              s4.report.checked++;
              const Nat& fcd = grid_at(grid4, c, d);
              Nat outer = p.eval(shifted_x, nat(y) + fcd);
              if (!is_prime(outer)) continue;
              bool ok = gcd3(fxy, fab, fcd) == 1 ||
                        (fxy == fab && fab == fcd && is_prime(fxy));
              if (!ok) {
                Counterexample ce;
                ce.assignment = {{"x", nat(x)}, {"a", nat(a)}, {"b", nat(b)},
                                 {"y", nat(y)}, {"c", nat(c)}, {"d", nat(d)}};
                ce.values = {{"f(x+f(a,b),y+f(c,d))", outer},
                             {"f(x,y)", fxy},
                             {"f(a,b)", fab},
                             {"f(c,d)", fcd}};
                ce.label = "main";
                s4.counterexample(std::move(ce));
              }
              if (a == x && b == y) {
                Nat g4 = gcd(gcd(nat(x), nat(y)), gcd(nat(c), nat(d)));
                if (g4 != 1) {
                  Counterexample ce;
                  ce.assignment = {{"x", nat(x)}, {"a", nat(a)}, {"b", nat(b)},
                                   {"y", nat(y)}, {"c", nat(c)}, {"d", nat(d)}};
                  ce.values = {{"f(x+f(a,b),y+f(c,d))", outer}, {"gcd(x,y,c,d)", g4}};
                  ce.label = "a=x,b=y subclause";
                  s4.counterexample(std::move(ce));
                }
              }
            }
          }
        }
      }
    }
  }

  return {std::move(s1.report), std::move(s2.report), std::move(s3.report),
          std::move(s4.report)};
}

std::array<ClaimReport, 2> check_gcd_theorems(const Polynomial& p, std::uint64_t bound,
                                              const ClaimOptions& opts) {
  require_bound(bound);
  Builder claim_a("gcd_composite", p, {{"x", bound}, {"y", bound}}, opts.counterexample_cap);
  Builder claim_b("gcd_implication", p, {{"a", bound}, {"b", bound}}, opts.counterexample_cap);

  for (std::uint64_t x = 1; x <= bound; ++x) {
    Nat xv = nat(x);
    for (std::uint64_t y = 1; y <= bound; ++y) {
      claim_a.report.checked++;
      Nat v = p.eval(xv, nat(y));
      Nat g = gcd(xv, nat(y));
      // divisibility form is a theorem for this class; failing it is a bug
      if (!mpz_divisible_p(v.get_mpz_t(), g.get_mpz_t()))
        throw InternalError("gcd(x,y) does not divide f(x,y)");
      if (g > 1 && is_prime(v)) {
        Counterexample ce;
        ce.assignment = {{"x", xv}, {"y", nat(y)}};
        ce.values = {{"gcd(x,y)", g}, {"f(x,y)", v}};
        claim_a.counterexample(std::move(ce));
      }
    }
  }

  for (std::uint64_t a = 1; a <= bound; ++a) {
    Nat av = nat(a);
    for (std::uint64_t b = 1; b <= bound; ++b) {
      claim_b.report.checked++;
      Nat v = p.eval(av, nat(b));
      if (gcd(av, v) == 1 && gcd(av, nat(b)) != 1) {
        Counterexample ce;
        ce.assignment = {{"a", av}, {"b", nat(b)}};
        ce.values = {{"f(a,b)", v}, {"gcd(a,f(a,b))", gcd(av, v)}, {"gcd(a,b)", gcd(av, nat(b))}};
        claim_b.counterexample(std::move(ce));
      }
    }
  }
  return {std::move(claim_a.report), std::move(claim_b.report)};
}

MinimalObstructionReport check_minimal_obstruction(const std::vector<Polynomial>& corpus,
                                                   std::uint64_t prime_free_bound,
                                                   const ClaimOptions& opts,
                                                   const Limits& limits) {
  if (corpus.empty()) throw std::invalid_argument("corpus must not be empty");
  require_bound(prime_free_bound);

  MinimalObstructionReport out;
  out.prime_free_bound = prime_free_bound;
  out.summary.claim_id = "minimal_obstruction";
  out.summary.ranges = {{"prime_free_bound", prime_free_bound}};
  out.summary_both_vars.claim_id = "minimal_obstruction_both_vars";
  out.summary_both_vars.ranges = {{"prime_free_bound", prime_free_bound}};

  std::uint64_t index = 0;
  for (const Polynomial& p : corpus) {
    MinimalObstructionEntry entry;
    entry.polynomial = to_canonical_string(p);
    entry.depends_on_both = p.depends_on_x() && p.depends_on_y();

    PrimeFreeReport pf = verify_prime_free(p, prime_free_bound);
    entry.prime_free = pf.clean;
    if (!pf.clean) {
      entry.prime_witness = pf.counterexample;
      out.summary.skipped++;
      if (entry.depends_on_both) out.summary_both_vars.skipped++;
    } else {
      entry.obstruction = find_first_obstruction(p, limits);
      out.summary.checked++;
      if (entry.depends_on_both) out.summary_both_vars.checked++;
      if (!entry.obstruction) {
        Counterexample ce;
        ce.assignment = {{"polynomial_index", nat(index)}};
        ce.label = entry.polynomial;
        out.summary.status = ClaimStatus::Falsified;
        out.summary.counterexamples_total++;
        if (out.summary.counterexamples.size() < opts.counterexample_cap)
          out.summary.counterexamples.push_back(ce);
        if (entry.depends_on_both) {
          out.summary_both_vars.status = ClaimStatus::Falsified;
          out.summary_both_vars.counterexamples_total++;
          if (out.summary_both_vars.counterexamples.size() < opts.counterexample_cap)
            out.summary_both_vars.counterexamples.push_back(ce);
        }
      }
    }
    out.entries.push_back(std::move(entry));
    ++index;
  }
  return out;
}

}  // namespace primeveil
