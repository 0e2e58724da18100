#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primeveil/certify.hpp"
#include "primeveil/claims.hpp"
#include "primeveil/numeric.hpp"
#include "primeveil/poly.hpp"
#include "primeveil/report.hpp"
#include "primeveil/search.hpp"

namespace {

using namespace primeveil;
using Json = report::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string command;
  std::string poly_text;
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t b_cap = 4096;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> sweep_bound;
  std::uint64_t s4_bound = 4;
  std::uint64_t counterexample_cap = 10;
  bool univariate = false;
  bool require_both_vars = false;
  bool no_timing = false;
  std::string replay_path;
  std::string corpus_path;
  std::vector<std::string> claim_filter;
};

Limits make_limits(const Options& opt) {
  Limits limits;
  limits.b_cap = opt.b_cap;
  return limits;
}

std::uint64_t to_u64_bound(const Nat& n) {
  if (!mpz_fits_ulong_p(n.get_mpz_t()))
    throw ResourceLimitError("derived bound " + n.get_str() +
                             " is too large; pass --bound explicitly");
  return mpz_get_ui(n.get_mpz_t());
}

// default scan bound: B = f(2,2), subject to the cap
std::uint64_t default_bound(const Nat& B, const Options& opt) {
  if (opt.bound) return *opt.bound;
  if (B > Nat(static_cast<unsigned long>(opt.b_cap)))
    throw ResourceLimitError("f(2,2) = " + B.get_str() + " exceeds the cap " +
                             std::to_string(opt.b_cap) + "; pass --bound or raise --b-cap");
  return to_u64_bound(B);
}

bool claim_selected(const Options& opt, const std::string& id) {
  if (opt.claim_filter.empty()) return true;
  for (const auto& f : opt.claim_filter) {
    if (id == f || id.starts_with(f)) return true;
  }
  return false;
}

std::vector<Polynomial> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
  std::vector<Polynomial> corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    try {
      corpus.push_back(parse(line));
    } catch (const ParseError& e) {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (corpus.empty()) throw std::invalid_argument("corpus file has no polynomials");
  return corpus;
}

Json run_certify(const Options& opt) {
  if (!opt.replay_path.empty()) {
    std::string text;
    if (opt.replay_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(opt.replay_path);
      if (!in) throw std::invalid_argument("cannot open replay file: " + opt.replay_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    Json rep;
    try {
      rep = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("replay input is not valid JSON: ") + e.what());
    }
    report::replay_verify(rep);  // throws runtime_error on mismatch
    Json j = report::meta("certify");
    j["replay"] = "verified";
    j["polynomial"] = rep.value("polynomial", "");
    j["verdict"] = rep.value("verdict", "");
    return j;
  }

  Polynomial p = parse(opt.poly_text);
  CertifyOptions copts;
  copts.jobs = opt.jobs;
  copts.limits = make_limits(opt);
  copts.sweep_bound = opt.sweep_bound;
  CertifyOutcome outcome =
      opt.univariate ? certify_univariate(p, copts) : certify_bivariate(p, copts);
  Nat B = opt.univariate ? p.eval(2, 1) : p.eval(2, 2);
  std::uint64_t sweep = opt.sweep_bound ? *opt.sweep_bound : to_u64_bound(B);
  return report::certify_json(to_canonical_string(p), opt.univariate, B, sweep, opt.jobs,
                              outcome);
}

Json run_search(const Options& opt) {
  Polynomial p = parse(opt.poly_text);
  Nat B = p.eval(2, 2);
  std::uint64_t bound = default_bound(B, opt);
  SearchOutcome outcome = lex_search(p, bound);
  return report::search_json(to_canonical_string(p), B, bound, outcome);
}

Json run_early(const Options& opt) {
  Polynomial p = parse(opt.poly_text);
  Nat B = p.eval(2, 2);
  std::uint64_t bound = default_bound(B, opt);
  EarlyPrimeOutcome outcome = early_prime_check(p, bound);
  return report::early_json(to_canonical_string(p), B, bound, outcome);
}

Json run_claims(const Options& opt) {
  Json j = report::meta("claims");
  ClaimOptions copts;
  copts.counterexample_cap = opt.counterexample_cap;

  Json reports = Json::array();
  if (!opt.poly_text.empty()) {
    Polynomial p = parse(opt.poly_text);
    std::uint64_t bound = opt.bound.value_or(10);
    j["polynomial"] = to_canonical_string(p);
    j["bound_B"] = report::dec(p.eval(2, 2));
    j["bound"] = report::dec(bound);
    j["s4_bound"] = report::dec(opt.s4_bound);
    bool both = p.depends_on_x() && p.depends_on_y();
    j["depends_on_both"] = both;
    if (opt.require_both_vars) j["filtered_out"] = !both;

    bool want_shift = claim_selected(opt, "shift_lemma_1") ||
                      claim_selected(opt, "shift_lemma_2") ||
                      claim_selected(opt, "shift_lemma_3");
    if (want_shift) {
      for (auto& r : check_shift_lemma(p, bound, copts))
        if (claim_selected(opt, r.claim_id)) reports.push_back(report::claim_report_json(r));
    }
    if (claim_selected(opt, "composition_a") || claim_selected(opt, "composition_b")) {
      for (auto& r : check_composition(p, bound, copts))
        if (claim_selected(opt, r.claim_id)) reports.push_back(report::claim_report_json(r));
    }
    bool want_coprime = false;
    for (int i = 1; i <= 4; ++i)
      want_coprime |= claim_selected(opt, "coprime_" + std::to_string(i));
    if (want_coprime) {
      for (auto& r : check_corollary_m(p, bound, opt.s4_bound, copts))
        if (claim_selected(opt, r.claim_id)) reports.push_back(report::claim_report_json(r));
    }
    if (claim_selected(opt, "gcd_composite") || claim_selected(opt, "gcd_implication")) {
      for (auto& r : check_gcd_theorems(p, bound, copts))
        if (claim_selected(opt, r.claim_id)) reports.push_back(report::claim_report_json(r));
    }
  }
  j["reports"] = reports;

  if (!opt.corpus_path.empty() && claim_selected(opt, "minimal_obstruction")) {
    std::vector<Polynomial> corpus = load_corpus(opt.corpus_path);
    std::uint64_t pf_bound = opt.bound.value_or(100);
    MinimalObstructionReport mo =
        check_minimal_obstruction(corpus, pf_bound, copts, make_limits(opt));
    j["minimal_obstruction"] = report::minimal_obstruction_json(mo);
    j["require_both_vars"] = opt.require_both_vars;
  }
  return j;
}

Json run_analyze(const Options& opt) {
  Polynomial p = parse(opt.poly_text);
  Nat B = p.eval(2, 2);
  std::uint64_t bound = default_bound(B, opt);
  Limits limits = make_limits(opt);

  Json j = report::meta("analyze");
  j["polynomial"] = to_canonical_string(p);
  j["d1"] = report::dec(static_cast<std::uint64_t>(p.degree_x()));
  j["d2"] = report::dec(static_cast<std::uint64_t>(p.degree_y()));
  j["term_count"] = report::dec(static_cast<std::uint64_t>(p.terms().size()));
  j["bound_B"] = report::dec(B);
  if (!p.depends_on_y()) j["univariate_bound"] = report::dec(p.eval(2, 1));

  Json gg = Json::object();
  gg["bound"] = report::dec(bound);
  gg["value"] = report::dec(grid_gcd(p, bound));
  j["grid_gcd"] = gg;

  PrimeFreeReport pf = verify_prime_free(p, bound, opt.jobs);
  Json pj = Json::object();
  pj["bound"] = report::dec(bound);
  pj["clean"] = pf.clean;
  if (pf.counterexample) pj["witness"] = report::witness_json(*pf.counterexample);
  pj["points"] = report::dec(pf.points);
  j["prime_scan"] = pj;

  {
    Json vj = Json::object();
    Nat cap = B - 1;
    std::vector<ValueWitness> values = values_upto(p, cap, limits);
    vj["cap"] = report::dec(cap);
    vj["count"] = report::dec(static_cast<std::uint64_t>(values.size()));
    Json first = Json::array();
    for (std::size_t i = 0; i < values.size() && i < 10; ++i)
      first.push_back(report::witness_json(values[i]));
    vj["first"] = first;
    j["values_upto"] = vj;
  }

  auto specialization = [&](Var var) {
    Json s = Json::object();
    try {
      Polynomial q = specialize(p, var, 1);
      s["ok"] = true;
      s["polynomial"] = to_canonical_string(q);
    } catch (const ConstantTermError& e) {
      s["ok"] = false;
      s["error"] = e.what();
    }
    return s;
  };
  j["specialize_y_1"] = specialization(Var::Y);
  j["specialize_x_1"] = specialization(Var::X);
  return j;
}

std::uint64_t g_prob_answers_at_start = 0;

int emit(const Options& opt, Json j, int code,
         std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  j["primality_probabilistic"] =
      probabilistic_primality_answers() > g_prob_answers_at_start;
  j["wall_ms"] = opt.no_timing ? "0" : std::to_string(ms);
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report::render_text(j);
  }
  return code;
}

int emit_error(const Options& opt, const std::string& kind, const std::string& message,
               int code, std::chrono::steady_clock::time_point start) {
  if (opt.format == "json") {
    Json j = report::error_json(opt.command, kind, message);
    return emit(opt, std::move(j), code, start);
  }
  std::cerr << "error (" << kind << "): " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("PRIMEVEIL_B_CAP")) {
    try {
      opt.b_cap = std::stoull(env);
    } catch (...) {
      std::cerr << "error (usage): PRIMEVEIL_B_CAP is not a number\n";
      return kExitInput;
    }
  }

  CLI::App app{"gcd-obstruction certificates and prime search for positive "
               "bivariate polynomials without constant terms"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub, bool needs_poly) {
    auto* poly_opt = sub->add_option("--poly", opt.poly_text, "polynomial, e.g. \"4*x*y\"");
    if (needs_poly) poly_opt->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--b-cap", opt.b_cap, "cap on the tuple bound f(2,2)")
        ->capture_default_str();
    sub->add_flag("--no-timing", opt.no_timing, "report wall_ms as 0 for byte-stable output");
    return sub;
  };

  auto* certify = add_common(app.add_subcommand("certify", "run the obstruction certificate"),
                             false);
  certify->add_option("--sweep-bound", opt.sweep_bound,
                      "exhaustive prime sweep bound (default f(2,2), or f(2))");
  certify->add_flag("--univariate", opt.univariate,
                    "use the univariate condition; requires a polynomial in x only");
  certify->add_option("--replay", opt.replay_path,
                      "re-verify a JSON certify report ('-' reads stdin)");

  auto* search = add_common(app.add_subcommand("search", "bounded lexicographic prime search"),
                            true);
  search->add_option("--bound", opt.bound, "scan bound (default f(2,2))");

  auto* early = add_common(
      app.add_subcommand("early", "first event: prime value or repeated value"), true);
  early->add_option("--bound", opt.bound, "scan bound (default f(2,2))");

  auto* claims = add_common(
      app.add_subcommand("claims", "bounded falsification lab for the supporting claims"),
      false);
  claims->add_option("--bound", opt.bound, "range bound per variable (default 10; corpus: 100)");
  claims->add_option("--claim", opt.claim_filter,
                     "claim id filter (prefix match), e.g. shift_lemma_3");
  claims->add_option("--corpus,--seed-corpus", opt.corpus_path,
                     "newline-delimited polynomial file for minimal_obstruction");
  claims->add_option("--s4-bound", opt.s4_bound, "bound for the six-variable statement 4")
      ->capture_default_str();
  claims->add_option("--counterexample-cap", opt.counterexample_cap,
                     "max counterexamples kept per claim")
      ->capture_default_str();
  claims->add_flag("--require-both-vars", opt.require_both_vars,
                   "additionally report results restricted to genuinely bivariate inputs");

  auto* analyze = add_common(
      app.add_subcommand("analyze", "structure, fixed divisor, and small-value panel"), true);
  analyze->add_option("--bound", opt.bound, "grid bound (default f(2,2))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  opt.command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  g_prob_answers_at_start = probabilistic_primality_answers();

  try {
    if (opt.command == "certify") {
      if (opt.replay_path.empty() && opt.poly_text.empty())
        throw std::invalid_argument("--poly is required unless --replay is given");
      return emit(opt, run_certify(opt), kExitOk, start);
    }
    if (opt.command == "search") return emit(opt, run_search(opt), kExitOk, start);
    if (opt.command == "early") return emit(opt, run_early(opt), kExitOk, start);
    if (opt.command == "claims") {
      if (opt.poly_text.empty() && opt.corpus_path.empty())
        throw std::invalid_argument("claims needs --poly and/or --corpus");
      return emit(opt, run_claims(opt), kExitOk, start);
    }
    if (opt.command == "analyze") return emit(opt, run_analyze(opt), kExitOk, start);
    throw std::invalid_argument("unknown command");
  } catch (const ParseError& e) {
    if (opt.format == "json") {
      Json j = report::error_json(opt.command, "parse_error", e.what());
      j["error"]["parse_kind"] = parse_error_kind_name(e.kind());
      j["error"]["offset"] = std::to_string(e.offset());
      return emit(opt, std::move(j), kExitInput, start);
    }
    return emit_error(opt,
                      std::string("parse_error/") + parse_error_kind_name(e.kind()),
                      e.what(), kExitInput, start);
  } catch (const ConstantTermError& e) {
    return emit_error(opt, "constant_term", e.what(), kExitInput, start);
  } catch (const NotUnivariateError& e) {
    return emit_error(opt, "not_univariate", e.what(), kExitInput, start);
  } catch (const ResourceLimitError& e) {
    return emit_error(opt, "resource_limit", e.what(), kExitResource, start);
  } catch (const InternalError& e) {
    return emit_error(opt, "internal", e.what(), kExitInternal, start);
  } catch (const std::invalid_argument& e) {
    return emit_error(opt, "usage", e.what(), kExitInput, start);
  } catch (const std::runtime_error& e) {
    // replay mismatches land here: the report contradicts fresh evaluation
    return emit_error(opt, "replay_failed", e.what(), kExitInternal, start);
  }
}
