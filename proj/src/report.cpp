#include "primeveil/report.hpp"

#include <stdexcept>

namespace primeveil::report {

namespace {

const char* violation_detail_name(ViolationDetail d) {
  return d == ViolationDetail::GcdOneNotAllEqual ? "gcd_one_not_all_equal"
                                                 : "equal_and_prime";
}

Json pairs_json(const std::vector<std::pair<std::string, Nat>>& pairs) {
  Json j = Json::object();
  for (const auto& [name, value] : pairs) j[name] = dec(value);
  return j;
}

}  // namespace

std::string dec(const Nat& n) { return n.get_str(); }
std::string dec(std::uint64_t n) { return std::to_string(n); }

Json meta(const std::string& command) {
  Json j = Json::object();
  j["tool"] = "primeveil";
  j["version"] = PRIMEVEIL_VERSION;
  j["schema_version"] = "1";
  j["command"] = command;
  return j;
}

Json witness_json(const ValueWitness& w) {
  Json j = Json::object();
  j["x"] = dec(w.point.x);
  j["y"] = dec(w.point.y);
  j["value"] = dec(w.value);
  return j;
}

Json tuple_json(const ObstructionTuple& t) {
  Json j = Json::object();
  j["a"] = dec(t.a);
  j["b"] = dec(t.b);
  j["c"] = dec(t.c);
  j["d"] = dec(t.d);
  j["x"] = dec(t.x);
  j["y"] = dec(t.y);
  j["f_ab"] = dec(t.u);
  j["f_cd"] = dec(t.v);
  j["f_xy"] = dec(t.w);
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j = Json::object();
  j["bound_B"] = dec(c.bound_B);
  j["tuples_checked"] = dec(c.tuples_checked);
  j["distinct_value_pairs"] = dec(c.distinct_value_pairs);
  j["sweep_bound"] = dec(c.sweep_bound);
  j["sweep_points"] = dec(c.sweep_points);
  j["primality_probabilistic"] = c.primality_probabilistic;
  return j;
}

Json claim_report_json(const ClaimReport& r) {
  Json j = Json::object();
  j["claim_id"] = r.claim_id;
  j["polynomial"] = r.polynomial;
  Json ranges = Json::object();
  for (const auto& [name, bound] : r.ranges) ranges[name] = dec(bound);
  j["ranges"] = ranges;
  j["checked"] = dec(r.checked);
  j["skipped"] = dec(r.skipped);
  j["status"] = claim_status_name(r.status);
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json c = Json::object();
    c["assignment"] = pairs_json(ce.assignment);
    c["values"] = pairs_json(ce.values);
    if (!ce.label.empty()) c["label"] = ce.label;
    ces.push_back(c);
  }
  j["counterexamples"] = ces;
  j["counterexamples_total"] = dec(r.counterexamples_total);
  return j;
}

Json minimal_obstruction_json(const MinimalObstructionReport& r) {
  Json j = Json::object();
  j["prime_free_bound"] = dec(r.prime_free_bound);
  j["summary"] = claim_report_json(r.summary);
  j["summary_both_vars"] = claim_report_json(r.summary_both_vars);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json ej = Json::object();
    ej["polynomial"] = e.polynomial;
    ej["depends_on_both"] = e.depends_on_both;
    ej["prime_free"] = e.prime_free;
    if (e.prime_witness) ej["prime_witness"] = witness_json(*e.prime_witness);
    if (e.prime_free) {
      if (e.obstruction) {
        Json oj = Json::object();
        oj["tuple"] = tuple_json(e.obstruction->tuple);
        oj["status"] = tuple_status_name(e.obstruction->status);
        ej["obstruction"] = oj;
      } else {
        ej["obstruction"] = nullptr;
      }
    }
    entries.push_back(ej);
  }
  j["entries"] = entries;
  return j;
}

Json certify_json(const std::string& canonical, bool univariate, const Nat& bound_B,
                  std::uint64_t sweep_bound, unsigned jobs, const CertifyOutcome& outcome) {
  Json j = meta("certify");
  j["polynomial"] = canonical;
  j["mode"] = univariate ? "univariate" : "bivariate";
  j["bound_B"] = dec(bound_B);
  j["sweep_bound"] = dec(sweep_bound);
  j["jobs"] = dec(static_cast<std::uint64_t>(jobs));
  j["verdict"] = verdict_name(outcome.verdict);
  switch (outcome.verdict) {
    case Verdict::PrimeFound:
      j["witness"] = witness_json(*outcome.witness);
      break;
    case Verdict::PrimeFree:
      j["certificate"] = certificate_json(*outcome.certificate);
      break;
    case Verdict::Inconclusive:
      if (outcome.violation) {
        j["violation"] = tuple_json(*outcome.violation);
      } else {
        const UnivariatePair& u = *outcome.violation_univariate;
        Json vj = Json::object();
        vj["a"] = dec(u.a);
        vj["x"] = dec(u.x);
        vj["f_a"] = dec(u.fa);
        vj["f_x"] = dec(u.fx);
        j["violation"] = vj;
      }
      j["violation_detail"] = violation_detail_name(*outcome.violation_detail);
      break;
  }
  return j;
}

Json search_json(const std::string& canonical, const Nat& bound_B, std::uint64_t bound,
                 const SearchOutcome& outcome) {
  Json j = meta("search");
  j["polynomial"] = canonical;
  j["bound_B"] = dec(bound_B);
  j["bound"] = dec(bound);
  if (outcome.kind == SearchOutcome::Kind::Prime) {
    j["outcome"] = "prime";
    j["witness"] = witness_json(*outcome.witness);
    j["steps"] = dec(outcome.steps);
  } else {
    j["outcome"] = "exhausted";
    j["points_scanned"] = dec(outcome.points_scanned);
    j["max_value_seen"] = dec(outcome.max_value_seen);
  }
  return j;
}

Json early_json(const std::string& canonical, const Nat& bound_B, std::uint64_t bound,
                const EarlyPrimeOutcome& outcome) {
  Json j = meta("early");
  j["polynomial"] = canonical;
  j["bound_B"] = dec(bound_B);
  j["bound"] = dec(bound);
  switch (outcome.kind) {
    case EarlyPrimeOutcome::Kind::PrimeFirst:
      j["outcome"] = "prime_first";
      j["witness"] = witness_json(*outcome.witness);
      j["steps"] = dec(outcome.steps);
      break;
    case EarlyPrimeOutcome::Kind::CollisionFirst: {
      j["outcome"] = "collision_first";
      Json cj = Json::object();
      cj["x"] = dec(outcome.point->x);
      cj["y"] = dec(outcome.point->y);
      cj["value"] = dec(outcome.value);
      cj["first_x"] = dec(outcome.first_point->x);
      cj["first_y"] = dec(outcome.first_point->y);
      j["collision"] = cj;
      j["steps"] = dec(outcome.steps);
      break;
    }
    case EarlyPrimeOutcome::Kind::Neither:
      j["outcome"] = "neither";
      j["points_scanned"] = dec(outcome.points_scanned);
      break;
  }
  return j;
}

Json error_json(const std::string& command, const std::string& kind,
                const std::string& message) {
  Json j = meta(command);
  Json e = Json::object();
  e["kind"] = kind;
  e["message"] = message;
  j["error"] = e;
  return j;
}

namespace {

void render_into(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      render_into(value, path, out);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      render_into(value, prefix + "[" + std::to_string(i) + "]", out);
      ++i;
    }
    if (j.empty()) out += prefix + ": []\n";
  } else {
    out += prefix + ": ";
    if (j.is_string()) {
      out += j.get<std::string>();
    } else {
      out += j.dump();
    }
    out += '\n';
  }
}

Nat nat_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw std::runtime_error("replay: missing field '" + key + "'");
  return Nat(j.at(key).get<std::string>());
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render_into(j, "", out);
  return out;
}

void replay_verify(const Json& rep) {
  if (!rep.contains("command") || rep.at("command") != "certify")
    throw std::runtime_error("replay: not a certify report");
  if (!rep.contains("polynomial"))
    throw std::runtime_error("replay: missing polynomial");
  Polynomial p = parse(rep.at("polynomial").get<std::string>());

  bool univariate = rep.value("mode", "bivariate") == std::string("univariate");
  Nat B = univariate ? p.eval(2, 1) : p.eval(2, 2);
  if (nat_field(rep, "bound_B") != B)
    throw std::runtime_error("replay: bound_B mismatch, recomputed " + B.get_str());

  std::string verdict = rep.value("verdict", "");
  if (verdict == "prime_found") {
    const Json& w = rep.at("witness");
    Nat x = nat_field(w, "x"), y = nat_field(w, "y"), value = nat_field(w, "value");
    if (p.eval(x, y) != value)
      throw std::runtime_error("replay: witness value does not match evaluation");
    if (!is_prime(value)) throw std::runtime_error("replay: witness value is not prime");
  } else if (verdict == "inconclusive") {
    const Json& v = rep.at("violation");
    if (univariate) {
      Nat a = nat_field(v, "a"), x = nat_field(v, "x");
      Nat fa = nat_field(v, "f_a"), fx = nat_field(v, "f_x");
      if (p.eval(a, 1) != fa || p.eval(x, 1) != fx)
        throw std::runtime_error("replay: violation values do not match evaluation");
      if (x + fa > B) throw std::runtime_error("replay: violation outside the bound");
      if (check_tuple(fa, fa, fx) != TupleStatus::Violation)
        throw std::runtime_error("replay: pair is not a violation");
    } else {
      Nat a = nat_field(v, "a"), b = nat_field(v, "b"), c = nat_field(v, "c");
      Nat d = nat_field(v, "d"), x = nat_field(v, "x"), y = nat_field(v, "y");
      Nat u = nat_field(v, "f_ab"), vv = nat_field(v, "f_cd"), w = nat_field(v, "f_xy");
      if (p.eval(a, b) != u || p.eval(c, d) != vv || p.eval(x, y) != w)
        throw std::runtime_error("replay: violation values do not match evaluation");
      if (x + u > B || y + vv > B)
        throw std::runtime_error("replay: violation outside the bound");
      if (check_tuple(u, vv, w) != TupleStatus::Violation)
        throw std::runtime_error("replay: tuple is not a violation");
    }
  } else if (verdict == "prime_free") {
    const Json& c = rep.at("certificate");
    if (nat_field(c, "bound_B") != B)
      throw std::runtime_error("replay: certificate bound_B mismatch");
    if (nat_field(c, "sweep_bound") < B)
      throw std::runtime_error("replay: sweep bound below B");
  } else {
    throw std::runtime_error("replay: unknown verdict '" + verdict + "'");
  }
}

}  // namespace primeveil::report
