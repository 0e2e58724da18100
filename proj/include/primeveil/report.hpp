#pragma once

#include <json.hpp>
#include <string>

#include "primeveil/certify.hpp"
#include "primeveil/claims.hpp"
#include "primeveil/search.hpp"

namespace primeveil::report {

using Json = nlohmann::ordered_json;

// Every integer in a report is a decimal string; downstream JSON consumers
// often round large numbers through doubles.
std::string dec(const Nat& n);
std::string dec(std::uint64_t n);

Json meta(const std::string& command);

Json witness_json(const ValueWitness& w);
Json tuple_json(const ObstructionTuple& t);
Json certificate_json(const Certificate& c);
Json claim_report_json(const ClaimReport& r);
Json minimal_obstruction_json(const MinimalObstructionReport& r);

Json certify_json(const std::string& canonical, bool univariate, const Nat& bound_B,
                  std::uint64_t sweep_bound, unsigned jobs, const CertifyOutcome& outcome);
Json search_json(const std::string& canonical, const Nat& bound_B, std::uint64_t bound,
                 const SearchOutcome& outcome);
Json early_json(const std::string& canonical, const Nat& bound_B, std::uint64_t bound,
                const EarlyPrimeOutcome& outcome);

Json error_json(const std::string& command, const std::string& kind,
                const std::string& message);

// Human-readable rendering of the same fields: one "path: value" line per
// scalar, arrays indexed, insertion order preserved.
std::string render_text(const Json& j);

// Re-verifies the witness values inside a certify report against fresh
// evaluation. Throws std::runtime_error describing the first mismatch.
void replay_verify(const Json& report);

}  // namespace primeveil::report
