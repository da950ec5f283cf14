#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "drazin/generate.hpp"

namespace drazin {

/// One failed trial: the exact generation spec, the instance it
/// produced, and the first certificate that did not hold.  Re-parsing
/// the instance and re-running the suite check reproduces the failure.
struct TrialFailure {
    std::size_t trial_index = 0;
    std::uint64_t trial_seed = 0;
    std::size_t size = 0;
    long entry_bound = 0;
    std::string kind;
    NamedMatrices instance;
    std::string failed_certificate;
};

/// Outcome of one suite run.  passes + failures.size() == trials.
struct TheoremReport {
    std::string theorem_id;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::vector<TrialFailure> failures;
    std::int64_t elapsed_ms = 0;
    // run parameters, echoed so a report alone suffices to replay
    std::uint64_t seed = 0;
    std::vector<std::size_t> sizes;
    long entry_bound = 3;
};

/// The documented suite identifiers, in canonical order.
const std::vector<std::string>& theorem_ids();

bool is_theorem_id(const std::string& id);

/// Generate the named instance tuple for one trial of a suite.  The
/// kind field of the spec is ignored; each suite draws what it needs
/// from the seed.
NamedMatrices suite_generate(const std::string& theorem_id, const GenSpec& spec);

/// Run the suite's certified check on an instance; returns the first
/// failed certificate name, empty on a pass.  Pure in the instance, so
/// dumped counterexamples replay without the generator.
std::string suite_check(const std::string& theorem_id,
                        const NamedMatrices& instance);

/// Run `trials` seeded trials, cycling through `sizes`.  Trial i draws
/// its seed as derive_seed(seed, i).  Unknown identifiers throw
/// DomainError.  "negative-control" is accepted here (a suite whose
/// certificate always fails, for exercising the failure path) but is
/// not part of theorem_ids().
TheoremReport run_suite(const std::string& theorem_id, std::size_t trials,
                        const std::vector<std::size_t>& sizes,
                        std::uint64_t seed, long entry_bound);

nlohmann::ordered_json report_to_json(const TheoremReport& report);

nlohmann::ordered_json failure_to_json(const TrialFailure& failure);

} // namespace drazin
