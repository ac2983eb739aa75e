#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace oddchi::cli {

// lemma1, rayleigh, cosine-gap, region, inequality12, cross-method.
const std::vector<std::string>& suite_names();

/// Runs the named suites ("all" expands to every suite) and returns the
/// report. Checks run on up to `jobs` threads and are merged in a fixed
/// order, so the report does not depend on `jobs`.
/// Throws DomainError for an unknown suite name.
nlohmann::ordered_json run_verify_suites(const std::vector<std::string>& suites,
                                         std::uint64_t seed, int jobs);

}  // namespace oddchi::cli
