#ifndef FCS_SUITE_HPP
#define FCS_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fcs/io.hpp"
#include "fcs/parallel.hpp"

namespace fcs {

struct SuiteConfig {
    int exhaustive_n = 2;
    int exhaustive_d = 2;
    int random_n = 3;
    int random_d = 4;
    int samples = 500;
    std::uint64_t seed = 0;
    std::vector<std::string> theorems; // empty = all registered
    ExecPolicy policy;

    // Secondary sample sizes; the defaults match the documented tiers.
    int map_samples = 100;
    int bijection_samples = 50;
    int sum_sample = 30;
    int product_pairs = 50;
    int micro_random = 100;
};

struct TheoremResult {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<ordered_json> failures; // replayable space documents + context
    ordered_json info;                  // deterministic extra observations
    double wall_ms = 0;                 // never serialized into the report
    bool passed() const { return failures.empty(); }
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<TheoremResult> results;
    bool passed = true;
};

std::vector<std::string> theorem_names();

/// Runs every selected theorem over the exhaustive tier (all point-generated
/// spaces at the exhaustive bounds), the seeded random tier, and the derived
/// map/sum/product domains. Identical config and seed give an identical
/// report; parallel and serial policies agree.
SuiteReport run_theorem_suite(const SuiteConfig& cfg);

/// Deterministic JSON form (excludes wall-clock timings).
ordered_json suite_report_to_json(const SuiteReport& report);

} // namespace fcs

#endif
