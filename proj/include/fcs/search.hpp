#ifndef FCS_SEARCH_HPP
#define FCS_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcs/io.hpp"
#include "fcs/parallel.hpp"

namespace fcs {

struct SearchBounds {
    int max_n = 3;
    int max_d = 1;
    bool include_tables = false; // additionally scan table-variant operators
};

struct SearchOutcome {
    std::string property;
    bool found = false;
    std::optional<ordered_json> witness; // space document + verdicts
    std::uint64_t spaces_checked = 0;
    SearchBounds bounds;
};

/// Registered implications whose counterexamples are worth hunting:
///   t0_implies_t1, t1_implies_t2, t2_implies_urysohn, urysohn_implies_regular,
///   regular_implies_ts, regular_implies_normal, normal_implies_regular,
///   tau_normal_implies_normal
std::vector<std::string> search_property_names();

/// Scans point-generated spaces for n = 1..max_n, d = 1..max_d in enumeration
/// order and returns the first space satisfying the antecedent but not the
/// consequent, or an exhaustion outcome. Parallel scans return the same
/// witness as serial ones.
SearchOutcome search_counterexample(const std::string& property, const SearchBounds& bounds,
                                    const ExecPolicy& policy);

} // namespace fcs

#endif
