#ifndef FCS_VERDICT_HPP
#define FCS_VERDICT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcs/lattice.hpp"

namespace fcs {

/// Structured evidence attached to a Verdict: labeled points and sets that
/// re-fail (or certify) the axiom instance when replayed.
struct Witness {
    std::vector<std::pair<std::string, FuzzyPoint>> points;
    std::vector<std::pair<std::string, FuzzySet>> sets;
};

struct Verdict {
    std::string axiom;
    bool holds = false;
    std::optional<Witness> witness; // counterexample when !holds
};

} // namespace fcs

#endif
