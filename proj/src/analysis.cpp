#include "fcs/analysis.hpp"

#include "fcs/errors.hpp"

namespace fcs {

SpaceAnalysis::SpaceAnalysis(const FuzzyClosureSpace& s)
    : space_(&s), enumeration_(s.universe(), s.chain()) {
    s.require_validated();
    const std::uint64_t n = enumeration_.size();
    if (n > UINT32_MAX) throw ResourceError("carrier too large for rank tables");
    sets_.reserve(n);
    closure_rank_.resize(n);
    interior_rank_.resize(n);
    complement_rank_.resize(n);
    for (std::uint64_t r = 0; r < n; ++r) sets_.push_back(enumeration_.at(r));
    for (std::uint64_t r = 0; r < n; ++r) {
        closure_rank_[r] = static_cast<std::uint32_t>(enumeration_.rank_of(s.closure(sets_[r])));
        complement_rank_[r] = static_cast<std::uint32_t>(enumeration_.rank_of(sets_[r].complement()));
    }
    for (std::uint64_t r = 0; r < n; ++r)
        interior_rank_[r] = complement_rank_[closure_rank_[complement_rank_[r]]];

    point_closures_.resize(s.universe().size());
    for (int e = 0; e < s.universe().size(); ++e) {
        point_closures_[e].reserve(s.chain().denominator());
        for (int k = 1; k <= s.chain().denominator(); ++k)
            point_closures_[e].push_back(s.closure(FuzzyPoint(s.universe(), s.chain(), e, k)));
    }
}

} // namespace fcs
