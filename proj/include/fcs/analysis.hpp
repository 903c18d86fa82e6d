#ifndef FCS_ANALYSIS_HPP
#define FCS_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "fcs/closure.hpp"

namespace fcs {

/// Rank-indexed closure and interior tables for one space. Deciders build one
/// of these up front so their quantifier loops are table lookups. Purely
/// local, never shared.
class SpaceAnalysis {
public:
    explicit SpaceAnalysis(const FuzzyClosureSpace& s);

    const FuzzyClosureSpace& space() const { return *space_; }
    std::uint64_t carrier() const { return sets_.size(); }

    const FuzzySet& set_at(std::uint64_t rank) const { return sets_[rank]; }
    const FuzzySet& closure_of(std::uint64_t rank) const { return sets_[closure_rank_[rank]]; }
    const FuzzySet& interior_of(std::uint64_t rank) const { return sets_[interior_rank_[rank]]; }
    std::uint64_t complement_rank(std::uint64_t rank) const { return complement_rank_[rank]; }

    std::uint64_t rank_of(const FuzzySet& f) const { return enumeration_.rank_of(f); }
    const FuzzySet& closure_of(const FuzzySet& f) const { return closure_of(rank_of(f)); }
    const FuzzySet& interior_of(const FuzzySet& f) const { return interior_of(rank_of(f)); }

    /// Closure of the point at (element, level k), precomputed.
    const FuzzySet& point_closure(int element, int level) const {
        return point_closures_[element][level - 1];
    }

private:
    const FuzzyClosureSpace* space_;
    SetEnumeration enumeration_;
    std::vector<FuzzySet> sets_;
    std::vector<std::uint32_t> closure_rank_;
    std::vector<std::uint32_t> interior_rank_;
    std::vector<std::uint32_t> complement_rank_;
    std::vector<std::vector<FuzzySet>> point_closures_;
};

} // namespace fcs

#endif
