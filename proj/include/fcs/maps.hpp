#ifndef FCS_MAPS_HPP
#define FCS_MAPS_HPP

#include <vector>

#include "fcs/closure.hpp"
#include "fcs/verdict.hpp"

namespace fcs {

/// Ground function between two fuzzy closure spaces on the same chain,
/// carrying Zadeh image (sup over preimages) and preimage (composition).
class SpaceMap {
public:
    /// ground[i] = index in target universe of the image of source element i.
    SpaceMap(FuzzyClosureSpace source, FuzzyClosureSpace target, std::vector<int> ground);

    /// Resolves a name-to-name assignment against the two universes.
    static SpaceMap from_names(FuzzyClosureSpace source, FuzzyClosureSpace target,
                               const std::vector<std::pair<std::string, std::string>>& assignment);

    static SpaceMap identity(const FuzzyClosureSpace& s);

    const FuzzyClosureSpace& source() const { return source_; }
    const FuzzyClosureSpace& target() const { return target_; }
    const std::vector<int>& ground() const { return ground_; }

    int apply(int source_element) const { return ground_.at(source_element); }
    FuzzyPoint apply(const FuzzyPoint& p) const;

    FuzzySet image(const FuzzySet& g) const;
    FuzzySet preimage(const FuzzySet& h) const;

    bool is_bijective() const;
    /// Inverse map; requires bijectivity.
    SpaceMap inverse() const;

    /// Composition other after this (this: X->Y, other: Y->Z).
    SpaceMap then(const SpaceMap& other) const;

private:
    FuzzyClosureSpace source_;
    FuzzyClosureSpace target_;
    std::vector<int> ground_;
};

/// theta(c(f)) <= d(theta(f)) for every f on the source carrier.
Verdict is_cf_continuous(const SpaceMap& m);

/// Pointwise form: every f with p in c(f) satisfies theta(p) <= d(theta(f)).
Verdict is_cf_continuous_at(const SpaceMap& m, const FuzzyPoint& p);

/// c(theta^-1(g)) <= theta^-1(d(g)) for every g on the target carrier.
/// Agrees with is_cf_continuous on every map.
Verdict continuity_via_preimage(const SpaceMap& m);

/// Preimages of opens are open and preimages of closed sets are closed.
bool preimage_preserves_open(const SpaceMap& m);

/// Bijective with theta(c(f)) = d(theta(f)) everywhere; cross-checked against
/// (continuous and inverse continuous).
Verdict is_cf_homeomorphism(const SpaceMap& m);

/// Equips the target universe with the finest operator making the ground map
/// continuous (point closures y_mu v theta(c(theta^-1(y_mu)))) and returns
/// the resulting map, which is continuous by construction.
SpaceMap with_induced_target(const FuzzyClosureSpace& source, const Universe& target_universe,
                             std::vector<int> ground);

/// Renames elements through an index permutation (perm[i] is the new position
/// of element i) and conjugates the operator; the returned map is a
/// homeomorphism onto the relabeled space.
SpaceMap relabel_map(const FuzzyClosureSpace& s, const std::vector<int>& perm,
                     const std::vector<std::string>& new_names);

} // namespace fcs

#endif
