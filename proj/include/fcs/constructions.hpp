#ifndef FCS_CONSTRUCTIONS_HPP
#define FCS_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "fcs/closure.hpp"
#include "fcs/maps.hpp"

namespace fcs {

/// Subspace on the non-empty subset A, re-rooted to a universe on A (elements
/// keep the parent order). The closure of f on A is the restriction of
/// 1_A ^ c(f extended by zero).
FuzzyClosureSpace subspace(const FuzzyClosureSpace& s, const std::vector<std::string>& elements);

/// Zero-extension of a set on a subspace universe back into the parent.
FuzzySet extend_by_zero(const FuzzySet& f, const Universe& parent, const Chain& chain);

/// Restriction of a parent-universe set to a subset universe.
FuzzySet restrict_to(const FuzzySet& f, const Universe& sub);

/// Disjoint sum: union universe, blockwise closure. Universes must be
/// pairwise disjoint and chains identical.
FuzzyClosureSpace sum(const std::vector<FuzzyClosureSpace>& blocks);

/// Finite product on the tuple universe. The closure is point-generated from
/// the coordinatewise-minimum products of factor point closures; the
/// decomposition oracle below confirms it on micro instances.
struct ProductSpace {
    FuzzyClosureSpace space;
    std::vector<FuzzyClosureSpace> factors;
    /// coords[tuple_element][t] = element index in factor t.
    std::vector<std::vector<int>> coords;
};

ProductSpace product(const std::vector<FuzzyClosureSpace>& factors);

/// Tuple-universe fuzzy set with membership min_t factor_sets[t](coordinate t).
FuzzySet product_min_set(const ProductSpace& p, const std::vector<FuzzySet>& factor_sets);

/// Decides p <= product_closure(f) through the maximal-point reduction of the
/// decomposition semantics: some maximal point y of f must satisfy
/// P_t(p) <= c_t(P_t(y)) for all t.
bool product_closure_oracle(const ProductSpace& p, const FuzzySet& f, const FuzzyPoint& point);

/// Literal decomposition semantics on micro instances: quantifies over every
/// way of writing f as a join of at most max_parts parts below f (parts may
/// repeat and may be zero; their join must be exactly f).
bool product_closure_by_decompositions(const ProductSpace& p, const FuzzySet& f,
                                       const FuzzyPoint& point, int max_parts);

/// The ground projection onto factor t, as a map from the product space.
SpaceMap projection_map(const ProductSpace& p, int t);

} // namespace fcs

#endif
