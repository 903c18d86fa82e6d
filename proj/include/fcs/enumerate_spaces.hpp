#ifndef FCS_ENUMERATE_SPACES_HPP
#define FCS_ENUMERATE_SPACES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fcs/closure.hpp"

namespace fcs {

/// Deterministic random-access enumeration of every point-generated space on
/// (u, chain): one level-monotone, expansive point-closure assignment per
/// index, each exactly once.
///
/// Per element x and coordinate y the level sequence c(x_{1/D})(y), ...,
/// c(x_1)(y) is nondecreasing, with the diagonal (y = x) additionally
/// dominating the level itself. Valid sequences are listed lexicographically
/// per coordinate block; blocks are ordered (x asc, y asc) and the index is
/// decoded with the last block varying fastest.
class FgSpaceEnumeration {
public:
    FgSpaceEnumeration(Universe u, Chain chain);

    std::uint64_t size() const { return size_; }
    FuzzyClosureSpace at(std::uint64_t index) const;

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }

private:
    Universe universe_;
    Chain chain_;
    std::vector<std::vector<int>> diagonal_seqs_;
    std::vector<std::vector<int>> free_seqs_;
    std::uint64_t size_;
};

/// Uniform over the same constructive family as FgSpaceEnumeration: each
/// coordinate block's sequence is drawn uniformly (64-bit Mersenne Twister,
/// modulo reduction), blocks in (x asc, y asc) order. Same seed, same space.
FuzzyClosureSpace random_fg_space(const Universe& u, const Chain& chain, std::uint64_t seed);
FuzzyClosureSpace random_fg_space(int n, int d, std::uint64_t seed);

/// Random ground assignment source -> target, one uniform draw per element.
std::vector<int> random_ground(int source_size, int target_size, std::mt19937_64& rng);

/// Uniform permutation via Fisher-Yates.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Calls fn with every table-variant space on (u, chain) that satisfies the
/// closure axioms, in enumeration order of the assignment vector. Restricted
/// to micro carriers; opt-in for searches.
void enumerate_table_spaces(const Universe& u, const Chain& chain,
                            const std::function<void(const FuzzyClosureSpace&)>& fn);

} // namespace fcs

#endif
