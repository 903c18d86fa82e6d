#ifndef FCS_TOPOLOGY_HPP
#define FCS_TOPOLOGY_HPP

#include <vector>

#include "fcs/closure.hpp"
#include "fcs/lattice.hpp"
#include "fcs/verdict.hpp"

namespace fcs {

enum class FtAxiom { FT0, FT1, FTs, FT2, FT2_5, Regular, FT3, Normal, FT4 };

const char* ft_axiom_name(FtAxiom a);

/// Chang fuzzy topology stored extensionally: the finite open family on a
/// discretized carrier. Opens are deduplicated and kept in enumeration-rank
/// order. Axiom validation runs eagerly at construction.
class FuzzyTopology {
public:
    FuzzyTopology(Universe u, Chain chain, std::vector<FuzzySet> opens);

    static FuzzyTopology indiscrete(const Universe& u, const Chain& c);
    static FuzzyTopology discrete(const Universe& u, const Chain& c);

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }
    const std::vector<FuzzySet>& opens() const { return opens_; }

    const ValidationReport& validation() const { return validation_; }
    bool validated() const { return validation_.passed; }

    bool is_open(const FuzzySet& f) const;
    bool is_closed(const FuzzySet& f) const;
    std::vector<FuzzySet> closed_sets() const;

    /// Meet of all closed supersets of f. Idempotent.
    FuzzySet fts_closure(const FuzzySet& f) const;

    Verdict ft_axiom(FtAxiom which) const;

    /// Table-operator space computing fts_closure; passes the closure axioms
    /// and is idempotent.
    FuzzyClosureSpace as_closure_space() const;

private:
    void require_validated() const;

    Universe universe_;
    Chain chain_;
    std::vector<FuzzySet> opens_;
    std::vector<std::uint64_t> open_ranks_; // sorted, for membership tests
    ValidationReport validation_;
};

/// Checks the three axioms of a Chang topology over an arbitrary family,
/// reporting a witness per failed axiom.
ValidationReport validate_chang(const Universe& u, const Chain& c,
                                const std::vector<FuzzySet>& family);

} // namespace fcs

#endif
