#ifndef FCS_CLOSURE_HPP
#define FCS_CLOSURE_HPP

#include <string>
#include <variant>
#include <vector>

#include "fcs/lattice.hpp"

namespace fcs {

class FuzzyTopology;

/// c(f) = f.
struct DiscreteOp {};

/// c(0) = 0, c(f) = 1 otherwise.
struct IndiscreteOp {};

/// Explicit closure for every set of the carrier, indexed by enumeration rank.
struct TableOp {
    std::vector<FuzzySet> closures;
};

/// Point-generated operator: one entry per (element, positive level), with
/// entries expansive and monotone in the level. The closure of f is the join
/// of the entries at the maximal points of f.
struct FgOp {
    /// entries[element][k-1] is the closure of the point at level k/D.
    std::vector<std::vector<FuzzySet>> entries;
};

using ClosureOperator = std::variant<DiscreteOp, IndiscreteOp, TableOp, FgOp>;

struct AxiomViolation {
    std::string axiom;                // "zero", "expansive", "join", plus fg entry checks
    std::vector<FuzzySet> sets;       // offending sets in definition order
    std::string detail;
};

struct ValidationReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;
};

/// A universe + chain + closure operator. Construction runs structural checks
/// and the full axiom validation eagerly; the space is immutable afterwards
/// and safe to share across threads. Queries other than validation report
/// require a validated space.
class FuzzyClosureSpace {
public:
    FuzzyClosureSpace(Universe u, Chain chain, ClosureOperator op);

    static FuzzyClosureSpace discrete(Universe u, Chain chain);
    static FuzzyClosureSpace indiscrete(Universe u, Chain chain);

    /// Builds a table operator from an arbitrary closure function.
    template <typename Fn>
    static FuzzyClosureSpace from_function(Universe u, Chain chain, Fn&& fn) {
        SetEnumeration en(u, chain);
        TableOp table;
        table.closures.reserve(en.size());
        for (std::uint64_t r = 0; r < en.size(); ++r) table.closures.push_back(fn(en.at(r)));
        return FuzzyClosureSpace(std::move(u), std::move(chain), std::move(table));
    }

    /// Builds a point-generated operator from point closures; fn(point) must
    /// return the closure of that point.
    template <typename Fn>
    static FuzzyClosureSpace finitely_generated(Universe u, Chain chain, Fn&& fn) {
        FgOp op;
        op.entries.resize(u.size());
        for (int e = 0; e < u.size(); ++e) {
            op.entries[e].reserve(chain.denominator());
            for (int k = 1; k <= chain.denominator(); ++k)
                op.entries[e].push_back(fn(FuzzyPoint(u, chain, e, k)));
        }
        return FuzzyClosureSpace(std::move(u), std::move(chain), std::move(op));
    }

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }
    const ClosureOperator& op() const { return op_; }

    const ValidationReport& validation() const { return validation_; }
    bool validated() const { return validation_.passed; }

    FuzzySet closure(const FuzzySet& f) const;
    FuzzySet closure(const FuzzyPoint& p) const;
    FuzzySet interior(const FuzzySet& f) const;
    /// Closure recovered through the interior: Co(int(Co(f))). Always equals
    /// closure(f); kept as an independently evaluated route.
    FuzzySet closure_from_interior(const FuzzySet& f) const;

    bool is_neighborhood(const FuzzySet& f, const FuzzySet& k) const;
    bool is_neighborhood(const FuzzySet& f, const FuzzyPoint& p) const;

    bool is_closed(const FuzzySet& f) const;
    bool is_open(const FuzzySet& f) const;

    /// Opens {f : c(Co(f)) = Co(f)} as a validated Chang topology.
    FuzzyTopology associated_topology() const;

    bool is_idempotent() const;

    /// True iff the closure of every point has singleton support.
    bool is_well_closed(const FuzzyPoint& p) const;

    /// Checks c(f) = join of point closures over all points below f, for
    /// every enumerated f.
    bool is_finitely_generated() const;

    /// Point-generated twin with entries c(x_lambda); closure-equivalent on
    /// the whole carrier for any validated space.
    FuzzyClosureSpace to_finitely_generated() const;

    void require_validated() const;

private:
    Universe universe_;
    Chain chain_;
    ClosureOperator op_;
    ValidationReport validation_;
};

/// True iff s1 is coarser than s2 (closure_2(f) <= closure_1(f) everywhere).
bool coarser_leq(const FuzzyClosureSpace& s1, const FuzzyClosureSpace& s2);

/// Replays a validation violation; true iff the witness still fails the
/// named axiom on the given space.
bool replay_violation(const FuzzyClosureSpace& s, const AxiomViolation& v);

} // namespace fcs

#endif
