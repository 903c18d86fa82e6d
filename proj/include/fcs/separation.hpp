#ifndef FCS_SEPARATION_HPP
#define FCS_SEPARATION_HPP

#include <string>
#include <vector>

#include "fcs/analysis.hpp"
#include "fcs/closure.hpp"
#include "fcs/verdict.hpp"

namespace fcs {

enum class CfAxiom { T0, T1, Ts, T2, Urysohn, Regular, MashhourRegular, Normal, T3, T4 };

const char* cf_axiom_name(CfAxiom a);
CfAxiom cf_axiom_from_name(const std::string& name);

/// Point quantifiers range over chain levels; "distinct" fuzzy points means
/// different supports throughout. False verdicts carry the first failing
/// instance in enumeration order (elements in universe order, levels
/// ascending, sets by rank).
Verdict cft0(const FuzzyClosureSpace& s);
/// Existential-over-f form; agrees with cft0 on every space.
Verdict cft0_interior_characterization(const FuzzyClosureSpace& s);

/// Decided through the closed-singleton characterization.
Verdict cft1(const FuzzyClosureSpace& s);
/// Literal two-sided membership over all distinct point pairs.
Verdict cft1_pairwise(const FuzzyClosureSpace& s);

Verdict cfts(const FuzzyClosureSpace& s);

Verdict cft2(const FuzzyClosureSpace& s);
Verdict cf_urysohn(const FuzzyClosureSpace& s);

/// For every chain point and non-empty k with x_lambda in Co(c(k)) there must
/// be disjoint neighborhoods of the point and of k. k is an arbitrary
/// non-empty set, not a closed one; pairs with k = 0 are skipped.
Verdict cf_regular(const FuzzyClosureSpace& s);

/// Sandwich form: x_lambda in int(k) requires f with x_lambda in int(f) and
/// c(f) <= int(k).
Verdict cf_regular_mashhour(const FuzzyClosureSpace& s);

Verdict cf_normal(const FuzzyClosureSpace& s);

Verdict cft3(const FuzzyClosureSpace& s);
Verdict cft4(const FuzzyClosureSpace& s);

Verdict decide(const FuzzyClosureSpace& s, CfAxiom which);

/// Literal pair-enumeration deciders, kept as independent oracles for the
/// reduced ones above. Micro instances only.
Verdict cft2_naive(const FuzzyClosureSpace& s);
Verdict cf_urysohn_naive(const FuzzyClosureSpace& s);
Verdict cf_regular_naive(const FuzzyClosureSpace& s);
Verdict cf_normal_naive(const FuzzyClosureSpace& s);

/// On-demand certificates for the existential axioms: the separating sets
/// for one quantified instance, or nullopt when the instance cannot be
/// separated (or its hypothesis fails).
std::optional<Witness> cft2_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                        const FuzzyPoint& y);
std::optional<Witness> cf_urysohn_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                              const FuzzyPoint& y);
std::optional<Witness> cf_regular_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                              const FuzzySet& k);
std::optional<Witness> cf_normal_certificate(const FuzzyClosureSpace& s, const FuzzySet& k1,
                                             const FuzzySet& k2);

struct SeparationReport {
    std::vector<Verdict> verdicts; // one per CfAxiom, in enum order
    const Verdict& at(CfAxiom which) const;
    bool holds(CfAxiom which) const { return at(which).holds; }
};

/// All verdicts, consistency-checked against the implication lattice
/// (Ts=>T1, T2=>T1=>T0, Urysohn=>T2, T3=>T2, T4=>T3, sandwich=>regular,
/// T3 = regular & Ts, T4 = normal & Ts) before returning.
SeparationReport classify(const FuzzyClosureSpace& s);

/// Replays a false verdict's witness; true iff it still violates the axiom.
bool replay_witness(const FuzzyClosureSpace& s, const Verdict& v);

} // namespace fcs

#endif
