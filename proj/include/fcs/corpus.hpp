#ifndef FCS_CORPUS_HPP
#define FCS_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcs/closure.hpp"
#include "fcs/maps.hpp"

namespace fcs {

/// Named example spaces. All builders return validated spaces; parameters out
/// of range raise StructuralError.
///
///   discrete(n, D), indiscrete(n, D)
///   pqr_interior(D)        {p,q,r}: closures collapse below 1_{p}, 1 above
///   cycle3_xyz(D)          three-cycle of crisp two-element point closures
///   cycle4_pqrs(D)         four-cycle variant; rotation_map() pairs with it
///   shift_path(n, D)       successor shift, truncated at the last element
///   shift_cycle(n, D)      successor shift mod n (n >= 3)
///   urysohn_not_regular(n, D)  designated first element with half-step lift;
///                              D must be divisible by 20
///   singleton_closure(n, D)    c(f) = crisp support of f
///   two_block_normal(n, D)     c(x_.) = x_1 on the first element,
///                              c(y_.) = Co(x_1) elsewhere
namespace corpus {

FuzzyClosureSpace discrete(int n, int d);
FuzzyClosureSpace indiscrete(int n, int d);
FuzzyClosureSpace pqr_interior(int d);
FuzzyClosureSpace cycle3_xyz(int d);
FuzzyClosureSpace cycle4_pqrs(int d);
/// The non-continuous self-bijection of cycle4_pqrs whose open preimages are
/// still open: p->q, q->r, r->p, s->s.
SpaceMap cycle4_rotation(int d);
FuzzyClosureSpace shift_path(int n, int d);
FuzzyClosureSpace shift_cycle(int n, int d);
FuzzyClosureSpace urysohn_not_regular(int n, int d = 20);
FuzzyClosureSpace singleton_closure(int n, int d);
FuzzyClosureSpace two_block_normal(int n, int d);

struct ExampleId {
    std::string name;
    std::optional<int> n;
    std::optional<int> d;
};

std::vector<std::string> example_names();

/// Builds by name with defaulted parameters; maps are not built here (see
/// cycle4_rotation).
FuzzyClosureSpace build_example(const ExampleId& id);

} // namespace corpus
} // namespace fcs

#endif
