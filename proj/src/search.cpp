#include "fcs/search.hpp"

#include <functional>

#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/separation.hpp"
#include "fcs/topology.hpp"

namespace fcs {

namespace {

struct Property {
    std::string name;
    // antecedent and consequent; a witness satisfies the first, fails the second
    std::function<bool(const FuzzyClosureSpace&)> antecedent;
    std::function<bool(const FuzzyClosureSpace&)> consequent;
};

bool tau_normal(const FuzzyClosureSpace& s) {
    return s.associated_topology().ft_axiom(FtAxiom::Normal).holds;
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"t0_implies_t1", [](const FuzzyClosureSpace& s) { return cft0(s).holds; },
         [](const FuzzyClosureSpace& s) { return cft1(s).holds; }},
        {"t1_implies_t2", [](const FuzzyClosureSpace& s) { return cft1(s).holds; },
         [](const FuzzyClosureSpace& s) { return cft2(s).holds; }},
        {"t2_implies_urysohn", [](const FuzzyClosureSpace& s) { return cft2(s).holds; },
         [](const FuzzyClosureSpace& s) { return cf_urysohn(s).holds; }},
        {"urysohn_implies_regular", [](const FuzzyClosureSpace& s) { return cf_urysohn(s).holds; },
         [](const FuzzyClosureSpace& s) { return cf_regular(s).holds; }},
        {"regular_implies_ts", [](const FuzzyClosureSpace& s) { return cf_regular(s).holds; },
         [](const FuzzyClosureSpace& s) { return cfts(s).holds; }},
        {"regular_implies_normal", [](const FuzzyClosureSpace& s) { return cf_regular(s).holds; },
         [](const FuzzyClosureSpace& s) { return cf_normal(s).holds; }},
        {"normal_implies_regular", [](const FuzzyClosureSpace& s) { return cf_normal(s).holds; },
         [](const FuzzyClosureSpace& s) { return cf_regular(s).holds; }},
        {"tau_normal_implies_normal", tau_normal,
         [](const FuzzyClosureSpace& s) { return cf_normal(s).holds; }},
    };
    return props;
}

const Property& lookup(const std::string& name) {
    for (const Property& p : registry())
        if (p.name == name) return p;
    throw StructuralError("unknown search property: " + name);
}

ordered_json witness_document(const Property& prop, const FuzzyClosureSpace& s) {
    ordered_json out;
    out["property"] = prop.name;
    out["antecedent_holds"] = true;
    out["consequent_holds"] = false;
    out["space"] = space_document(s);
    return out;
}

} // namespace

std::vector<std::string> search_property_names() {
    std::vector<std::string> names;
    for (const Property& p : registry()) names.push_back(p.name);
    return names;
}

SearchOutcome search_counterexample(const std::string& property, const SearchBounds& bounds,
                                    const ExecPolicy& policy) {
    const Property& prop = lookup(property);
    SearchOutcome outcome;
    outcome.property = property;
    outcome.bounds = bounds;

    const auto is_witness = [&prop](const FuzzyClosureSpace& s) {
        return prop.antecedent(s) && !prop.consequent(s);
    };

    for (int n = 1; n <= bounds.max_n; ++n) {
        for (int d = 1; d <= bounds.max_d; ++d) {
            const FgSpaceEnumeration en(Universe::letters(n), Chain(d));
            const auto hit = find_first_index(en.size(), policy, [&](std::uint64_t i) {
                return is_witness(en.at(i));
            });
            if (hit) {
                outcome.spaces_checked += *hit + 1;
                outcome.found = true;
                outcome.witness = witness_document(prop, en.at(*hit));
                return outcome;
            }
            outcome.spaces_checked += en.size();

            if (bounds.include_tables) {
                std::optional<FuzzyClosureSpace> table_hit;
                std::uint64_t seen = 0;
                enumerate_table_spaces(Universe::letters(n), Chain(d),
                                       [&](const FuzzyClosureSpace& s) {
                                           ++seen;
                                           if (!table_hit && is_witness(s)) table_hit = s;
                                       });
                outcome.spaces_checked += seen;
                if (table_hit) {
                    outcome.found = true;
                    outcome.witness = witness_document(prop, *table_hit);
                    return outcome;
                }
            }
        }
    }
    return outcome;
}

} // namespace fcs
