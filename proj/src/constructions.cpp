#include "fcs/constructions.hpp"

#include <algorithm>
#include <set>

#include "fcs/errors.hpp"

namespace fcs {

FuzzySet extend_by_zero(const FuzzySet& f, const Universe& parent, const Chain& chain) {
    std::vector<int> mem(parent.size(), 0);
    for (int i = 0; i < f.universe().size(); ++i)
        mem[parent.require(f.universe().name(i))] = f.numerator(i);
    return FuzzySet(parent, chain, std::move(mem));
}

FuzzySet restrict_to(const FuzzySet& f, const Universe& sub) {
    std::vector<int> mem(sub.size());
    for (int i = 0; i < sub.size(); ++i) mem[i] = f.numerator(f.universe().require(sub.name(i)));
    return FuzzySet(sub, f.chain(), std::move(mem));
}

FuzzyClosureSpace subspace(const FuzzyClosureSpace& s, const std::vector<std::string>& elements) {
    s.require_validated();
    if (elements.empty()) throw StructuralError("subspace requires a non-empty element set");
    std::set<int> chosen;
    for (const auto& name : elements) chosen.insert(s.universe().require(name));

    // Elements keep the parent order.
    std::vector<std::string> names;
    for (int i = 0; i < s.universe().size(); ++i)
        if (chosen.count(i)) names.push_back(s.universe().name(i));
    const Universe sub(names);
    const Chain chain = s.chain();
    const FuzzySet block = FuzzySet::crisp(s.universe(), chain, names);

    if (std::holds_alternative<DiscreteOp>(s.op()))
        return FuzzyClosureSpace::discrete(sub, chain);
    if (std::holds_alternative<IndiscreteOp>(s.op()))
        return FuzzyClosureSpace::indiscrete(sub, chain);

    const auto trace = [&](const FuzzySet& f) {
        return restrict_to(s.closure(extend_by_zero(f, s.universe(), chain)).meet(block), sub);
    };
    if (std::holds_alternative<FgOp>(s.op()))
        return FuzzyClosureSpace::finitely_generated(
            sub, chain, [&](const FuzzyPoint& p) { return trace(p.as_set()); });
    return FuzzyClosureSpace::from_function(sub, chain, trace);
}

FuzzyClosureSpace sum(const std::vector<FuzzyClosureSpace>& blocks) {
    if (blocks.empty()) throw StructuralError("sum of an empty family");
    const Chain chain = blocks.front().chain();
    std::vector<std::string> names;
    for (const auto& b : blocks) {
        b.require_validated();
        if (b.chain() != chain) throw StructuralError("sum requires identical chains");
        for (const auto& n : b.universe().names()) names.push_back(n);
    }
    const Universe whole(names); // rejects duplicates, i.e. non-disjoint blocks

    return FuzzyClosureSpace::finitely_generated(whole, chain, [&](const FuzzyPoint& p) {
        for (const auto& b : blocks) {
            if (auto local = b.universe().index_of(p.support())) {
                const FuzzySet entry =
                    b.closure(FuzzyPoint(b.universe(), chain, *local, p.level_numerator()));
                return extend_by_zero(entry, whole, chain);
            }
        }
        throw StructuralError("sum point outside every block");
    });
}

namespace {

std::string tuple_name(const std::vector<FuzzyClosureSpace>& factors, const std::vector<int>& coord) {
    std::string name = "(";
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (t) name += ",";
        name += factors[t].universe().name(coord[t]);
    }
    return name + ")";
}

} // namespace

ProductSpace product(const std::vector<FuzzyClosureSpace>& factors) {
    if (factors.empty()) throw StructuralError("product of an empty family");
    const Chain chain = factors.front().chain();
    for (const auto& f : factors) {
        f.require_validated();
        if (f.chain() != chain) throw StructuralError("product requires identical chains");
    }

    // Tuples in row-major order, last factor varying fastest.
    std::vector<std::vector<int>> coords;
    std::vector<int> current(factors.size(), 0);
    for (;;) {
        coords.push_back(current);
        int t = static_cast<int>(factors.size()) - 1;
        while (t >= 0) {
            if (++current[t] < factors[t].universe().size()) break;
            current[t] = 0;
            --t;
        }
        if (t < 0) break;
    }

    std::vector<std::string> names;
    names.reserve(coords.size());
    for (const auto& c : coords) names.push_back(tuple_name(factors, c));
    const Universe tuple_universe(names);
    carrier_size_checked(tuple_universe, chain);

    ProductSpace out{
        FuzzyClosureSpace::finitely_generated(
            tuple_universe, chain,
            [&](const FuzzyPoint& p) {
                // Closure of a tuple point: coordinatewise minimum of the
                // factor point closures.
                std::vector<FuzzySet> parts;
                parts.reserve(factors.size());
                for (std::size_t t = 0; t < factors.size(); ++t) {
                    const int elem = coords[p.element()][t];
                    parts.push_back(factors[t].closure(
                        FuzzyPoint(factors[t].universe(), chain, elem, p.level_numerator())));
                }
                std::vector<int> mem(tuple_universe.size());
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    int v = chain.denominator();
                    for (std::size_t t = 0; t < factors.size(); ++t)
                        v = std::min(v, parts[t].numerator(coords[i][t]));
                    mem[i] = v;
                }
                return FuzzySet(tuple_universe, chain, std::move(mem));
            }),
        factors, coords};
    return out;
}

FuzzySet product_min_set(const ProductSpace& p, const std::vector<FuzzySet>& factor_sets) {
    if (factor_sets.size() != p.factors.size())
        throw StructuralError("one set per factor required");
    std::vector<int> mem(p.space.universe().size());
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        int v = p.space.chain().denominator();
        for (std::size_t t = 0; t < p.factors.size(); ++t)
            v = std::min(v, factor_sets[t].numerator(p.coords[i][t]));
        mem[i] = v;
    }
    return FuzzySet(p.space.universe(), p.space.chain(), std::move(mem));
}

bool product_closure_oracle(const ProductSpace& p, const FuzzySet& f, const FuzzyPoint& point) {
    if (f.universe() != p.space.universe())
        throw StructuralError("oracle set must live on the tuple universe");
    const Chain chain = p.space.chain();
    for (int y = 0; y < p.space.universe().size(); ++y) {
        const int level = f.numerator(y);
        if (level == 0) continue;
        bool all = true;
        for (std::size_t t = 0; t < p.factors.size() && all; ++t) {
            const FuzzySet ct = p.factors[t].closure(
                FuzzyPoint(p.factors[t].universe(), chain, p.coords[y][t], level));
            all = point.level_numerator() <= ct.numerator(p.coords[point.element()][t]);
        }
        if (all) return true;
    }
    return false;
}

namespace {

// Does some part of the decomposition absorb the point per the product rule?
bool some_part_works(const ProductSpace& p, const std::vector<SpaceMap>& projections,
                     const std::vector<const FuzzySet*>& parts, const FuzzyPoint& point) {
    for (const FuzzySet* part : parts) {
        bool all = true;
        for (std::size_t t = 0; t < p.factors.size() && all; ++t) {
            const FuzzySet ct = p.factors[t].closure(projections[t].image(*part));
            all = point.level_numerator() <= ct.numerator(p.coords[point.element()][t]);
        }
        if (all) return true;
    }
    return false;
}

bool decompositions_rec(const ProductSpace& p, const std::vector<SpaceMap>& projections,
                        const FuzzySet& f, const FuzzyPoint& point,
                        const std::vector<FuzzySet>& downset, std::vector<const FuzzySet*>& parts,
                        std::size_t from, int remaining) {
    if (remaining == 0) {
        FuzzySet joined(f.universe(), f.chain());
        for (const FuzzySet* part : parts) joined = joined.join(*part);
        if (joined != f) return true; // not a decomposition of f; no constraint
        return some_part_works(p, projections, parts, point);
    }
    for (std::size_t i = from; i < downset.size(); ++i) {
        parts.push_back(&downset[i]);
        const bool ok =
            decompositions_rec(p, projections, f, point, downset, parts, i, remaining - 1);
        parts.pop_back();
        if (!ok) return false;
    }
    return true;
}

} // namespace

bool product_closure_by_decompositions(const ProductSpace& p, const FuzzySet& f,
                                       const FuzzyPoint& point, int max_parts) {
    const std::uint64_t carrier = carrier_size_checked(p.space.universe(), p.space.chain());
    if (carrier > 4096 || max_parts > 4)
        throw ResourceError("literal decomposition check is restricted to micro instances");
    SetEnumeration en(p.space.universe(), p.space.chain());
    std::vector<FuzzySet> downset;
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet g = en.at(r);
        if (g.leq(f)) downset.push_back(g);
    }
    std::vector<SpaceMap> projections;
    for (std::size_t t = 0; t < p.factors.size(); ++t)
        projections.push_back(projection_map(p, static_cast<int>(t)));
    // Multisets of n parts for every n <= max_parts; the point belongs to the
    // product closure iff every decomposition has an absorbing part.
    for (int n = 1; n <= max_parts; ++n) {
        std::vector<const FuzzySet*> parts;
        if (!decompositions_rec(p, projections, f, point, downset, parts, 0, n)) return false;
    }
    return true;
}

SpaceMap projection_map(const ProductSpace& p, int t) {
    if (t < 0 || t >= static_cast<int>(p.factors.size()))
        throw StructuralError("projection index out of range");
    std::vector<int> ground(p.space.universe().size());
    for (std::size_t i = 0; i < p.coords.size(); ++i) ground[i] = p.coords[i][t];
    return SpaceMap(p.space, p.factors[t], std::move(ground));
}

} // namespace fcs
