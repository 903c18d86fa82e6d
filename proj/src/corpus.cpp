#include "fcs/corpus.hpp"

#include "fcs/errors.hpp"

namespace fcs {
namespace corpus {

namespace {

Universe numbered(int n) {
    if (n < 1) throw StructuralError("universe size must be positive");
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return Universe(std::move(names));
}

FuzzyClosureSpace require_valid(FuzzyClosureSpace s) {
    if (!s.validated()) throw StructuralError("corpus space failed validation");
    return s;
}

} // namespace

FuzzyClosureSpace discrete(int n, int d) {
    return FuzzyClosureSpace::discrete(Universe::letters(n), Chain(d));
}

FuzzyClosureSpace indiscrete(int n, int d) {
    return FuzzyClosureSpace::indiscrete(Universe::letters(n), Chain(d));
}

FuzzyClosureSpace pqr_interior(int d) {
    const Universe u({"p", "q", "r"});
    const Chain chain(d);
    const FuzzySet pq = FuzzySet::crisp(u, chain, {"p", "q"});
    const FuzzySet one = FuzzySet::one(u, chain);
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        return p.support() == "p" ? pq : one;
    }));
}

namespace {

FuzzyClosureSpace crisp_cycle(const std::vector<std::string>& names, int d) {
    const Universe u(names);
    const Chain chain(d);
    const int n = u.size();
    return FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        const int e = p.element();
        return FuzzySet::crisp(u, chain, {u.name(e), u.name((e + 1) % n)});
    });
}

} // namespace

FuzzyClosureSpace cycle3_xyz(int d) { return require_valid(crisp_cycle({"x", "y", "z"}, d)); }

FuzzyClosureSpace cycle4_pqrs(int d) { return require_valid(crisp_cycle({"p", "q", "r", "s"}, d)); }

SpaceMap cycle4_rotation(int d) {
    FuzzyClosureSpace space = cycle4_pqrs(d);
    return SpaceMap::from_names(space, space,
                                {{"p", "q"}, {"q", "r"}, {"r", "p"}, {"s", "s"}});
}

FuzzyClosureSpace shift_path(int n, int d) {
    if (n < 1) throw StructuralError("shift_path needs n >= 1");
    const Universe u = numbered(n);
    const Chain chain(d);
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        FuzzySet out = p.as_set();
        if (p.element() + 1 < n)
            out = out.join(FuzzyPoint(u, chain, p.element() + 1, p.level_numerator()).as_set());
        return out;
    }));
}

FuzzyClosureSpace shift_cycle(int n, int d) {
    if (n < 3) throw StructuralError("shift_cycle needs n >= 3");
    const Universe u = numbered(n);
    const Chain chain(d);
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        return p.as_set().join(
            FuzzyPoint(u, chain, (p.element() + 1) % n, p.level_numerator()).as_set());
    }));
}

FuzzyClosureSpace urysohn_not_regular(int n, int d) {
    if (n < 2) throw StructuralError("urysohn_not_regular needs n >= 2");
    if (d % 20 != 0)
        throw StructuralError("urysohn_not_regular needs a denominator divisible by 20");
    const Universe u = numbered(n);
    const Chain chain(d);
    const int half = d / 2;
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        if (p.element() != 0) return p.as_set();
        const int k = p.level_numerator();
        const int lifted = k < half ? k + half : d;
        return FuzzyPoint(u, chain, 0, lifted).as_set();
    }));
}

FuzzyClosureSpace singleton_closure(int n, int d) {
    if (n < 2) throw StructuralError("singleton_closure needs n >= 2");
    const Universe u = numbered(n);
    const Chain chain(d);
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        return FuzzyPoint(u, chain, p.element(), d).as_set();
    }));
}

FuzzyClosureSpace two_block_normal(int n, int d) {
    if (n < 2) throw StructuralError("two_block_normal needs n >= 2");
    const Universe u = numbered(n);
    const Chain chain(d);
    const FuzzySet first = FuzzyPoint(u, chain, 0, d).as_set();
    return require_valid(FuzzyClosureSpace::finitely_generated(u, chain, [&](const FuzzyPoint& p) {
        return p.element() == 0 ? first : first.complement();
    }));
}

std::vector<std::string> example_names() {
    return {"discrete",   "indiscrete",          "pqr_interior",      "cycle3_xyz",
            "cycle4_pqrs", "shift_path",          "shift_cycle",       "urysohn_not_regular",
            "singleton_closure", "two_block_normal"};
}

FuzzyClosureSpace build_example(const ExampleId& id) {
    const int n = id.n.value_or(3);
    const int d = id.d.value_or(2);
    if (id.name == "discrete") return discrete(id.n.value_or(2), d);
    if (id.name == "indiscrete") return indiscrete(id.n.value_or(2), d);
    if (id.name == "pqr_interior") return pqr_interior(id.d.value_or(4));
    if (id.name == "cycle3_xyz") return cycle3_xyz(d);
    if (id.name == "cycle4_pqrs") return cycle4_pqrs(d);
    if (id.name == "shift_path") return shift_path(id.n.value_or(4), d);
    if (id.name == "shift_cycle") return shift_cycle(n, d);
    if (id.name == "urysohn_not_regular") return urysohn_not_regular(id.n.value_or(2), id.d.value_or(20));
    if (id.name == "singleton_closure") return singleton_closure(n, d);
    if (id.name == "two_block_normal") return two_block_normal(n, d);
    throw StructuralError("unknown example: " + id.name);
}

} // namespace corpus
} // namespace fcs
