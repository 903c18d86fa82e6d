#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcs/constructions.hpp"
#include "fcs/corpus.hpp"
#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/parallel.hpp"

using namespace fcs;

TEST_CASE("subspace of discrete is discrete, and the shift cuts its successor") {
    const FuzzyClosureSpace disc = corpus::discrete(3, 2);
    const FuzzyClosureSpace sub = subspace(disc, {"a", "c"});
    REQUIRE(sub.validated());
    SetEnumeration en(sub.universe(), sub.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) CHECK(sub.closure(en.at(r)) == en.at(r));

    const FuzzyClosureSpace shift = corpus::shift_path(4, 2);
    const FuzzyClosureSpace cut = subspace(shift, {"1"});
    for (int k : {1, 2}) {
        const FuzzyPoint p(cut.universe(), cut.chain(), 0, k);
        CHECK(cut.closure(p) == p.as_set()); // the successor is cut off
    }

    CHECK_THROWS_AS(subspace(shift, {}), StructuralError);
    CHECK_THROWS_AS(subspace(shift, {"7"}), StructuralError);
}

TEST_CASE("subspaces of every enumerated space validate") {
    // Exhaustive at |X|=3, D=2 for one two-element subset, parallel over the
    // family; all three subsets on a sampled slice.
    const FgSpaceEnumeration en(Universe::letters(3), Chain(2));
    REQUIRE(en.size() == 373248);
    std::vector<char> ok(en.size(), 1);
    parallel_for_indexed(en.size(), ExecPolicy{}, [&](std::uint64_t i) {
        const FuzzyClosureSpace s = en.at(i);
        const FuzzyClosureSpace sub = subspace(s, {"a", "c"});
        ok[i] = sub.validated() ? 1 : 0;
    });
    CHECK(std::count(ok.begin(), ok.end(), 0) == 0);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const FuzzyClosureSpace s = en.at(rng() % en.size());
        for (const auto& names : {std::vector<std::string>{"a", "b"},
                                  std::vector<std::string>{"a", "c"},
                                  std::vector<std::string>{"b", "c"}})
            CHECK(subspace(s, names).validated());
    }
}

TEST_CASE("sums restrict to their blocks") {
    const FuzzyClosureSpace a = corpus::shift_path(2, 2);           // universe {0,1}
    const FuzzyClosureSpace b = relabel_map(corpus::shift_path(2, 2), {0, 1}, {"2", "3"}).target();
    const FuzzyClosureSpace total = sum({a, b});
    REQUIRE(total.validated());
    CHECK(total.universe().names() == std::vector<std::string>{"0", "1", "2", "3"});

    for (const FuzzyPoint& p : enumerate_points(total.universe(), total.chain())) {
        const FuzzyClosureSpace& block = p.element() < 2 ? a : b;
        const int local = p.element() % 2;
        const FuzzySet expected =
            extend_by_zero(block.closure(FuzzyPoint(block.universe(), block.chain(), local,
                                                    p.level_numerator())),
                           total.universe(), total.chain());
        CHECK(total.closure(p) == expected);
    }

    // sum of one space behaves identically to the space
    const FuzzyClosureSpace single = sum({a});
    SetEnumeration en(a.universe(), a.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r)
        CHECK(single.closure(en.at(r)) == a.closure(en.at(r)));

    // sums of discretes are discrete
    const FuzzyClosureSpace d1 = corpus::discrete(2, 2);
    const FuzzyClosureSpace d2 = relabel_map(d1, {0, 1}, {"c", "d"}).target();
    const FuzzyClosureSpace dsum = sum({d1, d2});
    SetEnumeration den(dsum.universe(), dsum.chain());
    for (std::uint64_t r = 0; r < den.size(); ++r)
        CHECK(dsum.closure(den.at(r)) == den.at(r));

    // restricting the sum back to one block recovers that block exactly
    const FuzzyClosureSpace back = subspace(total, a.universe().names());
    CHECK(back.universe() == a.universe());
    for (std::uint64_t r = 0; r < en.size(); ++r)
        CHECK(back.closure(en.at(r)) == a.closure(en.at(r)));

    CHECK_THROWS_AS(sum({a, a}), StructuralError); // overlapping universes
    CHECK_THROWS_AS(sum({a, corpus::discrete(2, 4)}), StructuralError); // chain mismatch
    CHECK_THROWS_AS(sum({}), StructuralError);
}

TEST_CASE("product point closures follow the coordinatewise minimum") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = (trial % 2) ? 2 : 1;
        const FuzzyClosureSpace a = random_fg_space(Universe({"a", "b"}), Chain(d), rng());
        const FuzzyClosureSpace b = random_fg_space(Universe({"p", "q"}), Chain(d), rng());
        const ProductSpace prod = product({a, b});
        REQUIRE(prod.space.validated());
        for (const FuzzyPoint& pt : enumerate_points(prod.space.universe(), prod.space.chain())) {
            const FuzzySet via_factors = product_min_set(
                prod, {a.closure(FuzzyPoint(a.universe(), a.chain(), prod.coords[pt.element()][0],
                                            pt.level_numerator())),
                       b.closure(FuzzyPoint(b.universe(), b.chain(), prod.coords[pt.element()][1],
                                            pt.level_numerator()))});
            CHECK(prod.space.closure(pt) == via_factors);
        }
    }
}

TEST_CASE("closed-form product closure matches the decomposition oracle everywhere") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const FuzzyClosureSpace a = random_fg_space(Universe({"a", "b"}), Chain(1), rng());
        const FuzzyClosureSpace b = random_fg_space(Universe({"p", "q"}), Chain(1), rng());
        const ProductSpace prod = product({a, b});
        SetEnumeration en(prod.space.universe(), prod.space.chain());
        for (std::uint64_t r = 0; r < en.size(); ++r) {
            const FuzzySet f = en.at(r);
            const FuzzySet closed = prod.space.closure(f);
            for (const FuzzyPoint& pt :
                 enumerate_points(prod.space.universe(), prod.space.chain()))
                CHECK(closed.contains(pt) == product_closure_oracle(prod, f, pt));
        }
    }
}

TEST_CASE("the oracle is empty on the zero set and matches literal decompositions") {
    std::mt19937_64 rng(33);
    const FuzzyClosureSpace a = random_fg_space(Universe({"a", "b"}), Chain(1), rng());
    const FuzzyClosureSpace b = random_fg_space(Universe({"p", "q"}), Chain(1), rng());
    const ProductSpace prod = product({a, b});
    const FuzzySet zero(prod.space.universe(), prod.space.chain());
    SetEnumeration en(prod.space.universe(), prod.space.chain());
    for (const FuzzyPoint& pt : enumerate_points(prod.space.universe(), prod.space.chain()))
        CHECK_FALSE(product_closure_oracle(prod, zero, pt));

    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        for (const FuzzyPoint& pt : enumerate_points(prod.space.universe(), prod.space.chain()))
            CHECK(product_closure_oracle(prod, f, pt) ==
                  product_closure_by_decompositions(prod, f, pt, 3));
    }
}

TEST_CASE("single-factor products reproduce the factor") {
    const FuzzyClosureSpace s = corpus::shift_path(2, 2);
    const ProductSpace prod = product({s});
    CHECK(prod.space.universe().names() == std::vector<std::string>{"(0)", "(1)"});
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        FuzzySet lifted(prod.space.universe(), prod.space.chain(),
                        std::vector<int>(f.numerators()));
        const FuzzySet closed = prod.space.closure(lifted);
        CHECK(closed.numerators() == s.closure(f).numerators());
    }
    // projection of the single factor is the identity on the ground
    const SpaceMap proj = projection_map(prod, 0);
    CHECK(is_cf_continuous(proj).holds);
    CHECK(proj.is_bijective());
}

TEST_CASE("projections from products are continuous") {
    const FuzzyClosureSpace a = corpus::shift_path(2, 1);
    const FuzzyClosureSpace b = FuzzyClosureSpace::discrete(Universe({"p", "q"}), Chain(1));
    const ProductSpace prod = product({a, b});
    for (int t = 0; t < 2; ++t) CHECK(is_cf_continuous(projection_map(prod, t)).holds);
    CHECK_THROWS_AS(projection_map(prod, 2), StructuralError);
}

TEST_CASE("every operator with continuous projections sits below the product") {
    const FuzzyClosureSpace a = corpus::shift_path(2, 1);
    const FuzzyClosureSpace b = FuzzyClosureSpace::discrete(Universe({"p", "q"}), Chain(1));
    const ProductSpace prod = product({a, b});
    SetEnumeration en(prod.space.universe(), prod.space.chain());
    const FgSpaceEnumeration candidates(prod.space.universe(), prod.space.chain());
    REQUIRE(candidates.size() == 4096);
    std::uint64_t continuous_count = 0;
    for (std::uint64_t i = 0; i < candidates.size(); ++i) {
        const FuzzyClosureSpace e = candidates.at(i);
        bool projections_continuous = true;
        for (int t = 0; t < 2 && projections_continuous; ++t) {
            std::vector<int> ground(prod.space.universe().size());
            for (std::size_t y = 0; y < prod.coords.size(); ++y) ground[y] = prod.coords[y][t];
            projections_continuous =
                is_cf_continuous(SpaceMap(e, prod.factors[t], std::move(ground))).holds;
        }
        if (!projections_continuous) continue;
        ++continuous_count;
        for (std::uint64_t r = 0; r < en.size(); ++r)
            CHECK(e.closure(en.at(r)).leq(prod.space.closure(en.at(r))));
    }
    CHECK(continuous_count > 0); // the product itself qualifies
}

TEST_CASE("sum interior lemma on a concrete pair") {
    const FuzzyClosureSpace a = corpus::shift_path(2, 2);
    const FuzzyClosureSpace b = relabel_map(corpus::discrete(2, 2), {0, 1}, {"2", "3"}).target();
    const FuzzyClosureSpace total = sum({a, b});
    SetEnumeration en(total.universe(), total.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        FuzzySet expected(total.universe(), total.chain());
        for (const FuzzyClosureSpace* block : {&a, &b}) {
            const FuzzySet part = restrict_to(
                f.meet(FuzzySet::crisp(total.universe(), total.chain(), block->universe().names())),
                block->universe());
            expected = expected.join(
                extend_by_zero(block->interior(part), total.universe(), total.chain()));
        }
        CHECK(total.interior(f) == expected);
    }
}

TEST_CASE("oversized products hit the budget") {
    std::vector<FuzzyClosureSpace> many;
    for (int i = 0; i < 8; ++i)
        many.push_back(relabel_map(corpus::discrete(3, 4), {0, 1, 2},
                                   {"x" + std::to_string(i), "y" + std::to_string(i),
                                    "z" + std::to_string(i)})
                           .target());
    CHECK_THROWS_AS(product(many), ResourceError);
}
