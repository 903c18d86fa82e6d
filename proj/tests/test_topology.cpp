#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcs/corpus.hpp"
#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/topology.hpp"

using namespace fcs;

TEST_CASE("Chang validation") {
    const Universe u({"p", "q"});
    const Chain c(1);
    CHECK(validate_chang(u, c, {FuzzySet::zero(u, c), FuzzySet::one(u, c)}).passed);
    CHECK(validate_chang(u, c, enumerate_sets(u, c)).passed);

    // missing the join of the two half-points
    const Chain c2(2);
    const FuzzySet p_half(u, c2, {1, 0});
    const FuzzySet q_half(u, c2, {0, 1});
    const auto report = validate_chang(
        u, c2, {FuzzySet::zero(u, c2), p_half, q_half, FuzzySet::one(u, c2)});
    CHECK_FALSE(report.passed);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations.front().axiom == "join");
    CHECK(report.violations.front().sets.at(2) == p_half.join(q_half));

    // families missing either constant fail
    CHECK_FALSE(validate_chang(u, c, {FuzzySet::one(u, c)}).passed);
}

TEST_CASE("fts closure") {
    const Universe u({"p", "q"});
    const Chain c(2);
    const FuzzyTopology ind = FuzzyTopology::indiscrete(u, c);
    const FuzzyTopology disc = FuzzyTopology::discrete(u, c);
    SetEnumeration en(u, c);
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        CHECK(disc.fts_closure(f) == f);
        if (!f.is_zero()) CHECK(ind.fts_closure(f).is_one());
        // idempotency
        CHECK(disc.fts_closure(disc.fts_closure(f)) == disc.fts_closure(f));
        CHECK(ind.fts_closure(ind.fts_closure(f)) == ind.fts_closure(f));
    }
    CHECK(ind.fts_closure(FuzzySet::zero(u, c)).is_zero());
}

TEST_CASE("the topology of an idempotent space reproduces its closure") {
    const FuzzyClosureSpace s = corpus::singleton_closure(2, 2); // crisp support closure, idempotent
    REQUIRE(s.is_idempotent());
    const FuzzyTopology t = s.associated_topology();
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r)
        CHECK(t.fts_closure(en.at(r)) == s.closure(en.at(r)));
}

TEST_CASE("wrapping fts closure as an operator validates and is idempotent") {
    const FuzzyClosureSpace s = corpus::two_block_normal(2, 2);
    const FuzzyTopology t = s.associated_topology();
    const FuzzyClosureSpace wrapped = t.as_closure_space();
    CHECK(wrapped.validated());
    CHECK(wrapped.is_idempotent());
}

TEST_CASE("FT axioms on the named topologies") {
    const Universe u({"p", "q"});
    const Chain c(2);
    const FuzzyTopology disc = FuzzyTopology::discrete(u, c);
    for (FtAxiom a : {FtAxiom::FT0, FtAxiom::FT1, FtAxiom::FTs, FtAxiom::FT2, FtAxiom::FT2_5,
                      FtAxiom::Regular, FtAxiom::FT3, FtAxiom::Normal, FtAxiom::FT4})
        CHECK(disc.ft_axiom(a).holds);

    const FuzzyTopology ind = FuzzyTopology::indiscrete(u, c);
    CHECK_FALSE(ind.ft_axiom(FtAxiom::FT0).holds);
    CHECK(ind.ft_axiom(FtAxiom::Normal).holds);
    CHECK(ind.ft_axiom(FtAxiom::Regular).holds);
    CHECK_FALSE(ind.ft_axiom(FtAxiom::FT4).holds); // not FTs
}

TEST_CASE("FT1 matches the closed-singleton characterization on random topologies") {
    for (int i = 0; i < 100; ++i) {
        const FuzzyClosureSpace s = random_fg_space(2, 2, 9000 + i);
        const FuzzyTopology t = s.associated_topology();
        bool singletons_closed = true;
        for (int e = 0; e < t.universe().size(); ++e) {
            const FuzzySet x1 =
                FuzzyPoint(t.universe(), t.chain(), e, t.chain().denominator()).as_set();
            singletons_closed = singletons_closed && t.fts_closure(x1) == x1;
        }
        CHECK(t.ft_axiom(FtAxiom::FT1).holds == singletons_closed);
    }
}

TEST_CASE("FT implication chain on random topologies") {
    for (int i = 0; i < 60; ++i) {
        const FuzzyTopology t = random_fg_space(2, 2, 17000 + i).associated_topology();
        const bool ft0 = t.ft_axiom(FtAxiom::FT0).holds;
        const bool ft1 = t.ft_axiom(FtAxiom::FT1).holds;
        const bool fts = t.ft_axiom(FtAxiom::FTs).holds;
        const bool ft2 = t.ft_axiom(FtAxiom::FT2).holds;
        const bool ury = t.ft_axiom(FtAxiom::FT2_5).holds;
        if (ft2) CHECK(ft1);
        if (ft1) CHECK(ft0);
        if (fts) CHECK(ft1);
        if (ury) CHECK(ft2);
    }
}

TEST_CASE("unvalidated topologies refuse queries") {
    const Universe u({"p", "q"});
    const Chain c(1);
    const FuzzyTopology broken(u, c, {FuzzySet::one(u, c)});
    CHECK_FALSE(broken.validated());
    CHECK_THROWS_AS(broken.fts_closure(FuzzySet::zero(u, c)), StructuralError);
}
