#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcs/errors.hpp"
#include "fcs/fraction.hpp"
#include "fcs/lattice.hpp"

using namespace fcs;

TEST_CASE("fractions reduce and compare exactly") {
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(3, 4).str() == "3/4");
    CHECK(Fraction(4, 4).str() == "1");
    CHECK(Fraction::parse("3/4") == Fraction(3, 4));
    CHECK(Fraction::parse("0") == Fraction::zero());
    CHECK(Fraction(1, 3) < Fraction(1, 2));
    CHECK(Fraction(1, 2).one_minus() == Fraction(1, 2));
    CHECK(Fraction(1, 4).one_minus() == Fraction(3, 4));
    CHECK_THROWS_AS(Fraction(1, 0), StructuralError);
    CHECK_THROWS_AS(Fraction::parse("abc"), StructuralError);
    CHECK_THROWS_AS(Fraction::parse("1/2x"), StructuralError);
    CHECK_THROWS_AS(Fraction::parse(""), StructuralError);
}

TEST_CASE("chains hold the representable levels") {
    const Chain c(4);
    CHECK(c.level_count() == 5);
    CHECK(c.level(2) == Fraction(1, 2));
    CHECK(c.numerator_of(Fraction(3, 4)) == 3);
    CHECK(c.numerator_of(Fraction(1, 2)) == 2);
    CHECK(!c.numerator_of(Fraction(1, 3)).has_value());
    CHECK(!c.numerator_of(Fraction(5, 4)).has_value());
    CHECK_THROWS_AS(Chain(0), StructuralError);
}

TEST_CASE("universes reject duplicates and resolve names") {
    CHECK_THROWS_AS(Universe({}), StructuralError);
    CHECK_THROWS_AS(Universe({"a", "a"}), StructuralError);
    const Universe u({"p", "q", "r"});
    CHECK(u.size() == 3);
    CHECK(u.require("q") == 1);
    CHECK(!u.index_of("zz").has_value());
    CHECK_THROWS_AS(u.require("zz"), StructuralError);
    CHECK(Universe::letters(2) == Universe({"a", "b"}));
}

TEST_CASE("join, meet, complement and order on named examples") {
    const Universe u({"p", "q", "r"});
    const Chain c(4);
    const FuzzySet p1 = FuzzySet::crisp(u, c, {"p"});
    const FuzzySet q1 = FuzzySet::crisp(u, c, {"q"});
    const FuzzySet pq = FuzzySet::crisp(u, c, {"p", "q"});
    const FuzzySet zero = FuzzySet::zero(u, c);

    CHECK(p1.join(q1) == pq);
    CHECK(p1.join(zero) == p1);
    CHECK(zero.leq(p1));
    CHECK(p1.leq(pq));

    const FuzzyPoint x_half(u, c, 0, 2);
    const FuzzyPoint x_one(u, c, 0, 4);
    CHECK(x_half.as_set().meet(x_one.as_set()) == x_half.as_set());
    CHECK_FALSE(FuzzyPoint(u, c, 0, 3).as_set().leq(x_half.as_set()));

    CHECK(zero.complement() == FuzzySet::one(u, c));
    // complement of a point: 1 - lambda at the support, 1 elsewhere
    const FuzzySet co = x_half.as_set().complement();
    CHECK(co.value_of("p") == Fraction(1, 2));
    CHECK(co.value_of("q") == Fraction(1, 1));

    const Universe other({"p", "q"});
    CHECK_THROWS_AS(p1.join(FuzzySet::zero(other, c)), StructuralError);
    CHECK_THROWS_AS(p1.join(FuzzySet::zero(u, Chain(2))), StructuralError);
}

TEST_CASE("lattice laws over the exhaustive |X|=2, D=2 carrier") {
    const Universe u = Universe::letters(2);
    const Chain c(2);
    const auto all = enumerate_sets(u, c);
    REQUIRE(all.size() == 9);

    for (const FuzzySet& f : all) {
        CHECK(f.complement().complement() == f);
        // maximal points reconstruct the set
        FuzzySet joined(u, c);
        for (const FuzzyPoint& p : f.maximal_points()) joined = joined.join(p.as_set());
        CHECK(joined == f);
        for (const FuzzySet& g : all) {
            CHECK(f.join(g).complement() == f.complement().meet(g.complement()));
            CHECK(f.meet(g).complement() == f.complement().join(g.complement()));
            if (f.leq(g) && g.leq(f)) CHECK(f == g); // antisymmetry
            CHECK(f.join(g) == g.join(f));
            CHECK(f.join(g).join(f) == f.join(g)); // idempotent absorption
        }
    }
}

TEST_CASE("membership and support") {
    const Universe u({"x", "y", "z"});
    const Chain c(4);
    const FuzzySet x_crisp = FuzzySet::crisp(u, c, {"x"});
    CHECK(x_crisp.contains(FuzzyPoint(u, c, 0, 2)));
    CHECK_FALSE(FuzzyPoint(u, c, 0, 2).as_set().contains(FuzzyPoint(u, c, 0, 3)));

    CHECK(FuzzySet::zero(u, c).support().empty());
    CHECK(FuzzySet::zero(u, c).maximal_points().empty());
    CHECK(FuzzyPoint(u, c, 0, 2).as_set().support_names() == std::vector<std::string>{"x"});
    const FuzzySet mix = FuzzySet::crisp(u, c, {"x", "y"}).join(FuzzyPoint(u, c, 2, 1).as_set());
    CHECK(mix.support_names() == std::vector<std::string>{"x", "y", "z"});

    CHECK(FuzzySet::crisp(u, c, {"x", "y"}).maximal_points().size() == 2);
    CHECK_THROWS_AS(FuzzyPoint(u, c, 0, 0), StructuralError); // value must be positive
    CHECK_THROWS_AS(FuzzyPoint(u, c, 3, 1), StructuralError);
}

TEST_CASE("enumeration is total, deterministic and rank-consistent") {
    CHECK(enumerate_sets(Universe::letters(1), Chain(1)).size() == 2);
    CHECK(enumerate_sets(Universe::letters(2), Chain(2)).size() == 9);
    CHECK(enumerate_sets(Universe::letters(3), Chain(4)).size() == 125);

    const SetEnumeration en(Universe::letters(3), Chain(2));
    for (std::uint64_t r = 0; r < en.size(); ++r) CHECK(en.rank_of(en.at(r)) == r);
    // first element is the least significant digit
    CHECK(en.at(1).value_of("a") == Fraction(1, 2));
    CHECK(en.at(1).value_of("b") == Fraction(0, 1));
    CHECK(en.at(3).value_of("b") == Fraction(1, 2));

    const auto pts = enumerate_points(Universe::letters(2), Chain(2));
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].support() == "a");
    CHECK(pts[0].value() == Fraction(1, 2));
    CHECK(pts[3].support() == "b");
    CHECK(pts[3].value() == Fraction(1, 1));
}

TEST_CASE("carrier budget guards enumeration") {
    CHECK_THROWS_AS(carrier_size_checked(Universe::letters(21), Chain(1)), ResourceError);
    CHECK(carrier_size_checked(Universe::letters(2), Chain(2)) == 9);
}
