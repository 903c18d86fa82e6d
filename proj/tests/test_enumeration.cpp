#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/io.hpp"

using namespace fcs;

namespace {

// Brute-force filter oracle: count raw point-closure assignments that pass
// the validation axioms.
std::uint64_t filtered_assignment_count(int n, int d) {
    const Universe u = Universe::letters(n);
    const Chain chain(d);
    SetEnumeration sets(u, chain);
    const int slots = n * d;
    std::uint64_t assignments = 1;
    for (int i = 0; i < slots; ++i) assignments *= sets.size();
    std::uint64_t valid = 0;
    for (std::uint64_t a = 0; a < assignments; ++a) {
        std::uint64_t rest = a;
        FgOp op;
        op.entries.resize(n);
        for (int e = 0; e < n; ++e)
            for (int k = 1; k <= d; ++k) {
                op.entries[e].push_back(sets.at(rest % sets.size()));
                rest /= sets.size();
            }
        if (FuzzyClosureSpace(u, chain, std::move(op)).validated()) ++valid;
    }
    return valid;
}

} // namespace

TEST_CASE("family sizes match the brute-force filter oracle") {
    CHECK(FgSpaceEnumeration(Universe::letters(1), Chain(1)).size() == 1);
    CHECK(FgSpaceEnumeration(Universe::letters(1), Chain(1)).size() ==
          filtered_assignment_count(1, 1));
    CHECK(FgSpaceEnumeration(Universe::letters(1), Chain(2)).size() ==
          filtered_assignment_count(1, 2));
    CHECK(FgSpaceEnumeration(Universe::letters(2), Chain(1)).size() ==
          filtered_assignment_count(2, 1));
    CHECK(FgSpaceEnumeration(Universe::letters(2), Chain(2)).size() == 144);
}

TEST_CASE("every enumerated space validates, with no duplicates") {
    const FgSpaceEnumeration en(Universe::letters(2), Chain(2));
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        const FuzzyClosureSpace s = en.at(i);
        CHECK(s.validated());
        CHECK(seen.insert(serialize_space(s)).second);
    }
    CHECK(seen.size() == en.size());
    CHECK_THROWS_AS(en.at(en.size()), StructuralError);
}

TEST_CASE("random spaces are deterministic per seed and always valid") {
    const FuzzyClosureSpace a = random_fg_space(3, 4, 12345);
    const FuzzyClosureSpace b = random_fg_space(3, 4, 12345);
    CHECK(serialize_space(a) == serialize_space(b));
    CHECK(serialize_space(a) != serialize_space(random_fg_space(3, 4, 54321)));

    for (int i = 0; i < 200; ++i) CHECK(random_fg_space(3, 4, 7000 + i).validated());
}

TEST_CASE("table enumeration reaches exactly the same closure functions") {
    // On a finite carrier every valid operator is point-generated, so the
    // axiom-filtered table scan and the point-closure family must produce the
    // same set of closure functions.
    const Universe u = Universe::letters(2);
    const Chain chain(1);
    std::set<std::vector<std::uint64_t>> table_functions;
    SetEnumeration sets(u, chain);
    enumerate_table_spaces(u, chain, [&](const FuzzyClosureSpace& s) {
        std::vector<std::uint64_t> fn;
        for (std::uint64_t r = 0; r < sets.size(); ++r)
            fn.push_back(sets.rank_of(s.closure(sets.at(r))));
        table_functions.insert(fn);
    });
    std::set<std::vector<std::uint64_t>> fg_functions;
    const FgSpaceEnumeration en(u, chain);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        const FuzzyClosureSpace s = en.at(i);
        std::vector<std::uint64_t> fn;
        for (std::uint64_t r = 0; r < sets.size(); ++r)
            fn.push_back(sets.rank_of(s.closure(sets.at(r))));
        fg_functions.insert(fn);
    }
    CHECK(table_functions == fg_functions);
    CHECK(table_functions.size() == en.size());

    CHECK_THROWS_AS(enumerate_table_spaces(Universe::letters(2), Chain(3), [](const auto&) {}),
                    ResourceError);
}

TEST_CASE("random grounds and permutations are reproducible") {
    std::mt19937_64 a(1), b(1);
    CHECK(random_ground(5, 3, a) == random_ground(5, 3, b));
    CHECK(random_permutation(6, a) == random_permutation(6, b));
    std::mt19937_64 c(2);
    const auto perm = random_permutation(6, c);
    std::vector<bool> hit(6, false);
    for (int v : perm) {
        CHECK(v >= 0);
        CHECK(v < 6);
        CHECK_FALSE(hit[v]);
        hit[v] = true;
    }
}
