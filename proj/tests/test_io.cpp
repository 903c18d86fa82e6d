#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fcs/corpus.hpp"
#include "fcs/errors.hpp"
#include "fcs/io.hpp"
#include "fcs/topology.hpp"

using namespace fcs;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path fixture_dir() { return FCS_FIXTURE_DIR; }

} // namespace

TEST_CASE("fixtures round-trip byte-identically") {
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) {
        if (entry.path().extension() != ".json") continue;
        const std::string text = slurp(entry.path());
        INFO(entry.path().filename().string());
        if (is_map_document(text)) {
            CHECK(serialize_map(parse_map(text)) == text);
        } else {
            CHECK(serialize_space(parse_space(text)) == text);
        }
    }
}

TEST_CASE("corpus examples serialize to their shipped fixtures") {
    using corpus::ExampleId;
    const std::vector<std::pair<std::string, ExampleId>> expected = {
        {"discrete_2_2.json", {"discrete", 2, 2}},
        {"indiscrete_2_2.json", {"indiscrete", 2, 2}},
        {"pqr_interior_d4.json", {"pqr_interior", {}, 4}},
        {"cycle3_xyz_d2.json", {"cycle3_xyz", {}, 2}},
        {"cycle4_pqrs_d1.json", {"cycle4_pqrs", {}, 1}},
        {"shift_path_4_d2.json", {"shift_path", 4, 2}},
        {"shift_cycle_3_d2.json", {"shift_cycle", 3, 2}},
        {"urysohn_not_regular_2_20.json", {"urysohn_not_regular", 2, 20}},
        {"singleton_closure_3_d2.json", {"singleton_closure", 3, 2}},
        {"two_block_normal_3_d2.json", {"two_block_normal", 3, 2}},
    };
    for (const auto& [file, id] : expected) {
        INFO(file);
        CHECK(serialize_space(corpus::build_example(id)) == slurp(fixture_dir() / file));
    }
}

TEST_CASE("parsing the three-cycle fixture gives its closures back") {
    const FuzzyClosureSpace s = parse_space(slurp(fixture_dir() / "cycle3_xyz_d2.json"));
    const FuzzySet xy = FuzzySet::crisp(s.universe(), s.chain(), {"x", "y"});
    CHECK(s.closure(FuzzyPoint(s.universe(), s.chain(), 0, 1)) == xy);
    CHECK(s.closure(FuzzyPoint(s.universe(), s.chain(), 0, 2)) == xy);
}

TEST_CASE("non-canonical inputs canonicalize idempotently") {
    // unordered keys, unreduced fractions, missing zero memberships
    const std::string text = R"({
      "format": 1,
      "universe": ["x", "y"],
      "denominator": 4,
      "operator": {
        "kind": "finitely_generated",
        "entries": {
          "y": {"1": {"y": "4/4"}, "3/4": {"y": "3/4"}, "2/4": {"y": "2/4"}, "1/4": {"y": "1/4"}},
          "x": {"1/4": {"x": "1/4", "y": "0"}, "1/2": {"x": "1/2"}, "3/4": {"x": "3/4"}, "1": {"x": "1"}}
        }
      }
    })";
    const std::string canonical = serialize_space(parse_space(text));
    CHECK(canonical == serialize_space(parse_space(canonical)));
    CHECK(canonical.find("2/4") == std::string::npos);
}

TEST_CASE("documents with malformed pieces are rejected with structural errors") {
    CHECK_THROWS_AS(parse_space("{ not json"), StructuralError);
    CHECK_THROWS_AS(parse_space("{}"), StructuralError);
    CHECK_THROWS_AS(parse_space(R"({"format": 3})"), StructuralError);

    const std::string base = R"({
      "format": 1, "universe": ["x"], "denominator": 2,
      "operator": {"kind": "named", "name": "discrete"}})";
    CHECK(parse_space(base).validated());

    // membership outside [0,1]
    const std::string bad_value = R"({
      "format": 1, "universe": ["x"], "denominator": 4,
      "operator": {"kind": "finitely_generated", "entries": {
        "x": {"1/4": {"x": "5/4"}, "1/2": {"x": "1/2"}, "3/4": {"x": "3/4"}, "1": {"x": "1"}}}}})";
    CHECK_THROWS_AS(parse_space(bad_value), StructuralError);

    // off-chain membership
    const std::string off_chain = R"({
      "format": 1, "universe": ["x"], "denominator": 2,
      "operator": {"kind": "finitely_generated", "entries": {
        "x": {"1/2": {"x": "1/3"}, "1": {"x": "1"}}}}})";
    CHECK_THROWS_AS(parse_space(off_chain), StructuralError);

    // unknown element in a membership object
    const std::string stray = R"({
      "format": 1, "universe": ["x"], "denominator": 1,
      "operator": {"kind": "finitely_generated", "entries": {
        "x": {"1": {"x": "1", "zz": "1"}}}}})";
    CHECK_THROWS_AS(parse_space(stray), StructuralError);

    // axiom-violating table embeds a validation report
    const std::string invalid = R"({
      "format": 1, "universe": ["p", "q"], "denominator": 1,
      "operator": {"kind": "table", "entries": [
        {"set": {"p": "0", "q": "0"}, "closure": {"p": "0", "q": "0"}},
        {"set": {"p": "1", "q": "0"}, "closure": {"p": "0", "q": "1"}},
        {"set": {"p": "0", "q": "1"}, "closure": {"p": "0", "q": "1"}},
        {"set": {"p": "1", "q": "1"}, "closure": {"p": "1", "q": "1"}}]}})";
    try {
        parse_space(invalid);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK_FALSE(e.report.passed);
        CHECK(e.report.violations.front().axiom == "expansive");
    }

    // incomplete tables
    const std::string partial = R"({
      "format": 1, "universe": ["p"], "denominator": 1,
      "operator": {"kind": "table", "entries": [
        {"set": {"p": "0"}, "closure": {"p": "0"}}]}})";
    CHECK_THROWS_AS(parse_space(partial), StructuralError);
}

TEST_CASE("map documents parse and reject nonsense") {
    const std::string text = slurp(fixture_dir() / "cycle4_rotation_d1.json");
    const SpaceMap m = parse_map(text);
    CHECK(m.apply(m.source().universe().require("p")) == m.target().universe().require("q"));
    CHECK_THROWS_AS(parse_map(slurp(fixture_dir() / "cycle3_xyz_d2.json")), StructuralError);
    CHECK(is_map_document(text));
    CHECK_FALSE(is_map_document(slurp(fixture_dir() / "cycle3_xyz_d2.json")));
}

TEST_CASE("map serialization embeds distinct targets") {
    const FuzzyClosureSpace a = corpus::discrete(2, 2);
    const FuzzyClosureSpace b = corpus::indiscrete(2, 2);
    const SpaceMap m(a, b, {0, 1});
    const std::string text = serialize_map(m);
    const SpaceMap back = parse_map(text);
    CHECK(serialize_map(back) == text);
    CHECK(back.target().op().index() == m.target().op().index());
}

TEST_CASE("set expressions") {
    const Universe u({"p", "q"});
    const Chain c(4);
    CHECK(parse_set_expression("0", u, c).is_zero());
    CHECK(parse_set_expression("1", u, c).is_one());
    const FuzzySet f = parse_set_expression(R"({"q": "3/4"})", u, c);
    CHECK(f.value_of("p") == Fraction::zero());
    CHECK(f.value_of("q") == Fraction(3, 4));
    CHECK_THROWS_AS(parse_set_expression(R"({"q": 0.5})", u, c), StructuralError);
    CHECK_THROWS_AS(parse_set_expression(R"({"q": "7/4"})", u, c), StructuralError);
}

TEST_CASE("table operators round-trip through documents") {
    const FuzzyTopology t = corpus::cycle3_xyz(1).associated_topology();
    const FuzzyClosureSpace wrapped = t.as_closure_space();
    const std::string text = serialize_space(wrapped);
    const FuzzyClosureSpace back = parse_space(text);
    SetEnumeration en(wrapped.universe(), wrapped.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r)
        CHECK(back.closure(en.at(r)) == wrapped.closure(en.at(r)));
    CHECK(serialize_space(back) == text);
}
