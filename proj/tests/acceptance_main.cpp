// Acceptance runner: golden-example reproduction plus the property suites,
// one line per criterion. Exact arithmetic throughout; zero tolerance on all
// equality checks. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "fcs/constructions.hpp"
#include "fcs/corpus.hpp"
#include "fcs/enumerate_spaces.hpp"
#include "fcs/maps.hpp"
#include "fcs/search.hpp"
#include "fcs/separation.hpp"
#include "fcs/suite.hpp"
#include "fcs/topology.hpp"

using namespace fcs;

namespace {

int failures = 0;

void criterion(const std::string& id, const std::function<bool()>& check) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = check();
    } catch (const std::exception& e) {
        note = std::string("  [exception: ") + e.what() + "]";
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (ok ? "PASS " : "FAIL ") << id << "  (" << static_cast<long long>(ms) << " ms)"
              << note << "\n";
    if (!ok) ++failures;
}

bool expect(bool condition, const char* what) {
    if (!condition) std::cout << "       mismatch: " << what << "\n";
    return condition;
}

// 1a. Full interior table of the collapsing three-point example: 1 -> 1,
//     everything above the crisp {q,r} keeps exactly 1_{r}, all else drops
//     to 0. Checked for every set at D = 1, 2 and 4 (125 sets).
bool golden_pqr_interior() {
    for (int d : {1, 2, 4}) {
        const FuzzyClosureSpace s = corpus::pqr_interior(d);
        const FuzzySet one = FuzzySet::one(s.universe(), s.chain());
        const FuzzySet qr = FuzzySet::crisp(s.universe(), s.chain(), {"q", "r"});
        const FuzzySet r_only = FuzzySet::crisp(s.universe(), s.chain(), {"r"});
        SetEnumeration en(s.universe(), s.chain());
        for (std::uint64_t rk = 0; rk < en.size(); ++rk) {
            const FuzzySet f = en.at(rk);
            const FuzzySet expected = f.is_one() ? one : (qr.leq(f) ? r_only : FuzzySet::zero(s.universe(), s.chain()));
            if (s.interior(f) != expected) return expect(false, "interior table entry");
        }
        if (d == 4 && en.size() != 125) return expect(false, "125 sets at D=4");
    }
    return true;
}

// 1b. The four-cycle self-map: discontinuous with minimal witness 1_{q}
//     (image of the closure reaches p, the closure of the image is 1_{r,s}),
//     while preimages of opens and closed sets stay open and closed.
bool golden_cycle4() {
    const SpaceMap rot = corpus::cycle4_rotation(1);
    const Universe& u = rot.source().universe();
    const Chain& c = rot.source().chain();
    const Verdict v = is_cf_continuous(rot);
    bool ok = expect(!v.holds, "rotation must be discontinuous");
    ok = ok && expect(v.witness.has_value(), "witness present");
    ok = ok && expect(v.witness->sets.at(0).second == FuzzySet::crisp(u, c, {"q"}),
                      "witness set is 1_q");
    ok = ok && expect(v.witness->sets.at(1).second == FuzzySet::crisp(u, c, {"p", "r"}),
                      "image of closure is 1_{p,r}");
    ok = ok && expect(v.witness->sets.at(2).second == FuzzySet::crisp(u, c, {"r", "s"}),
                      "closure of image is 1_{r,s}");
    ok = ok && expect(preimage_preserves_open(rot), "open preimages preserved");
    return ok;
}

// 1c. Three-cycle: T0 holds while the associated topology is {0, 1} and
//     fails FT0.
bool golden_cycle3() {
    const FuzzyClosureSpace s = corpus::cycle3_xyz(2);
    bool ok = expect(cft0(s).holds, "T0");
    const FuzzyTopology t = s.associated_topology();
    ok = ok && expect(t.opens().size() == 2, "two opens");
    ok = ok && expect(t.opens().front().is_zero() && t.opens().back().is_one(), "opens are 0,1");
    ok = ok && expect(!t.ft_axiom(FtAxiom::FT0).holds, "FT0 fails");
    return ok;
}

// 1d. The half-step lift space at n=2, D=20: T1, T2 and Urysohn hold;
//     neither regularity variant nor Ts does. Point interiors drop by 1/2
//     for 1/2 < lambda < 1; the full singleton is open.
bool golden_urysohn() {
    const FuzzyClosureSpace s = corpus::urysohn_not_regular(2, 20);
    const SeparationReport r = classify(s);
    bool ok = expect(r.holds(CfAxiom::T1), "T1");
    ok = ok && expect(r.holds(CfAxiom::T2), "T2");
    ok = ok && expect(r.holds(CfAxiom::Urysohn), "Urysohn");
    ok = ok && expect(!r.holds(CfAxiom::Regular), "not regular");
    ok = ok && expect(!r.holds(CfAxiom::MashhourRegular), "not sandwich-regular");
    ok = ok && expect(!r.holds(CfAxiom::Ts), "not Ts");
    const int d = 20;
    for (int k = d / 2 + 1; k <= d; ++k) {
        const FuzzySet inner = s.interior(FuzzyPoint(s.universe(), s.chain(), 0, k).as_set());
        const FuzzySet expected =
            (k < d) ? FuzzyPoint(s.universe(), s.chain(), 0, k - d / 2).as_set()
                    : FuzzyPoint(s.universe(), s.chain(), 0, d).as_set();
        if (inner != expected) return expect(false, "interior of x_lambda");
    }
    return ok;
}

// 1e. Two-block space is normal; the three-cycle shift is normal but not
//     regular.
bool golden_normal_examples() {
    bool ok = expect(cf_normal(corpus::two_block_normal(3, 2)).holds, "two-block normal");
    const FuzzyClosureSpace cyc = corpus::shift_cycle(3, 2);
    ok = ok && expect(cf_normal(cyc).holds, "cycle shift normal");
    ok = ok && expect(!cf_regular(cyc).holds, "cycle shift not regular");
    return ok;
}

bool suite_selection(const std::vector<std::string>& theorems, std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.theorems = theorems;
    const SuiteReport report = run_theorem_suite(cfg);
    for (const TheoremResult& r : report.results)
        if (!r.passed()) {
            std::cout << "       theorem failed: " << r.name << "\n";
            return false;
        }
    return true;
}

// 2. Exhaustive theorem battery over every point-generated space at n=2,
//    D=2 (plus the seeded random tier the suite always carries).
bool exhaustive_suite() {
    return suite_selection(
        {"interior-properties", "closure-from-interior", "monotone-closure",
         "associated-topology-chang", "pointwise-generation", "t0-interior-characterization",
         "t1-equivalences", "implication-lattice", "finite-theorems", "regular-implies-normal",
         "idempotent-bridges", "tau-bridges", "coarseness-bounds", "homeomorphism-invariance",
         "homeo-interior-lemma", "hereditary", "coarseness-monotone", "random-validate"},
        2024);
}

// 3. Construction battery: sum theorems and the interior lemma, product
//    point closures, product T0/T1, the closed form against the
//    decomposition oracle, and the coarsest-product property.
bool construction_suite() {
    return suite_selection({"sum-theorems", "sum-interior-lemma", "sum-point-closure",
                            "product-point-closure", "product-closed-form-oracle",
                            "product-t0-t1", "product-coarsest"},
                           2025);
}

// 4. Equivalence oracles: reduced deciders against naive pair enumeration,
//    the three continuity characterizations, and homeomorphism against
//    two-sided continuity.
bool oracle_suite() {
    return suite_selection(
        {"reduced-vs-naive", "continuity-equivalences", "homeo-vs-two-sided"}, 2026);
}

// 5. Non-implication searches end with the predicted outcomes.
bool searches() {
    const ExecPolicy policy;
    const SearchOutcome a = search_counterexample("t0_implies_t1", {3, 1, false}, policy);
    bool ok = expect(a.found, "T0 without T1 exists at n<=3, D=1");
    const SearchOutcome b = search_counterexample("t1_implies_t2", {2, 2, false}, policy);
    ok = ok && expect(!b.found, "T1 forces T2 on finite carriers");
    const SearchOutcome c = search_counterexample("normal_implies_regular", {3, 2, false}, policy);
    ok = ok && expect(c.found, "normal without regular exists");
    const SearchOutcome d = search_counterexample("regular_implies_ts", {2, 2, false}, policy);
    ok = ok && expect(d.found, "regular without Ts exists");
    // the crisp singleton-closure space is such a witness itself
    const FuzzyClosureSpace sc = corpus::singleton_closure(3, 2);
    ok = ok && expect(cf_regular(sc).holds && !cfts(sc).holds, "singleton-closure qualifies");
    return ok;
}

// 6. Determinism: identical seeds give byte-identical reports, and parallel
//    runs agree with the serial reference.
bool determinism() {
    SuiteConfig cfg;
    cfg.samples = 60;
    cfg.seed = 31415;
    const std::string first = suite_report_to_json(run_theorem_suite(cfg)).dump(2);
    const std::string again = suite_report_to_json(run_theorem_suite(cfg)).dump(2);
    cfg.policy = ExecPolicy::serial();
    const std::string serial = suite_report_to_json(run_theorem_suite(cfg)).dump(2);
    return expect(first == again, "rerun identical") &&
           expect(first == serial, "serial run identical");
}

} // namespace

int main() {
    criterion("1a-pqr-interior-table", golden_pqr_interior);
    criterion("1b-cycle4-discontinuous-map", golden_cycle4);
    criterion("1c-cycle3-T0-indiscrete-topology", golden_cycle3);
    criterion("1d-half-step-lift-classification", golden_urysohn);
    criterion("1e-normal-examples", golden_normal_examples);
    criterion("2-exhaustive-theorem-suite", exhaustive_suite);
    criterion("3-construction-suite", construction_suite);
    criterion("4-equivalence-oracles", oracle_suite);
    criterion("5-counterexample-searches", searches);
    criterion("6-harness-determinism", determinism);
    if (failures == 0) std::cout << "acceptance: all criteria passed\n";
    else std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
