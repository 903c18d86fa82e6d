#include "fcs/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "fcs/analysis.hpp"
#include "fcs/constructions.hpp"
#include "fcs/enumerate_spaces.hpp"
#include "fcs/errors.hpp"
#include "fcs/separation.hpp"
#include "fcs/topology.hpp"

namespace fcs {

namespace {

std::uint64_t derived_seed(std::uint64_t base, std::uint64_t tag) {
    // splitmix64 step over base + tag; documented, stable across platforms
    std::uint64_t z = base + tag * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Ctx {
    const SuiteConfig& cfg;
    std::vector<FuzzyClosureSpace> pool; // exhaustive tier then random tier
    std::size_t exhaustive_count = 0;
};

ordered_json space_failure(const FuzzyClosureSpace& s, const std::string& detail) {
    ordered_json out;
    out["detail"] = detail;
    out["space"] = space_document(s);
    return out;
}

// Evaluates fn(i) over [0, n), possibly in parallel; failures are merged in
// index order so the report is identical for any thread count.
void check_indexed(std::uint64_t n, const ExecPolicy& policy, TheoremResult& result,
                   const std::function<std::vector<ordered_json>(std::uint64_t)>& fn) {
    std::vector<std::vector<ordered_json>> slots(n);
    parallel_for_indexed(n, policy, [&](std::uint64_t i) { slots[i] = fn(i); });
    for (auto& s : slots)
        for (auto& f : s) result.failures.push_back(std::move(f));
    result.instances += n;
}

const std::vector<CfAxiom> kHereditaryAxioms = {CfAxiom::T0,      CfAxiom::T1,
                                                CfAxiom::T2,      CfAxiom::Urysohn,
                                                CfAxiom::Regular, CfAxiom::Normal};

// ---------------------------------------------------------------- per-space

std::vector<ordered_json> interior_properties(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    SpaceAnalysis an(s);
    const std::uint64_t n = an.carrier();
    if (an.interior_of(n - 1) != FuzzySet::one(s.universe(), s.chain()))
        fails.push_back(space_failure(s, "int(1) != 1"));
    for (std::uint64_t r = 0; r < n && fails.empty(); ++r) {
        const FuzzySet& f = an.set_at(r);
        const FuzzySet& int_f = an.interior_of(r);
        if (!int_f.leq(f)) fails.push_back(space_failure(s, "int(f) > f at " + f.str()));
        const bool open = s.is_open(f);
        if (open != (int_f == f))
            fails.push_back(space_failure(s, "open <-> int(f)=f fails at " + f.str()));
        bool nbhd_of_all = true;
        for (const FuzzyPoint& p : f.maximal_points())
            nbhd_of_all = nbhd_of_all && int_f.contains(p);
        if (open != nbhd_of_all)
            fails.push_back(space_failure(s, "open <-> neighborhood-of-points fails at " + f.str()));
    }
    for (std::uint64_t r1 = 0; r1 < n && fails.empty(); ++r1)
        for (std::uint64_t r2 = r1; r2 < n; ++r2) {
            const FuzzySet& f = an.set_at(r1);
            const FuzzySet& g = an.set_at(r2);
            const FuzzySet lhs = an.interior_of(an.rank_of(f.meet(g)));
            if (lhs != an.interior_of(r1).meet(an.interior_of(r2))) {
                fails.push_back(space_failure(s, "int(f^g) != int(f)^int(g) at " + f.str() +
                                                     ", " + g.str()));
                break;
            }
            if (f.leq(g) && !an.interior_of(r1).leq(an.interior_of(r2))) {
                fails.push_back(space_failure(s, "interior not monotone at " + f.str()));
                break;
            }
        }
    return fails;
}

std::vector<ordered_json> closure_from_interior_check(const FuzzyClosureSpace& s) {
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (s.closure_from_interior(f) != s.closure(f))
            return {space_failure(s, "closure via interior differs at " + f.str())};
    }
    return {};
}

std::vector<ordered_json> monotone_closure(const FuzzyClosureSpace& s) {
    SpaceAnalysis an(s);
    for (std::uint64_t r1 = 0; r1 < an.carrier(); ++r1)
        for (std::uint64_t r2 = 0; r2 < an.carrier(); ++r2)
            if (an.set_at(r1).leq(an.set_at(r2)) && !an.closure_of(r1).leq(an.closure_of(r2)))
                return {space_failure(s, "closure not monotone at " + an.set_at(r1).str() +
                                             " <= " + an.set_at(r2).str())};
    return {};
}

std::vector<ordered_json> topology_chang(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    const FuzzyTopology t = s.associated_topology();
    if (!t.validated()) fails.push_back(space_failure(s, "tau(c) fails the Chang axioms"));
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size() && fails.empty(); ++r) {
        const FuzzySet f = en.at(r);
        if (t.is_closed(f) != (s.closure(f) == f))
            fails.push_back(space_failure(s, "tau(c) closed sets differ from fixed points"));
    }
    return fails;
}

std::vector<ordered_json> pointwise_generation(const FuzzyClosureSpace& s) {
    if (!s.is_finitely_generated())
        return {space_failure(s, "maximal-point generation identity failed")};
    return {};
}

std::vector<ordered_json> t0_interior_equiv(const FuzzyClosureSpace& s) {
    if (cft0(s).holds != cft0_interior_characterization(s).holds)
        return {space_failure(s, "T0 and its interior characterization disagree")};
    return {};
}

std::vector<ordered_json> t1_equivalences(const FuzzyClosureSpace& s) {
    const bool via_singletons = cft1(s).holds;
    if (cft1_pairwise(s).holds != via_singletons)
        return {space_failure(s, "T1 pairwise definition disagrees with singleton form")};
    bool all_well_closed = true;
    for (const FuzzyPoint& p : enumerate_points(s.universe(), s.chain()))
        all_well_closed = all_well_closed && s.is_well_closed(p);
    if (all_well_closed != via_singletons)
        return {space_failure(s, "well-closed characterization disagrees")};
    if (s.associated_topology().ft_axiom(FtAxiom::FT1).holds != via_singletons)
        return {space_failure(s, "tau(c) FT1 disagrees with T1")};
    return {};
}

std::vector<ordered_json> implication_lattice(const FuzzyClosureSpace& s) {
    try {
        const SeparationReport r = classify(s);
        for (const Verdict& v : r.verdicts)
            if (!v.holds && v.witness && !replay_witness(s, v))
                return {space_failure(s, "witness for " + v.axiom + " does not replay")};
    } catch (const std::logic_error& e) {
        return {space_failure(s, e.what())};
    }
    return {};
}

std::vector<ordered_json> finite_theorems(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    if (cfts(s).holds) {
        SetEnumeration en(s.universe(), s.chain());
        for (std::uint64_t r = 0; r < en.size(); ++r)
            if (s.closure(en.at(r)) != en.at(r)) {
                fails.push_back(space_failure(s, "finite Ts space is not discrete"));
                break;
            }
    }
    if (cft1(s).holds) {
        if (!cft2(s).holds) fails.push_back(space_failure(s, "finite T1 space not T2"));
        if (!cf_urysohn(s).holds) fails.push_back(space_failure(s, "finite T1 space not Urysohn"));
    }
    return fails;
}

std::vector<ordered_json> regular_implies_normal(const FuzzyClosureSpace& s) {
    if (cf_regular(s).holds && !cf_normal(s).holds)
        return {space_failure(s, "point-generated regular space not normal")};
    return {};
}

std::vector<ordered_json> idempotent_bridges(const FuzzyClosureSpace& s) {
    if (!s.is_idempotent()) return {};
    std::vector<ordered_json> fails;
    const FuzzyTopology t = s.associated_topology();
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (t.fts_closure(f) != s.closure(f)) {
            fails.push_back(space_failure(s, "fts closure differs from idempotent closure"));
            break;
        }
    }
    if (cft0(s).holds != t.ft_axiom(FtAxiom::FT0).holds)
        fails.push_back(space_failure(s, "idempotent T0 does not match FT0"));
    if (cf_regular(s).holds != t.ft_axiom(FtAxiom::Regular).holds)
        fails.push_back(space_failure(s, "idempotent regular does not match FT-regular"));
    if (cf_normal(s).holds != t.ft_axiom(FtAxiom::Normal).holds)
        fails.push_back(space_failure(s, "idempotent normal does not match FT-normal"));
    return fails;
}

std::vector<ordered_json> tau_bridges(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    const FuzzyTopology t = s.associated_topology();
    if (t.ft_axiom(FtAxiom::FT0).holds && !cft0(s).holds)
        fails.push_back(space_failure(s, "tau(c) FT0 without T0"));
    if (t.ft_axiom(FtAxiom::FT2).holds && !cft2(s).holds)
        fails.push_back(space_failure(s, "tau(c) FT2 without T2"));
    if (t.ft_axiom(FtAxiom::FT2_5).holds && !cf_urysohn(s).holds)
        fails.push_back(space_failure(s, "tau(c) Urysohn without Urysohn"));
    return fails;
}

std::vector<ordered_json> coarseness_bounds(const FuzzyClosureSpace& s) {
    const FuzzyClosureSpace bottom = FuzzyClosureSpace::indiscrete(s.universe(), s.chain());
    const FuzzyClosureSpace top = FuzzyClosureSpace::discrete(s.universe(), s.chain());
    if (!coarser_leq(bottom, s)) return {space_failure(s, "indiscrete not coarsest")};
    if (!coarser_leq(s, top)) return {space_failure(s, "discrete not finest")};
    return {};
}

std::vector<std::string> primed_names(const Universe& u) {
    std::vector<std::string> names;
    for (const auto& n : u.names()) names.push_back(n + "'");
    return names;
}

std::vector<int> rotation_perm(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    return perm;
}

std::vector<ordered_json> homeo_invariance(const FuzzyClosureSpace& s) {
    const SpaceMap m = relabel_map(s, rotation_perm(s.universe().size()),
                                   primed_names(s.universe()));
    if (!is_cf_homeomorphism(m).holds)
        return {space_failure(s, "relabeling is not a homeomorphism")};
    const SeparationReport a = classify(s);
    const SeparationReport b = classify(m.target());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i)
        if (a.verdicts[i].holds != b.verdicts[i].holds)
            return {space_failure(s, "axiom " + a.verdicts[i].axiom +
                                         " not preserved under relabeling")};
    return {};
}

std::vector<ordered_json> homeo_interior_lemma(const FuzzyClosureSpace& s) {
    const SpaceMap m = relabel_map(s, rotation_perm(s.universe().size()),
                                   primed_names(s.universe()));
    SetEnumeration en(s.universe(), s.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (m.image(s.interior(f)) != m.target().interior(m.image(f)))
            return {space_failure(s, "homeomorphism interior identity fails at " + f.str())};
    }
    return {};
}

std::vector<ordered_json> hereditary(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    const SeparationReport parent = classify(s);
    const int n = s.universe().size();
    for (int mask = 1; mask < (1 << n) && fails.empty(); ++mask) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) names.push_back(s.universe().name(i));
        const FuzzyClosureSpace sub = subspace(s, names);
        if (!sub.validated()) {
            fails.push_back(space_failure(s, "subspace failed validation"));
            break;
        }
        for (CfAxiom a : kHereditaryAxioms)
            if (parent.holds(a) && !decide(sub, a).holds) {
                fails.push_back(space_failure(
                    s, std::string(cf_axiom_name(a)) + " not hereditary on subset"));
                break;
            }
    }
    return fails;
}

std::vector<ordered_json> reduced_vs_naive(const FuzzyClosureSpace& s) {
    std::vector<ordered_json> fails;
    if (cft2(s).holds != cft2_naive(s).holds)
        fails.push_back(space_failure(s, "T2 reduction disagrees with naive search"));
    if (cf_urysohn(s).holds != cf_urysohn_naive(s).holds)
        fails.push_back(space_failure(s, "Urysohn reduction disagrees with naive search"));
    if (cf_regular(s).holds != cf_regular_naive(s).holds)
        fails.push_back(space_failure(s, "regular reduction disagrees with naive search"));
    if (cf_normal(s).holds != cf_normal_naive(s).holds)
        fails.push_back(space_failure(s, "normal reduction disagrees with naive search"));
    return fails;
}

// ------------------------------------------------------------ constructions

FuzzyClosureSpace scale_chain(const FuzzyClosureSpace& s) {
    // Ceiling extension onto the doubled chain: the new level k pulls the old
    // entry at ceil(k/2), memberships doubled.
    const Chain doubled(2 * s.chain().denominator());
    const Universe& u = s.universe();
    return FuzzyClosureSpace::finitely_generated(u, doubled, [&](const FuzzyPoint& p) {
        const int old_level = (p.level_numerator() + 1) / 2;
        const FuzzySet entry = s.closure(FuzzyPoint(u, s.chain(), p.element(), old_level));
        std::vector<int> mem(u.size());
        for (int i = 0; i < u.size(); ++i) mem[i] = 2 * entry.numerator(i);
        return FuzzySet(u, doubled, std::move(mem));
    });
}

} // namespace

std::vector<std::string> theorem_names() {
    return {"interior-properties",
            "closure-from-interior",
            "monotone-closure",
            "associated-topology-chang",
            "pointwise-generation",
            "t0-interior-characterization",
            "t1-equivalences",
            "implication-lattice",
            "finite-theorems",
            "regular-implies-normal",
            "idempotent-bridges",
            "tau-bridges",
            "coarseness-bounds",
            "homeomorphism-invariance",
            "homeo-interior-lemma",
            "hereditary",
            "coarseness-monotone",
            "reduced-vs-naive",
            "enumeration-counts",
            "chain-refinement",
            "continuity-equivalences",
            "continuity-open-preimages",
            "homeo-vs-two-sided",
            "composition-continuity",
            "sum-theorems",
            "sum-interior-lemma",
            "sum-point-closure",
            "product-point-closure",
            "product-closed-form-oracle",
            "product-t0-t1",
            "product-coarsest",
            "random-validate"};
}

namespace {

using PerSpace = std::vector<ordered_json> (*)(const FuzzyClosureSpace&);

void run_per_space(const Ctx& ctx, TheoremResult& out, PerSpace fn, bool exhaustive_only = false) {
    const std::uint64_t n = exhaustive_only ? ctx.exhaustive_count : ctx.pool.size();
    check_indexed(n, ctx.cfg.policy, out,
                  [&](std::uint64_t i) { return fn(ctx.pool[i]); });
}

void run_coarseness_monotone(const Ctx& ctx, TheoremResult& out) {
    const std::uint64_t n = ctx.exhaustive_count;
    // Cache the three monotone axioms per space.
    std::vector<std::array<bool, 3>> bits(n);
    parallel_for_indexed(n, ctx.cfg.policy, [&](std::uint64_t i) {
        bits[i] = {cft0(ctx.pool[i]).holds, cft1(ctx.pool[i]).holds, cft2(ctx.pool[i]).holds};
    });
    check_indexed(n, ctx.cfg.policy, out, [&](std::uint64_t i) -> std::vector<ordered_json> {
        for (std::uint64_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!coarser_leq(ctx.pool[i], ctx.pool[j])) continue;
            static const char* names[3] = {"T0", "T1", "T2"};
            for (int a = 0; a < 3; ++a)
                if (bits[i][a] && !bits[j][a])
                    return {space_failure(ctx.pool[i],
                                          std::string(names[a]) + " lost on a finer operator")};
        }
        return {};
    });
}

void run_enumeration_counts(const Ctx&, TheoremResult& out) {
    struct Tier {
        int n, d;
    };
    for (const Tier t : {Tier{1, 1}, Tier{1, 2}, Tier{2, 1}}) {
        out.instances += 1;
        const Universe u = Universe::letters(t.n);
        const Chain chain(t.d);
        const FgSpaceEnumeration en(u, chain);

        // Brute-force oracle: every raw entry assignment, filtered by the
        // validation axioms.
        SetEnumeration sets(u, chain);
        const int slots = t.n * t.d;
        std::uint64_t assignments = 1;
        for (int i = 0; i < slots; ++i) assignments *= sets.size();
        std::uint64_t valid = 0;
        for (std::uint64_t a = 0; a < assignments; ++a) {
            std::uint64_t rest = a;
            FgOp op;
            op.entries.resize(t.n);
            for (int e = 0; e < t.n; ++e)
                for (int k = 1; k <= t.d; ++k) {
                    op.entries[e].push_back(sets.at(rest % sets.size()));
                    rest /= sets.size();
                }
            if (FuzzyClosureSpace(u, chain, std::move(op)).validated()) ++valid;
        }
        if (valid != en.size()) {
            ordered_json f;
            f["detail"] = "enumeration count mismatch at n=" + std::to_string(t.n) +
                          " d=" + std::to_string(t.d);
            f["enumerated"] = en.size();
            f["oracle"] = valid;
            out.failures.push_back(std::move(f));
        }
        // No duplicates: compare serialized forms pairwise (tiny tiers).
        std::vector<std::string> docs;
        for (std::uint64_t i = 0; i < en.size(); ++i) {
            const FuzzyClosureSpace s = en.at(i);
            if (!s.validated()) {
                out.failures.push_back(space_failure(s, "enumerated space fails validation"));
                continue;
            }
            docs.push_back(serialize_space(s));
        }
        std::sort(docs.begin(), docs.end());
        if (std::adjacent_find(docs.begin(), docs.end()) != docs.end()) {
            ordered_json f;
            f["detail"] = "duplicate space in enumeration";
            out.failures.push_back(std::move(f));
        }
    }
}

void run_chain_refinement(const Ctx& ctx, TheoremResult& out) {
    const std::uint64_t n = ctx.exhaustive_count;
    std::vector<int> agree(n, 0), disagree(n, 0);
    parallel_for_indexed(n, ctx.cfg.policy, [&](std::uint64_t i) {
        const FuzzyClosureSpace& s = ctx.pool[i];
        const FuzzyClosureSpace scaled = scale_chain(s);
        if (!scaled.validated()) return;
        const SeparationReport a = classify(s);
        const SeparationReport b = classify(scaled);
        for (std::size_t v = 0; v < a.verdicts.size(); ++v)
            (a.verdicts[v].holds == b.verdicts[v].holds ? agree[i] : disagree[i])++;
    });
    long long agreed = 0, disagreed = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        agreed += agree[i];
        disagreed += disagree[i];
    }
    out.instances += n;
    // Observational: the doubled-chain embedding is not claimed to preserve
    // the axioms, so disagreements are recorded, not failed.
    out.info["verdicts-agreeing"] = agreed;
    out.info["verdicts-disagreeing"] = disagreed;
}

struct MapSample {
    std::vector<SpaceMap> maps;
};

MapSample make_random_maps(const SuiteConfig& cfg, int count, std::uint64_t tag, bool bijective) {
    MapSample out;
    std::mt19937_64 rng(derived_seed(cfg.seed, tag));
    for (int i = 0; i < count; ++i) {
        FuzzyClosureSpace src = random_fg_space(3, 2, rng());
        FuzzyClosureSpace tgt = random_fg_space(3, 2, rng());
        std::vector<int> ground = bijective ? random_permutation(3, rng) : random_ground(3, 3, rng);
        out.maps.emplace_back(std::move(src), std::move(tgt), std::move(ground));
    }
    return out;
}

ordered_json map_failure(const SpaceMap& m, const std::string& detail) {
    ordered_json out;
    out["detail"] = detail;
    out["map"] = ordered_json::parse(serialize_map(m));
    return out;
}

void run_continuity_equivalences(const Ctx& ctx, TheoremResult& out) {
    const MapSample sample = make_random_maps(ctx.cfg, ctx.cfg.map_samples, 0xA1, false);
    check_indexed(sample.maps.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const SpaceMap& m = sample.maps[i];
                      const bool global = is_cf_continuous(m).holds;
                      if (continuity_via_preimage(m).holds != global)
                          return {map_failure(m, "preimage characterization disagrees")};
                      bool pointwise = true;
                      for (const FuzzyPoint& p :
                           enumerate_points(m.source().universe(), m.source().chain()))
                          pointwise = pointwise && is_cf_continuous_at(m, p).holds;
                      if (pointwise != global)
                          return {map_failure(m, "pointwise continuity disagrees")};
                      return {};
                  });
}

void run_continuity_open_preimages(const Ctx& ctx, TheoremResult& out) {
    const MapSample sample = make_random_maps(ctx.cfg, ctx.cfg.map_samples, 0xA2, false);
    check_indexed(sample.maps.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const SpaceMap& m = sample.maps[i];
                      if (is_cf_continuous(m).holds && !preimage_preserves_open(m))
                          return {map_failure(m, "continuous map with non-open preimage")};
                      return {};
                  });
}

void run_homeo_vs_two_sided(const Ctx& ctx, TheoremResult& out) {
    const MapSample sample = make_random_maps(ctx.cfg, ctx.cfg.bijection_samples, 0xA3, true);
    check_indexed(sample.maps.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const SpaceMap& m = sample.maps[i];
                      try {
                          const bool homeo = is_cf_homeomorphism(m).holds;
                          const bool two = is_cf_continuous(m).holds &&
                                           is_cf_continuous(m.inverse()).holds;
                          if (homeo != two)
                              return {map_failure(m, "homeomorphism routes disagree")};
                      } catch (const StructuralError& e) {
                          return {map_failure(m, e.what())};
                      }
                      return {};
                  });
}

void run_composition_continuity(const Ctx& ctx, TheoremResult& out) {
    std::mt19937_64 rng(derived_seed(ctx.cfg.seed, 0xA4));
    std::vector<std::pair<SpaceMap, SpaceMap>> triples;
    for (int i = 0; i < 30; ++i) {
        FuzzyClosureSpace x = random_fg_space(3, 2, rng());
        SpaceMap first =
            with_induced_target(x, Universe({"u", "v", "w"}), random_ground(3, 3, rng));
        SpaceMap second = with_induced_target(first.target(), Universe({"m", "n", "o"}),
                                              random_ground(3, 3, rng));
        triples.emplace_back(std::move(first), std::move(second));
    }
    check_indexed(triples.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const auto& [first, second] = triples[i];
                      if (!is_cf_continuous(first).holds || !is_cf_continuous(second).holds)
                          return {map_failure(first, "induced map unexpectedly discontinuous")};
                      if (!is_cf_continuous(first.then(second)).holds)
                          return {map_failure(first, "composite of continuous maps discontinuous")};
                      return {};
                  });
}

struct SumSample {
    std::vector<FuzzyClosureSpace> left;   // on {a,b}
    std::vector<FuzzyClosureSpace> right;  // the same operators relabeled to {c,d}
    std::vector<SeparationReport> reports; // per sample index
};

SumSample make_sum_sample(const SuiteConfig& cfg) {
    SumSample out;
    std::mt19937_64 rng(derived_seed(cfg.seed, 0xB1));
    for (int i = 0; i < cfg.sum_sample; ++i) {
        FuzzyClosureSpace s = random_fg_space(2, 2, rng());
        out.right.push_back(relabel_map(s, {0, 1}, {"c", "d"}).target());
        out.reports.push_back(classify(s));
        out.left.push_back(std::move(s));
    }
    return out;
}

void run_sum_theorems(const Ctx& ctx, TheoremResult& out) {
    const SumSample sample = make_sum_sample(ctx.cfg);
    const int n = ctx.cfg.sum_sample;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    check_indexed(pairs.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t k) -> std::vector<ordered_json> {
                      const auto [i, j] = pairs[k];
                      const FuzzyClosureSpace total = sum({sample.left[i], sample.right[j]});
                      if (!total.validated())
                          return {space_failure(total, "sum failed validation")};
                      for (CfAxiom a : kHereditaryAxioms) {
                          const bool expect =
                              sample.reports[i].holds(a) && sample.reports[j].holds(a);
                          if (decide(total, a).holds != expect)
                              return {space_failure(total, std::string("sum theorem fails for ") +
                                                               cf_axiom_name(a))};
                      }
                      return {};
                  });
}

void run_sum_interior_lemma(const Ctx& ctx, TheoremResult& out) {
    const SumSample sample = make_sum_sample(ctx.cfg);
    check_indexed(sample.left.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const FuzzyClosureSpace& a = sample.left[i];
                      const FuzzyClosureSpace& b = sample.right[i];
                      const FuzzyClosureSpace total = sum({a, b});
                      SetEnumeration en(total.universe(), total.chain());
                      for (std::uint64_t r = 0; r < en.size(); ++r) {
                          const FuzzySet f = en.at(r);
                          FuzzySet expected(total.universe(), total.chain());
                          for (const FuzzyClosureSpace* block : {&a, &b}) {
                              const FuzzySet part = restrict_to(
                                  f.meet(FuzzySet::crisp(total.universe(), total.chain(),
                                                         block->universe().names())),
                                  block->universe());
                              expected = expected.join(extend_by_zero(
                                  block->interior(part), total.universe(), total.chain()));
                          }
                          if (total.interior(f) != expected)
                              return {space_failure(total,
                                                    "sum interior lemma fails at " + f.str())};
                      }
                      return {};
                  });
}

void run_sum_point_closure(const Ctx& ctx, TheoremResult& out) {
    const SumSample sample = make_sum_sample(ctx.cfg);
    check_indexed(sample.left.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const FuzzyClosureSpace& a = sample.left[i];
                      const FuzzyClosureSpace& b = sample.right[i];
                      const FuzzyClosureSpace total = sum({a, b});
                      for (const FuzzyPoint& p :
                           enumerate_points(total.universe(), total.chain())) {
                          const FuzzyClosureSpace& block =
                              a.universe().index_of(p.support()) ? a : b;
                          const FuzzySet expected = extend_by_zero(
                              block.closure(FuzzyPoint(block.universe(), block.chain(),
                                                       *block.universe().index_of(p.support()),
                                                       p.level_numerator())),
                              total.universe(), total.chain());
                          if (total.closure(p) != expected)
                              return {space_failure(total, "sum point closure differs")};
                      }
                      return {};
                  });
}

struct ProductSample {
    std::vector<ProductSpace> products;
};

ProductSample make_product_sample(const SuiteConfig& cfg) {
    ProductSample out;
    std::mt19937_64 rng(derived_seed(cfg.seed, 0xC1));
    for (int i = 0; i < cfg.product_pairs; ++i) {
        const int d = (i % 2) ? 2 : 1;
        FuzzyClosureSpace a = random_fg_space(Universe({"a", "b"}), Chain(d), rng());
        FuzzyClosureSpace b = random_fg_space(Universe({"p", "q"}), Chain(d), rng());
        out.products.push_back(product({a, b}));
    }
    return out;
}

void run_product_point_closure(const Ctx& ctx, TheoremResult& out) {
    const ProductSample sample = make_product_sample(ctx.cfg);
    check_indexed(sample.products.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const ProductSpace& p = sample.products[i];
                      for (const FuzzyPoint& pt :
                           enumerate_points(p.space.universe(), p.space.chain())) {
                          std::vector<FuzzySet> factor_closures;
                          for (std::size_t t = 0; t < p.factors.size(); ++t)
                              factor_closures.push_back(p.factors[t].closure(
                                  FuzzyPoint(p.factors[t].universe(), p.space.chain(),
                                             p.coords[pt.element()][t], pt.level_numerator())));
                          if (p.space.closure(pt) != product_min_set(p, factor_closures))
                              return {space_failure(p.space, "product point closure differs "
                                                             "from the factor minimum")};
                      }
                      return {};
                  });
}

void run_product_closed_form(const Ctx& ctx, TheoremResult& out) {
    const ProductSample sample = make_product_sample(ctx.cfg);
    check_indexed(sample.products.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const ProductSpace& p = sample.products[i];
                      SetEnumeration en(p.space.universe(), p.space.chain());
                      for (std::uint64_t r = 0; r < en.size(); ++r) {
                          const FuzzySet f = en.at(r);
                          const FuzzySet closed = p.space.closure(f);
                          for (const FuzzyPoint& pt :
                               enumerate_points(p.space.universe(), p.space.chain()))
                              if (closed.contains(pt) != product_closure_oracle(p, f, pt))
                                  return {space_failure(p.space,
                                                        "closed form disagrees with the "
                                                        "decomposition oracle at " + f.str())};
                      }
                      return {};
                  });

    // Literal decomposition enumeration on the fixed micro instance.
    out.instances += 1;
    std::mt19937_64 rng(derived_seed(ctx.cfg.seed, 0xC2));
    const ProductSpace micro = product({random_fg_space(Universe({"a", "b"}), Chain(1), rng()),
                                        random_fg_space(Universe({"p", "q"}), Chain(1), rng())});
    SetEnumeration en(micro.space.universe(), micro.space.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        for (const FuzzyPoint& pt : enumerate_points(micro.space.universe(), micro.space.chain()))
            if (product_closure_oracle(micro, f, pt) !=
                product_closure_by_decompositions(micro, f, pt, 3)) {
                out.failures.push_back(space_failure(
                    micro.space, "maximal-point reduction disagrees with literal decompositions"));
                return;
            }
    }
}

void run_product_t0_t1(const Ctx& ctx, TheoremResult& out) {
    const ProductSample sample = make_product_sample(ctx.cfg);
    check_indexed(sample.products.size(), ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const ProductSpace& p = sample.products[i];
                      const bool t0_all = cft0(p.factors[0]).holds && cft0(p.factors[1]).holds;
                      if (t0_all && !cft0(p.space).holds)
                          return {space_failure(p.space, "product of T0 factors not T0")};
                      const bool t1_all = cft1(p.factors[0]).holds && cft1(p.factors[1]).holds;
                      if (cft1(p.space).holds != t1_all)
                          return {space_failure(p.space, "product T1 equivalence fails")};
                      return {};
                  });
}

void run_product_coarsest(const Ctx& ctx, TheoremResult& out) {
    std::mt19937_64 rng(derived_seed(ctx.cfg.seed, 0xC3));
    for (int trial = 0; trial < 5; ++trial) {
        const FuzzyClosureSpace a = random_fg_space(Universe({"a", "b"}), Chain(1), rng());
        const FuzzyClosureSpace b = random_fg_space(Universe({"p", "q"}), Chain(1), rng());
        const ProductSpace p = product({a, b});
        SetEnumeration en(p.space.universe(), p.space.chain());
        const FgSpaceEnumeration candidates(p.space.universe(), p.space.chain());
        std::vector<char> bad(candidates.size(), 0);
        parallel_for_indexed(candidates.size(), ctx.cfg.policy, [&](std::uint64_t i) {
            const FuzzyClosureSpace e = candidates.at(i);
            for (std::size_t t = 0; t < p.factors.size(); ++t) {
                std::vector<int> ground(p.space.universe().size());
                for (std::size_t y = 0; y < p.coords.size(); ++y) ground[y] = p.coords[y][t];
                if (!is_cf_continuous(SpaceMap(e, p.factors[t], std::move(ground))).holds)
                    return; // projections not continuous; no constraint
            }
            for (std::uint64_t r = 0; r < en.size(); ++r) {
                const FuzzySet f = en.at(r);
                if (!e.closure(f).leq(p.space.closure(f))) {
                    bad[i] = 1;
                    return;
                }
            }
        });
        out.instances += candidates.size();
        for (std::uint64_t i = 0; i < candidates.size(); ++i)
            if (bad[i]) {
                out.failures.push_back(space_failure(
                    candidates.at(i), "operator with continuous projections exceeds the product"));
                return;
            }
    }
}

void run_random_validate(const Ctx& ctx, TheoremResult& out) {
    check_indexed(ctx.pool.size() - ctx.exhaustive_count, ctx.cfg.policy, out,
                  [&](std::uint64_t i) -> std::vector<ordered_json> {
                      const FuzzyClosureSpace& s = ctx.pool[ctx.exhaustive_count + i];
                      if (!s.validated())
                          return {space_failure(s, "sampled space fails validation")};
                      try {
                          classify(s);
                      } catch (const std::logic_error& e) {
                          return {space_failure(s, e.what())};
                      }
                      return {};
                  });
}

} // namespace

SuiteReport run_theorem_suite(const SuiteConfig& cfg) {
    Ctx ctx{cfg, {}, 0};

    const FgSpaceEnumeration exhaustive(Universe::letters(cfg.exhaustive_n),
                                        Chain(cfg.exhaustive_d));
    ctx.pool.reserve(exhaustive.size() + cfg.samples);
    for (std::uint64_t i = 0; i < exhaustive.size(); ++i) ctx.pool.push_back(exhaustive.at(i));
    ctx.exhaustive_count = ctx.pool.size();
    std::mt19937_64 rng(derived_seed(cfg.seed, 0x51));
    for (int i = 0; i < cfg.samples; ++i)
        ctx.pool.push_back(random_fg_space(cfg.random_n, cfg.random_d, rng()));

    // The micro-random extension for the reduced-vs-naive oracle tier.
    std::vector<FuzzyClosureSpace> micro;
    std::mt19937_64 micro_rng(derived_seed(cfg.seed, 0x52));
    for (int i = 0; i < cfg.micro_random; ++i) micro.push_back(random_fg_space(2, 2, micro_rng()));

    using Runner = std::function<void(const Ctx&, TheoremResult&)>;
    const std::vector<std::pair<std::string, Runner>> registry = {
        {"interior-properties", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, interior_properties); }},
        {"closure-from-interior", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, closure_from_interior_check); }},
        {"monotone-closure", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, monotone_closure); }},
        {"associated-topology-chang", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, topology_chang); }},
        {"pointwise-generation", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, pointwise_generation); }},
        {"t0-interior-characterization", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, t0_interior_equiv); }},
        {"t1-equivalences", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, t1_equivalences); }},
        {"implication-lattice", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, implication_lattice); }},
        {"finite-theorems", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, finite_theorems); }},
        {"regular-implies-normal", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, regular_implies_normal); }},
        {"idempotent-bridges", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, idempotent_bridges); }},
        {"tau-bridges", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, tau_bridges); }},
        {"coarseness-bounds", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, coarseness_bounds); }},
        {"homeomorphism-invariance", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, homeo_invariance); }},
        {"homeo-interior-lemma", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, homeo_interior_lemma, true); }},
        {"hereditary", [](const Ctx& c, TheoremResult& r) { run_per_space(c, r, hereditary, true); }},
        {"coarseness-monotone", run_coarseness_monotone},
        {"reduced-vs-naive",
         [&micro](const Ctx& c, TheoremResult& r) {
             const std::uint64_t n = c.exhaustive_count + micro.size();
             check_indexed(n, c.cfg.policy, r, [&](std::uint64_t i) {
                 const FuzzyClosureSpace& s =
                     i < c.exhaustive_count ? c.pool[i] : micro[i - c.exhaustive_count];
                 return reduced_vs_naive(s);
             });
         }},
        {"enumeration-counts", [](const Ctx& c, TheoremResult& r) { run_enumeration_counts(c, r); }},
        {"chain-refinement", run_chain_refinement},
        {"continuity-equivalences", run_continuity_equivalences},
        {"continuity-open-preimages", run_continuity_open_preimages},
        {"homeo-vs-two-sided", run_homeo_vs_two_sided},
        {"composition-continuity", run_composition_continuity},
        {"sum-theorems", run_sum_theorems},
        {"sum-interior-lemma", run_sum_interior_lemma},
        {"sum-point-closure", run_sum_point_closure},
        {"product-point-closure", run_product_point_closure},
        {"product-closed-form-oracle", run_product_closed_form},
        {"product-t0-t1", run_product_t0_t1},
        {"product-coarsest", run_product_coarsest},
        {"random-validate", run_random_validate},
        // Not part of the default selection: deliberately reports a failure
        // with a replayable witness, so tests can verify the failure path.
        {"self-test-failure",
         [](const Ctx& c, TheoremResult& r) {
             r.instances += 1;
             r.failures.push_back(space_failure(c.pool.front(), "deliberate self-test failure"));
         }},
    };

    const auto selected = [&](const std::string& name) {
        if (cfg.theorems.empty()) return name != "self-test-failure";
        return std::find(cfg.theorems.begin(), cfg.theorems.end(), name) != cfg.theorems.end();
    };
    for (const std::string& name : cfg.theorems) {
        bool known = false;
        for (const auto& [n, fn] : registry) known = known || n == name;
        if (!known) throw StructuralError("unknown theorem: " + name);
    }

    SuiteReport report;
    report.config = cfg;
    for (const auto& [name, fn] : registry) {
        if (!selected(name)) continue;
        TheoremResult result;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        fn(ctx, result);
        result.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        report.passed = report.passed && result.passed();
        report.results.push_back(std::move(result));
    }
    return report;
}

ordered_json suite_report_to_json(const SuiteReport& report) {
    ordered_json cfg;
    cfg["exhaustive_n"] = report.config.exhaustive_n;
    cfg["exhaustive_d"] = report.config.exhaustive_d;
    cfg["random_n"] = report.config.random_n;
    cfg["random_d"] = report.config.random_d;
    cfg["samples"] = report.config.samples;
    cfg["seed"] = report.config.seed;
    cfg["map_samples"] = report.config.map_samples;
    cfg["bijection_samples"] = report.config.bijection_samples;
    cfg["sum_sample"] = report.config.sum_sample;
    cfg["product_pairs"] = report.config.product_pairs;
    cfg["micro_random"] = report.config.micro_random;
    if (!report.config.theorems.empty()) cfg["theorems"] = report.config.theorems;

    ordered_json out;
    out["config"] = std::move(cfg);
    ordered_json results = ordered_json::array();
    for (const TheoremResult& r : report.results) {
        ordered_json rj;
        rj["name"] = r.name;
        rj["instances"] = r.instances;
        rj["passed"] = r.passed();
        if (!r.failures.empty()) rj["failures"] = r.failures;
        if (!r.info.empty()) rj["info"] = r.info;
        results.push_back(std::move(rj));
    }
    out["results"] = std::move(results);
    out["passed"] = report.passed;
    return out;
}

} // namespace fcs
