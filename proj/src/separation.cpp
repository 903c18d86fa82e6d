#include "fcs/separation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fcs/errors.hpp"

namespace fcs {

const char* cf_axiom_name(CfAxiom a) {
    switch (a) {
        case CfAxiom::T0: return "T0";
        case CfAxiom::T1: return "T1";
        case CfAxiom::Ts: return "Ts";
        case CfAxiom::T2: return "T2";
        case CfAxiom::Urysohn: return "Urysohn";
        case CfAxiom::Regular: return "Regular";
        case CfAxiom::MashhourRegular: return "MashhourRegular";
        case CfAxiom::Normal: return "Normal";
        case CfAxiom::T3: return "T3";
        case CfAxiom::T4: return "T4";
    }
    return "?";
}

CfAxiom cf_axiom_from_name(const std::string& name) {
    std::string low;
    for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "t0") return CfAxiom::T0;
    if (low == "t1") return CfAxiom::T1;
    if (low == "ts") return CfAxiom::Ts;
    if (low == "t2") return CfAxiom::T2;
    if (low == "urysohn" || low == "t2.5") return CfAxiom::Urysohn;
    if (low == "regular") return CfAxiom::Regular;
    if (low == "mashhourregular" || low == "mashhour_regular") return CfAxiom::MashhourRegular;
    if (low == "normal") return CfAxiom::Normal;
    if (low == "t3") return CfAxiom::T3;
    if (low == "t4") return CfAxiom::T4;
    throw StructuralError("unknown separation axiom: " + name);
}

namespace {

// Membership of the point (element e, level k) in a set, as numerators.
bool point_in(const FuzzySet& f, int e, int k) { return k <= f.numerator(e); }

Witness pair_witness(const FuzzyPoint& x, const FuzzyPoint& y) {
    Witness w;
    w.points.emplace_back("x_lambda", x);
    w.points.emplace_back("y_gamma", y);
    return w;
}

// T0 instance: one of the two points lies in the complement of the other's
// closure.
bool t0_pair_ok(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    const int d = an.space().chain().denominator();
    return xl <= d - an.point_closure(ye, yl).numerator(xe) ||
           yl <= d - an.point_closure(xe, xl).numerator(ye);
}

bool t1_pair_ok(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    const int d = an.space().chain().denominator();
    return xl <= d - an.point_closure(ye, yl).numerator(xe) &&
           yl <= d - an.point_closure(xe, xl).numerator(ye);
}

// T0 interior characterization: some f has one point interior to it and the
// other inside its complement.
bool t0_interior_pair_ok(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    const int d = an.space().chain().denominator();
    for (std::uint64_t f = 0; f < an.carrier(); ++f) {
        const FuzzySet& fset = an.set_at(f);
        const FuzzySet& int_f = an.interior_of(f);
        if ((point_in(int_f, xe, xl) && yl <= d - fset.numerator(ye)) ||
            (point_in(int_f, ye, yl) && xl <= d - fset.numerator(xe)))
            return true;
    }
    return false;
}

// The largest T2 first coordinate for a given g: f = Co(g) ^ Co(y_gamma).
FuzzySet t2_candidate(const SpaceAnalysis& an, std::uint64_t g, int ye, int yl) {
    const FuzzyClosureSpace& s = an.space();
    const int d = s.chain().denominator();
    const FuzzySet& gset = an.set_at(g);
    std::vector<int> mem(s.universe().size());
    for (int e = 0; e < s.universe().size(); ++e) mem[e] = d - gset.numerator(e);
    mem[ye] = std::min(mem[ye], d - yl);
    return FuzzySet(s.universe(), s.chain(), std::move(mem));
}

// T2 instance via the complement-witness reduction: scan g, take the largest
// candidate f; returns the witnessing g.
std::optional<std::uint64_t> t2_pair_g(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    const int d = an.space().chain().denominator();
    for (std::uint64_t g = 0; g < an.carrier(); ++g) {
        if (an.set_at(g).numerator(xe) > d - xl) continue;  // g <= Co(x_lambda)
        if (!point_in(an.interior_of(g), ye, yl)) continue; // y_gamma <= int(g)
        const FuzzySet f = t2_candidate(an, g, ye, yl);
        if (point_in(an.interior_of(an.rank_of(f)), xe, xl)) return g;
    }
    return std::nullopt;
}

bool t2_pair_ok(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    return t2_pair_g(an, xe, xl, ye, yl).has_value();
}

// The largest f whose closure avoids c(g) and which respects Co(y_gamma):
// the join of every point with both properties.
FuzzySet urysohn_candidate(const SpaceAnalysis& an, std::uint64_t g, int ye, int yl) {
    const FuzzyClosureSpace& s = an.space();
    const int d = s.chain().denominator();
    const FuzzySet closure_bound = an.closure_of(g).complement();
    std::vector<int> mem(s.universe().size(), 0);
    for (int e = 0; e < s.universe().size(); ++e) {
        const int cap = (e == ye) ? d - yl : d;
        for (int k = cap; k >= 1; --k) {
            if (an.point_closure(e, k).leq(closure_bound)) {
                mem[e] = k;
                break;
            }
        }
    }
    return FuzzySet(s.universe(), s.chain(), std::move(mem));
}

std::optional<std::uint64_t> urysohn_pair_g(const SpaceAnalysis& an, int xe, int xl, int ye,
                                            int yl) {
    const int d = an.space().chain().denominator();
    for (std::uint64_t g = 0; g < an.carrier(); ++g) {
        if (an.set_at(g).numerator(xe) > d - xl) continue;
        if (!point_in(an.interior_of(g), ye, yl)) continue;
        const FuzzySet f = urysohn_candidate(an, g, ye, yl);
        if (point_in(an.interior_of(an.rank_of(f)), xe, xl)) return g;
    }
    return std::nullopt;
}

bool urysohn_pair_ok(const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
    return urysohn_pair_g(an, xe, xl, ye, yl).has_value();
}

// Regular instance for (x_lambda, k): a neighborhood g of k with
// x_lambda <= int(Co(g)) = Co(c(g)); returns the witnessing g.
std::optional<std::uint64_t> regular_instance_g(const SpaceAnalysis& an, int xe, int xl,
                                                std::uint64_t k_rank) {
    const int d = an.space().chain().denominator();
    const FuzzySet& k = an.set_at(k_rank);
    for (std::uint64_t g = 0; g < an.carrier(); ++g) {
        if (!k.leq(an.interior_of(g))) continue;
        if (xl <= d - an.closure_of(g).numerator(xe)) return g;
    }
    return std::nullopt;
}

bool regular_instance_ok(const SpaceAnalysis& an, int xe, int xl, std::uint64_t k_rank) {
    return regular_instance_g(an, xe, xl, k_rank).has_value();
}

bool mashhour_instance_ok(const SpaceAnalysis& an, int xe, int xl, std::uint64_t k_rank) {
    const FuzzySet& int_k = an.interior_of(k_rank);
    for (std::uint64_t f = 0; f < an.carrier(); ++f) {
        if (!point_in(an.interior_of(f), xe, xl)) continue;
        if (an.closure_of(f).leq(int_k)) return true;
    }
    return false;
}

std::optional<std::uint64_t> normal_instance_f2(const SpaceAnalysis& an, std::uint64_t k1_rank,
                                                std::uint64_t k2_rank) {
    const FuzzySet& k1 = an.set_at(k1_rank);
    const FuzzySet& k2 = an.set_at(k2_rank);
    for (std::uint64_t f2 = 0; f2 < an.carrier(); ++f2) {
        if (!k2.leq(an.interior_of(f2))) continue;
        if (k1.leq(an.closure_of(f2).complement())) return f2;
    }
    return std::nullopt;
}

bool normal_instance_ok(const SpaceAnalysis& an, std::uint64_t k1_rank, std::uint64_t k2_rank) {
    return normal_instance_f2(an, k1_rank, k2_rank).has_value();
}

// Iterates distinct-support point pairs in witness order and returns the
// first failing pair.
template <typename PairOk>
Verdict decide_pairwise(const FuzzyClosureSpace& s, const char* axiom, PairOk&& ok) {
    s.require_validated();
    SpaceAnalysis an(s);
    const int d = s.chain().denominator();
    for (int i = 0; i < s.universe().size(); ++i)
        for (int j = i + 1; j < s.universe().size(); ++j)
            for (int xl = 1; xl <= d; ++xl)
                for (int yl = 1; yl <= d; ++yl)
                    if (!ok(an, i, xl, j, yl))
                        return {axiom, false,
                                pair_witness(FuzzyPoint(s.universe(), s.chain(), i, xl),
                                             FuzzyPoint(s.universe(), s.chain(), j, yl))};
    return {axiom, true, std::nullopt};
}

void micro_guard(const FuzzyClosureSpace& s) {
    if (carrier_size_checked(s.universe(), s.chain()) > 4096)
        throw ResourceError("naive decider restricted to micro instances");
}

} // namespace

Verdict cft0(const FuzzyClosureSpace& s) {
    return decide_pairwise(s, "T0", [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
        return t0_pair_ok(an, xe, xl, ye, yl);
    });
}

Verdict cft0_interior_characterization(const FuzzyClosureSpace& s) {
    return decide_pairwise(s, "T0_interior",
                           [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
                               return t0_interior_pair_ok(an, xe, xl, ye, yl);
                           });
}

Verdict cft1(const FuzzyClosureSpace& s) {
    s.require_validated();
    const int d = s.chain().denominator();
    for (int e = 0; e < s.universe().size(); ++e) {
        const FuzzyPoint singleton(s.universe(), s.chain(), e, d);
        const FuzzySet cl = s.closure(singleton);
        if (cl != singleton.as_set()) {
            Witness w;
            w.points.emplace_back("x_lambda", singleton);
            w.sets.emplace_back("closure", cl);
            return {"T1", false, w};
        }
    }
    return {"T1", true, std::nullopt};
}

Verdict cft1_pairwise(const FuzzyClosureSpace& s) {
    return decide_pairwise(s, "T1_pairwise",
                           [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
                               return t1_pair_ok(an, xe, xl, ye, yl);
                           });
}

Verdict cfts(const FuzzyClosureSpace& s) {
    s.require_validated();
    for (const FuzzyPoint& p : enumerate_points(s.universe(), s.chain())) {
        const FuzzySet cl = s.closure(p);
        if (cl != p.as_set()) {
            Witness w;
            w.points.emplace_back("x_lambda", p);
            w.sets.emplace_back("closure", cl);
            return {"Ts", false, w};
        }
    }
    return {"Ts", true, std::nullopt};
}

Verdict cft2(const FuzzyClosureSpace& s) {
    return decide_pairwise(s, "T2", [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
        return t2_pair_ok(an, xe, xl, ye, yl);
    });
}

Verdict cf_urysohn(const FuzzyClosureSpace& s) {
    return decide_pairwise(s, "Urysohn",
                           [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
                               return urysohn_pair_ok(an, xe, xl, ye, yl);
                           });
}

Verdict cf_regular(const FuzzyClosureSpace& s) {
    s.require_validated();
    SpaceAnalysis an(s);
    const int d = s.chain().denominator();
    for (int e = 0; e < s.universe().size(); ++e)
        for (int l = 1; l <= d; ++l)
            for (std::uint64_t k = 1; k < an.carrier(); ++k) {
                if (l > d - an.closure_of(k).numerator(e)) continue; // x not in Co(c(k))
                if (!regular_instance_ok(an, e, l, k)) {
                    Witness w;
                    w.points.emplace_back("x_lambda", FuzzyPoint(s.universe(), s.chain(), e, l));
                    w.sets.emplace_back("k", an.set_at(k));
                    return {"Regular", false, w};
                }
            }
    return {"Regular", true, std::nullopt};
}

Verdict cf_regular_mashhour(const FuzzyClosureSpace& s) {
    s.require_validated();
    SpaceAnalysis an(s);
    const int d = s.chain().denominator();
    for (int e = 0; e < s.universe().size(); ++e)
        for (int l = 1; l <= d; ++l)
            for (std::uint64_t k = 0; k < an.carrier(); ++k) {
                if (!point_in(an.interior_of(k), e, l)) continue;
                if (!mashhour_instance_ok(an, e, l, k)) {
                    Witness w;
                    w.points.emplace_back("x_lambda", FuzzyPoint(s.universe(), s.chain(), e, l));
                    w.sets.emplace_back("k", an.set_at(k));
                    return {"MashhourRegular", false, w};
                }
            }
    return {"MashhourRegular", true, std::nullopt};
}

Verdict cf_normal(const FuzzyClosureSpace& s) {
    s.require_validated();
    SpaceAnalysis an(s);
    for (std::uint64_t k1 = 1; k1 < an.carrier(); ++k1)
        for (std::uint64_t k2 = 1; k2 < an.carrier(); ++k2) {
            if (!an.closure_of(k1).leq(an.closure_of(k2).complement())) continue;
            if (!normal_instance_ok(an, k1, k2)) {
                Witness w;
                w.sets.emplace_back("k1", an.set_at(k1));
                w.sets.emplace_back("k2", an.set_at(k2));
                return {"Normal", false, w};
            }
        }
    return {"Normal", true, std::nullopt};
}

namespace {

Verdict conjunction(const char* axiom, Verdict a, Verdict b) {
    if (!a.holds) return {axiom, false, a.witness};
    if (!b.holds) return {axiom, false, b.witness};
    return {axiom, true, std::nullopt};
}

} // namespace

Verdict cft3(const FuzzyClosureSpace& s) { return conjunction("T3", cf_regular(s), cfts(s)); }

Verdict cft4(const FuzzyClosureSpace& s) { return conjunction("T4", cf_normal(s), cfts(s)); }

Verdict decide(const FuzzyClosureSpace& s, CfAxiom which) {
    switch (which) {
        case CfAxiom::T0: return cft0(s);
        case CfAxiom::T1: return cft1(s);
        case CfAxiom::Ts: return cfts(s);
        case CfAxiom::T2: return cft2(s);
        case CfAxiom::Urysohn: return cf_urysohn(s);
        case CfAxiom::Regular: return cf_regular(s);
        case CfAxiom::MashhourRegular: return cf_regular_mashhour(s);
        case CfAxiom::Normal: return cf_normal(s);
        case CfAxiom::T3: return cft3(s);
        case CfAxiom::T4: return cft4(s);
    }
    throw std::logic_error("unreachable");
}

Verdict cft2_naive(const FuzzyClosureSpace& s) {
    micro_guard(s);
    return decide_pairwise(s, "T2", [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
        const int d = an.space().chain().denominator();
        for (std::uint64_t f = 0; f < an.carrier(); ++f) {
            const FuzzySet& fs = an.set_at(f);
            if (!point_in(an.interior_of(f), xe, xl)) continue;
            if (!point_in(fs, xe, xl)) continue;
            if (fs.numerator(ye) > d - yl) continue; // f <= Co(y_gamma)
            for (std::uint64_t g = 0; g < an.carrier(); ++g) {
                const FuzzySet& gs = an.set_at(g);
                if (!point_in(an.interior_of(g), ye, yl)) continue;
                if (!point_in(gs, ye, yl)) continue;
                if (gs.numerator(xe) > d - xl) continue; // g <= Co(x_lambda)
                if (fs.leq(gs.complement())) return true;
            }
        }
        return false;
    });
}

Verdict cf_urysohn_naive(const FuzzyClosureSpace& s) {
    micro_guard(s);
    return decide_pairwise(s, "Urysohn",
                           [](const SpaceAnalysis& an, int xe, int xl, int ye, int yl) {
                               const int d = an.space().chain().denominator();
                               for (std::uint64_t f = 0; f < an.carrier(); ++f) {
                                   const FuzzySet& fs = an.set_at(f);
                                   if (!point_in(an.interior_of(f), xe, xl)) continue;
                                   if (!point_in(fs, xe, xl)) continue;
                                   if (fs.numerator(ye) > d - yl) continue;
                                   for (std::uint64_t g = 0; g < an.carrier(); ++g) {
                                       const FuzzySet& gs = an.set_at(g);
                                       if (!point_in(an.interior_of(g), ye, yl)) continue;
                                       if (!point_in(gs, ye, yl)) continue;
                                       if (gs.numerator(xe) > d - xl) continue;
                                       if (an.closure_of(f).leq(an.closure_of(g).complement()))
                                           return true;
                                   }
                               }
                               return false;
                           });
}

Verdict cf_regular_naive(const FuzzyClosureSpace& s) {
    micro_guard(s);
    s.require_validated();
    SpaceAnalysis an(s);
    const int d = s.chain().denominator();
    for (int e = 0; e < s.universe().size(); ++e)
        for (int l = 1; l <= d; ++l)
            for (std::uint64_t k = 1; k < an.carrier(); ++k) {
                if (l > d - an.closure_of(k).numerator(e)) continue;
                bool ok = false;
                for (std::uint64_t f = 0; f < an.carrier() && !ok; ++f) {
                    if (!point_in(an.interior_of(f), e, l)) continue;
                    for (std::uint64_t g = 0; g < an.carrier(); ++g) {
                        if (!an.set_at(k).leq(an.interior_of(g))) continue;
                        if (an.set_at(f).leq(an.set_at(g).complement())) {
                            ok = true;
                            break;
                        }
                    }
                }
                if (!ok) {
                    Witness w;
                    w.points.emplace_back("x_lambda", FuzzyPoint(s.universe(), s.chain(), e, l));
                    w.sets.emplace_back("k", an.set_at(k));
                    return {"Regular", false, w};
                }
            }
    return {"Regular", true, std::nullopt};
}

Verdict cf_normal_naive(const FuzzyClosureSpace& s) {
    micro_guard(s);
    s.require_validated();
    SpaceAnalysis an(s);
    for (std::uint64_t k1 = 1; k1 < an.carrier(); ++k1)
        for (std::uint64_t k2 = 1; k2 < an.carrier(); ++k2) {
            if (!an.closure_of(k1).leq(an.closure_of(k2).complement())) continue;
            bool ok = false;
            for (std::uint64_t f1 = 0; f1 < an.carrier() && !ok; ++f1) {
                if (!an.set_at(k1).leq(an.interior_of(f1))) continue;
                for (std::uint64_t f2 = 0; f2 < an.carrier(); ++f2) {
                    if (!an.set_at(k2).leq(an.interior_of(f2))) continue;
                    if (an.set_at(f1).leq(an.set_at(f2).complement())) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) {
                Witness w;
                w.sets.emplace_back("k1", an.set_at(k1));
                w.sets.emplace_back("k2", an.set_at(k2));
                return {"Normal", false, w};
            }
        }
    return {"Normal", true, std::nullopt};
}

namespace {

Witness separating_sets(const char* first, const FuzzySet& f, const char* second,
                        const FuzzySet& g) {
    Witness w;
    w.sets.emplace_back(first, f);
    w.sets.emplace_back(second, g);
    return w;
}

} // namespace

std::optional<Witness> cft2_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                        const FuzzyPoint& y) {
    s.require_validated();
    SpaceAnalysis an(s);
    const auto g = t2_pair_g(an, x.element(), x.level_numerator(), y.element(),
                             y.level_numerator());
    if (!g) return std::nullopt;
    return separating_sets("f", t2_candidate(an, *g, y.element(), y.level_numerator()), "g",
                           an.set_at(*g));
}

std::optional<Witness> cf_urysohn_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                              const FuzzyPoint& y) {
    s.require_validated();
    SpaceAnalysis an(s);
    const auto g = urysohn_pair_g(an, x.element(), x.level_numerator(), y.element(),
                                  y.level_numerator());
    if (!g) return std::nullopt;
    return separating_sets("f", urysohn_candidate(an, *g, y.element(), y.level_numerator()), "g",
                           an.set_at(*g));
}

std::optional<Witness> cf_regular_certificate(const FuzzyClosureSpace& s, const FuzzyPoint& x,
                                              const FuzzySet& k) {
    s.require_validated();
    SpaceAnalysis an(s);
    const std::uint64_t k_rank = an.rank_of(k);
    if (k.is_zero()) return std::nullopt;
    const int d = s.chain().denominator();
    if (x.level_numerator() > d - an.closure_of(k_rank).numerator(x.element()))
        return std::nullopt; // hypothesis fails
    const auto g = regular_instance_g(an, x.element(), x.level_numerator(), k_rank);
    if (!g) return std::nullopt;
    return separating_sets("f", an.set_at(*g).complement(), "g", an.set_at(*g));
}

std::optional<Witness> cf_normal_certificate(const FuzzyClosureSpace& s, const FuzzySet& k1,
                                             const FuzzySet& k2) {
    s.require_validated();
    SpaceAnalysis an(s);
    if (k1.is_zero() || k2.is_zero()) return std::nullopt;
    const std::uint64_t r1 = an.rank_of(k1);
    const std::uint64_t r2 = an.rank_of(k2);
    if (!an.closure_of(r1).leq(an.closure_of(r2).complement())) return std::nullopt;
    const auto f2 = normal_instance_f2(an, r1, r2);
    if (!f2) return std::nullopt;
    return separating_sets("f1", an.set_at(*f2).complement(), "f2", an.set_at(*f2));
}

const Verdict& SeparationReport::at(CfAxiom which) const {
    return verdicts.at(static_cast<std::size_t>(which));
}

SeparationReport classify(const FuzzyClosureSpace& s) {
    SeparationReport report;
    for (CfAxiom a : {CfAxiom::T0, CfAxiom::T1, CfAxiom::Ts, CfAxiom::T2, CfAxiom::Urysohn,
                      CfAxiom::Regular, CfAxiom::MashhourRegular, CfAxiom::Normal, CfAxiom::T3,
                      CfAxiom::T4})
        report.verdicts.push_back(decide(s, a));

    const auto implies = [&report](CfAxiom a, CfAxiom b) {
        if (report.holds(a) && !report.holds(b))
            throw std::logic_error(std::string("implication lattice violated: ") +
                                   cf_axiom_name(a) + " held without " + cf_axiom_name(b));
    };
    implies(CfAxiom::Ts, CfAxiom::T1);
    implies(CfAxiom::T2, CfAxiom::T1);
    implies(CfAxiom::T1, CfAxiom::T0);
    implies(CfAxiom::Urysohn, CfAxiom::T2);
    implies(CfAxiom::T3, CfAxiom::T2);
    implies(CfAxiom::T4, CfAxiom::T3);
    implies(CfAxiom::MashhourRegular, CfAxiom::Regular);
    if (report.holds(CfAxiom::T3) != (report.holds(CfAxiom::Regular) && report.holds(CfAxiom::Ts)))
        throw std::logic_error("T3 must equal Regular & Ts");
    if (report.holds(CfAxiom::T4) != (report.holds(CfAxiom::Normal) && report.holds(CfAxiom::Ts)))
        throw std::logic_error("T4 must equal Normal & Ts");
    return report;
}

bool replay_witness(const FuzzyClosureSpace& s, const Verdict& v) {
    if (v.holds || !v.witness) throw StructuralError("replay requires a false verdict");
    const Witness& w = *v.witness;
    SpaceAnalysis an(s);

    const auto point_of = [&](std::size_t i) {
        const FuzzyPoint& p = w.points.at(i).second;
        return FuzzyPoint(s.universe(), s.chain(), s.universe().require(p.support()),
                          p.level_numerator());
    };

    const std::string axiom = v.axiom;
    if (axiom == "T0") {
        const FuzzyPoint x = point_of(0), y = point_of(1);
        return !t0_pair_ok(an, x.element(), x.level_numerator(), y.element(), y.level_numerator());
    }
    if (axiom == "T0_interior") {
        const FuzzyPoint x = point_of(0), y = point_of(1);
        return !t0_interior_pair_ok(an, x.element(), x.level_numerator(), y.element(),
                                    y.level_numerator());
    }
    if (axiom == "T1" || axiom == "Ts") {
        const FuzzyPoint x = point_of(0);
        return s.closure(x) != x.as_set();
    }
    if (axiom == "T1_pairwise") {
        const FuzzyPoint x = point_of(0), y = point_of(1);
        return !t1_pair_ok(an, x.element(), x.level_numerator(), y.element(), y.level_numerator());
    }
    if (axiom == "T2") {
        const FuzzyPoint x = point_of(0), y = point_of(1);
        return !t2_pair_ok(an, x.element(), x.level_numerator(), y.element(), y.level_numerator());
    }
    if (axiom == "Urysohn") {
        const FuzzyPoint x = point_of(0), y = point_of(1);
        return !urysohn_pair_ok(an, x.element(), x.level_numerator(), y.element(),
                                y.level_numerator());
    }
    if (axiom == "Regular") {
        const FuzzyPoint x = point_of(0);
        const std::uint64_t k = an.rank_of(w.sets.at(0).second);
        const int d = s.chain().denominator();
        return x.level_numerator() <= d - an.closure_of(k).numerator(x.element()) &&
               !regular_instance_ok(an, x.element(), x.level_numerator(), k);
    }
    if (axiom == "MashhourRegular") {
        const FuzzyPoint x = point_of(0);
        const std::uint64_t k = an.rank_of(w.sets.at(0).second);
        return point_in(an.interior_of(k), x.element(), x.level_numerator()) &&
               !mashhour_instance_ok(an, x.element(), x.level_numerator(), k);
    }
    if (axiom == "Normal") {
        const std::uint64_t k1 = an.rank_of(w.sets.at(0).second);
        const std::uint64_t k2 = an.rank_of(w.sets.at(1).second);
        return an.closure_of(k1).leq(an.closure_of(k2).complement()) &&
               !normal_instance_ok(an, k1, k2);
    }
    if (axiom == "T3" || axiom == "T4") {
        // The witness came from the failing conjunct; its shape tells which.
        Verdict sub = v;
        if (!w.sets.empty() && w.sets.front().first == "closure") sub.axiom = "Ts";
        else if (axiom == "T3") sub.axiom = "Regular";
        else sub.axiom = "Normal";
        return replay_witness(s, sub);
    }
    throw StructuralError("no replay for axiom: " + axiom);
}

} // namespace fcs
