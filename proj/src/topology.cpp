#include "fcs/topology.hpp"

#include <algorithm>

#include "fcs/errors.hpp"

namespace fcs {

const char* ft_axiom_name(FtAxiom a) {
    switch (a) {
        case FtAxiom::FT0: return "FT0";
        case FtAxiom::FT1: return "FT1";
        case FtAxiom::FTs: return "FTs";
        case FtAxiom::FT2: return "FT2";
        case FtAxiom::FT2_5: return "FT2.5";
        case FtAxiom::Regular: return "regular";
        case FtAxiom::FT3: return "FT3";
        case FtAxiom::Normal: return "normal";
        case FtAxiom::FT4: return "FT4";
    }
    return "?";
}

ValidationReport validate_chang(const Universe& u, const Chain& c,
                                const std::vector<FuzzySet>& family) {
    ValidationReport report;
    for (const FuzzySet& f : family)
        if (f.universe() != u || f.chain() != c)
            throw StructuralError("family member on a different carrier");

    const auto member = [&family](const FuzzySet& f) {
        return std::find(family.begin(), family.end(), f) != family.end();
    };

    if (!member(FuzzySet::zero(u, c)))
        report.violations.push_back({"constants", {FuzzySet::zero(u, c)}, "0 missing"});
    if (!member(FuzzySet::one(u, c)))
        report.violations.push_back({"constants", {FuzzySet::one(u, c)}, "1 missing"});

    // On the finite carrier arbitrary joins reduce to pairwise ones, so both
    // axioms are pairwise checks. Witnesses are the first offending pair in
    // family order.
    [&] {
        for (const FuzzySet& g : family)
            for (const FuzzySet& h : family) {
                if (!member(g.meet(h))) {
                    report.violations.push_back({"meet", {g, h, g.meet(h)}, "meet not in family"});
                    return;
                }
            }
    }();
    [&] {
        for (const FuzzySet& g : family)
            for (const FuzzySet& h : family) {
                if (!member(g.join(h))) {
                    report.violations.push_back({"join", {g, h, g.join(h)}, "join not in family"});
                    return;
                }
            }
    }();

    report.passed = report.violations.empty();
    return report;
}

FuzzyTopology::FuzzyTopology(Universe u, Chain chain, std::vector<FuzzySet> opens)
    : universe_(std::move(u)), chain_(std::move(chain)) {
    SetEnumeration en(universe_, chain_);
    std::vector<std::uint64_t> ranks;
    ranks.reserve(opens.size());
    for (const FuzzySet& f : opens) ranks.push_back(en.rank_of(f)); // also checks the carrier
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    opens_.clear();
    opens_.reserve(ranks.size());
    for (std::uint64_t r : ranks) opens_.push_back(en.at(r));
    open_ranks_ = std::move(ranks);
    validation_ = validate_chang(universe_, chain_, opens_);
}

FuzzyTopology FuzzyTopology::indiscrete(const Universe& u, const Chain& c) {
    return FuzzyTopology(u, c, {FuzzySet::zero(u, c), FuzzySet::one(u, c)});
}

FuzzyTopology FuzzyTopology::discrete(const Universe& u, const Chain& c) {
    return FuzzyTopology(u, c, enumerate_sets(u, c));
}

void FuzzyTopology::require_validated() const {
    if (!validated()) throw StructuralError("operation requires a validated topology");
}

bool FuzzyTopology::is_open(const FuzzySet& f) const {
    SetEnumeration en(universe_, chain_);
    return std::binary_search(open_ranks_.begin(), open_ranks_.end(), en.rank_of(f));
}

bool FuzzyTopology::is_closed(const FuzzySet& f) const { return is_open(f.complement()); }

std::vector<FuzzySet> FuzzyTopology::closed_sets() const {
    SetEnumeration en(universe_, chain_);
    std::vector<std::uint64_t> ranks;
    ranks.reserve(opens_.size());
    for (const FuzzySet& f : opens_) ranks.push_back(en.rank_of(f.complement()));
    std::sort(ranks.begin(), ranks.end());
    std::vector<FuzzySet> out;
    out.reserve(ranks.size());
    for (std::uint64_t r : ranks) out.push_back(en.at(r));
    return out;
}

FuzzySet FuzzyTopology::fts_closure(const FuzzySet& f) const {
    require_validated();
    FuzzySet acc = FuzzySet::one(universe_, chain_);
    for (const FuzzySet& open : opens_) {
        const FuzzySet closed = open.complement();
        if (f.leq(closed)) acc = acc.meet(closed);
    }
    return acc;
}

namespace {

bool point_in(const FuzzyPoint& p, const FuzzySet& f) { return f.contains(p); }

Witness pair_witness(const FuzzyPoint& x, const FuzzyPoint& y) {
    Witness w;
    w.points.emplace_back("x_lambda", x);
    w.points.emplace_back("y_gamma", y);
    return w;
}

} // namespace

Verdict FuzzyTopology::ft_axiom(FtAxiom which) const {
    require_validated();
    Verdict verdict{ft_axiom_name(which), true, std::nullopt};

    switch (which) {
        case FtAxiom::FT3: {
            Verdict r = ft_axiom(FtAxiom::Regular);
            if (!r.holds) return {verdict.axiom, false, r.witness};
            Verdict s = ft_axiom(FtAxiom::FTs);
            if (!s.holds) return {verdict.axiom, false, s.witness};
            return verdict;
        }
        case FtAxiom::FT4: {
            Verdict n = ft_axiom(FtAxiom::Normal);
            if (!n.holds) return {verdict.axiom, false, n.witness};
            Verdict s = ft_axiom(FtAxiom::FTs);
            if (!s.holds) return {verdict.axiom, false, s.witness};
            return verdict;
        }
        case FtAxiom::FTs: {
            for (const FuzzyPoint& p : enumerate_points(universe_, chain_)) {
                if (fts_closure(p.as_set()) != p.as_set()) {
                    Witness w;
                    w.points.emplace_back("x_lambda", p);
                    w.sets.emplace_back("closure", fts_closure(p.as_set()));
                    return {verdict.axiom, false, w};
                }
            }
            return verdict;
        }
        default: break;
    }

    const auto points = enumerate_points(universe_, chain_);

    if (which == FtAxiom::FT0 || which == FtAxiom::FT1 || which == FtAxiom::FT2 ||
        which == FtAxiom::FT2_5) {
        for (const FuzzyPoint& x : points) {
            for (const FuzzyPoint& y : points) {
                if (y.element() <= x.element()) continue; // distinct supports, unordered
                bool ok = false;
                switch (which) {
                    case FtAxiom::FT0: {
                        for (const FuzzySet& f : opens_) {
                            if ((point_in(x, f) && f.leq(y.as_set().complement())) ||
                                (point_in(y, f) && f.leq(x.as_set().complement()))) {
                                ok = true;
                                break;
                            }
                        }
                        break;
                    }
                    case FtAxiom::FT1: {
                        bool fwd = false, bwd = false;
                        for (const FuzzySet& f : opens_) {
                            fwd = fwd || (point_in(x, f) && f.leq(y.as_set().complement()));
                            bwd = bwd || (point_in(y, f) && f.leq(x.as_set().complement()));
                        }
                        ok = fwd && bwd;
                        break;
                    }
                    case FtAxiom::FT2:
                    case FtAxiom::FT2_5: {
                        for (const FuzzySet& f : opens_) {
                            if (!(point_in(x, f) && f.leq(y.as_set().complement()))) continue;
                            for (const FuzzySet& g : opens_) {
                                if (!(point_in(y, g) && g.leq(x.as_set().complement()))) continue;
                                const bool disjoint =
                                    which == FtAxiom::FT2
                                        ? f.leq(g.complement())
                                        : fts_closure(f).leq(fts_closure(g).complement());
                                if (disjoint) {
                                    ok = true;
                                    break;
                                }
                            }
                            if (ok) break;
                        }
                        break;
                    }
                    default: break;
                }
                if (!ok) return {verdict.axiom, false, pair_witness(x, y)};
            }
        }
        return verdict;
    }

    if (which == FtAxiom::Regular) {
        for (const FuzzyPoint& x : points) {
            for (const FuzzySet& k : closed_sets()) {
                if (!k.complement().contains(x)) continue; // hypothesis x in Co(k)
                bool ok = false;
                for (const FuzzySet& f : opens_) {
                    if (!point_in(x, f)) continue;
                    for (const FuzzySet& g : opens_) {
                        if (k.leq(g) && f.leq(g.complement())) {
                            ok = true;
                            break;
                        }
                    }
                    if (ok) break;
                }
                if (!ok) {
                    Witness w;
                    w.points.emplace_back("x_lambda", x);
                    w.sets.emplace_back("k", k);
                    return {verdict.axiom, false, w};
                }
            }
        }
        return verdict;
    }

    // Normal: closed k1 <= Co(k2) must be separated by opens.
    for (const FuzzySet& k1 : closed_sets()) {
        for (const FuzzySet& k2 : closed_sets()) {
            if (!k1.leq(k2.complement())) continue;
            bool ok = false;
            for (const FuzzySet& f1 : opens_) {
                if (!k1.leq(f1)) continue;
                for (const FuzzySet& f2 : opens_) {
                    if (k2.leq(f2) && f1.leq(f2.complement())) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (!ok) {
                Witness w;
                w.sets.emplace_back("k1", k1);
                w.sets.emplace_back("k2", k2);
                return {verdict.axiom, false, w};
            }
        }
    }
    return verdict;
}

FuzzyClosureSpace FuzzyTopology::as_closure_space() const {
    require_validated();
    return FuzzyClosureSpace::from_function(universe_, chain_,
                                            [this](const FuzzySet& f) { return fts_closure(f); });
}

} // namespace fcs
