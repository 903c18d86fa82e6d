#include "fcs/closure.hpp"

#include <algorithm>

#include "fcs/budget.hpp"
#include "fcs/errors.hpp"
#include "fcs/topology.hpp"

namespace fcs {

namespace {

FuzzySet eval_closure(const Universe& u, const Chain& ch, const ClosureOperator& op,
                      const FuzzySet& f) {
    if (std::holds_alternative<DiscreteOp>(op)) return f;
    if (std::holds_alternative<IndiscreteOp>(op))
        return f.is_zero() ? f : FuzzySet::one(u, ch);
    if (const auto* table = std::get_if<TableOp>(&op)) {
        SetEnumeration en(u, ch);
        return table->closures.at(en.rank_of(f));
    }
    const auto& fg = std::get<FgOp>(op);
    FuzzySet out(u, ch);
    for (int e = 0; e < u.size(); ++e) {
        const int k = f.numerator(e);
        if (k > 0) out = out.join(fg.entries[e][k - 1]);
    }
    return out;
}

void check_fg_structure(const Universe& u, const Chain& ch, const FgOp& fg,
                        ValidationReport& report) {
    if (static_cast<int>(fg.entries.size()) != u.size())
        throw StructuralError("point closure entries do not cover the universe");
    for (int e = 0; e < u.size(); ++e) {
        if (static_cast<int>(fg.entries[e].size()) != ch.denominator())
            throw StructuralError("point closure entries missing levels for element " + u.name(e));
        for (const FuzzySet& entry : fg.entries[e])
            if (entry.universe() != u || entry.chain() != ch)
                throw StructuralError("point closure entry on a different carrier");
    }
    for (int e = 0; e < u.size(); ++e) {
        for (int k = 1; k <= ch.denominator(); ++k) {
            const FuzzySet& entry = fg.entries[e][k - 1];
            const FuzzyPoint p(u, ch, e, k);
            if (!entry.contains(p)) {
                report.violations.push_back(
                    {"expansive", {p.as_set(), entry}, "point not below its own closure"});
                return;
            }
            if (k > 1 && !fg.entries[e][k - 2].leq(entry)) {
                report.violations.push_back({"level-monotone",
                                             {fg.entries[e][k - 2], entry},
                                             "point closures must grow with the level at " + u.name(e)});
                return;
            }
        }
    }
}

// Full-join oracle for point-generated operators: join of c(x_lambda) over
// ALL points below f, not only the maximal ones.
FuzzySet fg_full_join(const Universe& u, const Chain& ch, const FgOp& fg, const FuzzySet& f) {
    FuzzySet out(u, ch);
    for (int e = 0; e < u.size(); ++e)
        for (int k = 1; k <= f.numerator(e); ++k) out = out.join(fg.entries[e][k - 1]);
    return out;
}

ValidationReport run_validation(const Universe& u, const Chain& ch, const ClosureOperator& op) {
    ValidationReport report;
    if (std::holds_alternative<DiscreteOp>(op) || std::holds_alternative<IndiscreteOp>(op))
        return report;

    if (const auto* fg = std::get_if<FgOp>(&op)) {
        check_fg_structure(u, ch, *fg, report);
        report.passed = report.violations.empty();
        if (!report.passed) return report;
        // Level monotonicity makes the generation identity and the join axiom
        // hold; cross-check against the full join on small carriers anyway.
        const std::uint64_t base = static_cast<std::uint64_t>(ch.denominator()) + 1;
        std::uint64_t size = 1;
        bool small = true;
        for (int i = 0; i < u.size() && small; ++i) {
            size *= base;
            small = size <= 4096;
        }
        if (small) {
            SetEnumeration en(u, ch);
            for (std::uint64_t r = 0; r < en.size(); ++r) {
                const FuzzySet f = en.at(r);
                const FuzzySet via_max = eval_closure(u, ch, op, f);
                const FuzzySet via_all = fg_full_join(u, ch, *fg, f);
                if (via_max != via_all) {
                    report.violations.push_back(
                        {"generation", {f, via_max, via_all}, "maximal-point join differs from full join"});
                    break;
                }
            }
        }
        report.passed = report.violations.empty();
        return report;
    }

    const auto& table = std::get<TableOp>(op);
    SetEnumeration en(u, ch);
    if (table.closures.size() != en.size())
        throw StructuralError("closure table is not total over the carrier");
    for (const FuzzySet& c : table.closures)
        if (c.universe() != u || c.chain() != ch)
            throw StructuralError("closure table entry on a different carrier");

    const FuzzySet zero(u, ch);
    if (!table.closures[0].is_zero())
        report.violations.push_back({"zero", {zero, table.closures[0]}, "c(0) != 0"});

    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (!f.leq(table.closures[r])) {
            report.violations.push_back({"expansive", {f, table.closures[r]}, "f not below c(f)"});
            break;
        }
    }

    // Smallest violating pair in enumeration order (pair rank = (r1, r2)).
    [&] {
        for (std::uint64_t r1 = 0; r1 < en.size(); ++r1) {
            const FuzzySet f = en.at(r1);
            for (std::uint64_t r2 = 0; r2 < en.size(); ++r2) {
                const FuzzySet g = en.at(r2);
                const FuzzySet lhs = table.closures.at(en.rank_of(f.join(g)));
                const FuzzySet rhs = table.closures[r1].join(table.closures[r2]);
                if (lhs != rhs) {
                    report.violations.push_back({"join", {f, g, lhs, rhs}, "c(f v g) != c(f) v c(g)"});
                    return;
                }
            }
        }
    }();

    report.passed = report.violations.empty();
    return report;
}

} // namespace

FuzzyClosureSpace::FuzzyClosureSpace(Universe u, Chain chain, ClosureOperator op)
    : universe_(std::move(u)), chain_(std::move(chain)), op_(std::move(op)),
      validation_(run_validation(universe_, chain_, op_)) {}

FuzzyClosureSpace FuzzyClosureSpace::discrete(Universe u, Chain chain) {
    return FuzzyClosureSpace(std::move(u), std::move(chain), DiscreteOp{});
}

FuzzyClosureSpace FuzzyClosureSpace::indiscrete(Universe u, Chain chain) {
    return FuzzyClosureSpace(std::move(u), std::move(chain), IndiscreteOp{});
}

void FuzzyClosureSpace::require_validated() const {
    if (!validated()) throw StructuralError("operation requires a validated space");
}

FuzzySet FuzzyClosureSpace::closure(const FuzzySet& f) const {
    if (f.universe() != universe_ || f.chain() != chain_)
        throw StructuralError("set from a different space");
    return eval_closure(universe_, chain_, op_, f);
}

FuzzySet FuzzyClosureSpace::closure(const FuzzyPoint& p) const {
    return closure(p.as_set());
}

FuzzySet FuzzyClosureSpace::interior(const FuzzySet& f) const {
    return closure(f.complement()).complement();
}

FuzzySet FuzzyClosureSpace::closure_from_interior(const FuzzySet& f) const {
    return interior(f.complement()).complement();
}

bool FuzzyClosureSpace::is_neighborhood(const FuzzySet& f, const FuzzySet& k) const {
    return k.leq(interior(f));
}

bool FuzzyClosureSpace::is_neighborhood(const FuzzySet& f, const FuzzyPoint& p) const {
    return interior(f).contains(p);
}

bool FuzzyClosureSpace::is_closed(const FuzzySet& f) const { return closure(f) == f; }

bool FuzzyClosureSpace::is_open(const FuzzySet& f) const {
    return is_closed(f.complement());
}

FuzzyTopology FuzzyClosureSpace::associated_topology() const {
    require_validated();
    SetEnumeration en(universe_, chain_);
    std::vector<FuzzySet> opens;
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (is_open(f)) opens.push_back(f);
    }
    return FuzzyTopology(universe_, chain_, std::move(opens));
}

bool FuzzyClosureSpace::is_idempotent() const {
    require_validated();
    SetEnumeration en(universe_, chain_);
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet c1 = closure(en.at(r));
        if (closure(c1) != c1) return false;
    }
    return true;
}

bool FuzzyClosureSpace::is_well_closed(const FuzzyPoint& p) const {
    require_validated();
    return closure(p).support().size() == 1;
}

bool FuzzyClosureSpace::is_finitely_generated() const {
    require_validated();
    SetEnumeration en(universe_, chain_);
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        FuzzySet joined(universe_, chain_);
        for (int e = 0; e < universe_.size(); ++e)
            for (int k = 1; k <= f.numerator(e); ++k)
                joined = joined.join(closure(FuzzyPoint(universe_, chain_, e, k)));
        if (joined != closure(f)) return false;
    }
    return true;
}

FuzzyClosureSpace FuzzyClosureSpace::to_finitely_generated() const {
    require_validated();
    return finitely_generated(universe_, chain_,
                              [this](const FuzzyPoint& p) { return closure(p); });
}

bool coarser_leq(const FuzzyClosureSpace& s1, const FuzzyClosureSpace& s2) {
    if (s1.universe() != s2.universe() || s1.chain() != s2.chain())
        throw StructuralError("coarseness comparison across different carriers");
    s1.require_validated();
    s2.require_validated();
    SetEnumeration en(s1.universe(), s1.chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (!s2.closure(f).leq(s1.closure(f))) return false;
    }
    return true;
}

bool replay_violation(const FuzzyClosureSpace& s, const AxiomViolation& v) {
    if (v.axiom == "zero") {
        return !s.closure(FuzzySet(s.universe(), s.chain())).is_zero();
    }
    if (v.axiom == "expansive") {
        return !v.sets.at(0).leq(s.closure(v.sets.at(0)));
    }
    if (v.axiom == "join") {
        const FuzzySet& f = v.sets.at(0);
        const FuzzySet& g = v.sets.at(1);
        return s.closure(f.join(g)) != s.closure(f).join(s.closure(g));
    }
    if (v.axiom == "level-monotone") {
        return !v.sets.at(0).leq(v.sets.at(1));
    }
    if (v.axiom == "generation") {
        FuzzySet joined(s.universe(), s.chain());
        const FuzzySet& f = v.sets.at(0);
        for (int e = 0; e < s.universe().size(); ++e)
            for (int k = 1; k <= f.numerator(e); ++k)
                joined = joined.join(s.closure(FuzzyPoint(s.universe(), s.chain(), e, k)));
        return joined != s.closure(f);
    }
    throw StructuralError("unknown axiom id: " + v.axiom);
}

} // namespace fcs
