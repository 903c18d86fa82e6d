#include "fcs/maps.hpp"

#include <algorithm>

#include "fcs/errors.hpp"

namespace fcs {

SpaceMap::SpaceMap(FuzzyClosureSpace source, FuzzyClosureSpace target, std::vector<int> ground)
    : source_(std::move(source)), target_(std::move(target)), ground_(std::move(ground)) {
    if (source_.chain() != target_.chain())
        throw StructuralError("maps require identical chains on both sides");
    if (static_cast<int>(ground_.size()) != source_.universe().size())
        throw StructuralError("ground map is not total on the source universe");
    for (int t : ground_)
        if (t < 0 || t >= target_.universe().size())
            throw StructuralError("ground map leaves the target universe");
}

SpaceMap SpaceMap::from_names(FuzzyClosureSpace source, FuzzyClosureSpace target,
                              const std::vector<std::pair<std::string, std::string>>& assignment) {
    std::vector<int> ground(source.universe().size(), -1);
    for (const auto& [from, to] : assignment) {
        const int i = source.universe().require(from);
        if (ground[i] != -1) throw StructuralError("duplicate assignment for element " + from);
        ground[i] = target.universe().require(to);
    }
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
        if (ground[i] == -1)
            throw StructuralError("no assignment for element " + source.universe().name(i));
    return SpaceMap(std::move(source), std::move(target), std::move(ground));
}

SpaceMap SpaceMap::identity(const FuzzyClosureSpace& s) {
    std::vector<int> ground(s.universe().size());
    for (int i = 0; i < s.universe().size(); ++i) ground[i] = i;
    return SpaceMap(s, s, std::move(ground));
}

FuzzyPoint SpaceMap::apply(const FuzzyPoint& p) const {
    return FuzzyPoint(target_.universe(), target_.chain(), ground_.at(p.element()),
                      p.level_numerator());
}

FuzzySet SpaceMap::image(const FuzzySet& g) const {
    if (g.universe() != source_.universe()) throw StructuralError("image of a non-source set");
    std::vector<int> mem(target_.universe().size(), 0);
    for (int i = 0; i < source_.universe().size(); ++i)
        mem[ground_[i]] = std::max(mem[ground_[i]], g.numerator(i));
    return FuzzySet(target_.universe(), target_.chain(), std::move(mem));
}

FuzzySet SpaceMap::preimage(const FuzzySet& h) const {
    if (h.universe() != target_.universe()) throw StructuralError("preimage of a non-target set");
    std::vector<int> mem(source_.universe().size());
    for (int i = 0; i < source_.universe().size(); ++i) mem[i] = h.numerator(ground_[i]);
    return FuzzySet(source_.universe(), source_.chain(), std::move(mem));
}

bool SpaceMap::is_bijective() const {
    if (source_.universe().size() != target_.universe().size()) return false;
    std::vector<bool> hit(target_.universe().size(), false);
    for (int t : ground_) {
        if (hit[t]) return false;
        hit[t] = true;
    }
    return true;
}

SpaceMap SpaceMap::inverse() const {
    if (!is_bijective()) throw StructuralError("inverse of a non-bijective map");
    std::vector<int> inv(ground_.size());
    for (int i = 0; i < static_cast<int>(ground_.size()); ++i) inv[ground_[i]] = i;
    return SpaceMap(target_, source_, std::move(inv));
}

SpaceMap SpaceMap::then(const SpaceMap& other) const {
    if (target_.universe() != other.source().universe() || target_.chain() != other.source().chain())
        throw StructuralError("composition of non-matching maps");
    std::vector<int> ground(ground_.size());
    for (int i = 0; i < static_cast<int>(ground_.size()); ++i)
        ground[i] = other.ground().at(ground_[i]);
    return SpaceMap(source_, other.target(), std::move(ground));
}

Verdict is_cf_continuous(const SpaceMap& m) {
    m.source().require_validated();
    m.target().require_validated();
    SetEnumeration en(m.source().universe(), m.source().chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        const FuzzySet lhs = m.image(m.source().closure(f));
        const FuzzySet rhs = m.target().closure(m.image(f));
        if (!lhs.leq(rhs)) {
            Witness w;
            w.sets.emplace_back("f", f);
            w.sets.emplace_back("image_of_closure", lhs);
            w.sets.emplace_back("closure_of_image", rhs);
            return {"cf_continuous", false, w};
        }
    }
    return {"cf_continuous", true, std::nullopt};
}

Verdict is_cf_continuous_at(const SpaceMap& m, const FuzzyPoint& p) {
    m.source().require_validated();
    m.target().require_validated();
    SetEnumeration en(m.source().universe(), m.source().chain());
    const FuzzyPoint q = m.apply(p);
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (!m.source().closure(f).contains(p)) continue;
        if (!m.target().closure(m.image(f)).contains(q)) {
            Witness w;
            w.points.emplace_back("x_lambda", p);
            w.sets.emplace_back("f", f);
            return {"cf_continuous_at", false, w};
        }
    }
    return {"cf_continuous_at", true, std::nullopt};
}

Verdict continuity_via_preimage(const SpaceMap& m) {
    m.source().require_validated();
    m.target().require_validated();
    SetEnumeration en(m.target().universe(), m.target().chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet g = en.at(r);
        const FuzzySet lhs = m.source().closure(m.preimage(g));
        const FuzzySet rhs = m.preimage(m.target().closure(g));
        if (!lhs.leq(rhs)) {
            Witness w;
            w.sets.emplace_back("g", g);
            return {"cf_continuous_preimage", false, w};
        }
    }
    return {"cf_continuous_preimage", true, std::nullopt};
}

bool preimage_preserves_open(const SpaceMap& m) {
    m.source().require_validated();
    m.target().require_validated();
    SetEnumeration en(m.target().universe(), m.target().chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet g = en.at(r);
        if (m.target().is_open(g) && !m.source().is_open(m.preimage(g))) return false;
        if (m.target().is_closed(g) && !m.source().is_closed(m.preimage(g))) return false;
    }
    return true;
}

Verdict is_cf_homeomorphism(const SpaceMap& m) {
    m.source().require_validated();
    m.target().require_validated();
    Verdict verdict{"cf_homeomorphism", true, std::nullopt};
    if (!m.is_bijective()) {
        verdict.holds = false;
        verdict.witness = Witness{};
        return verdict;
    }
    SetEnumeration en(m.source().universe(), m.source().chain());
    for (std::uint64_t r = 0; r < en.size(); ++r) {
        const FuzzySet f = en.at(r);
        if (m.image(m.source().closure(f)) != m.target().closure(m.image(f))) {
            Witness w;
            w.sets.emplace_back("f", f);
            verdict.holds = false;
            verdict.witness = w;
            break;
        }
    }
    // Dual route: a bijection is a homeomorphism iff both directions are
    // continuous. Disagreement would be an implementation bug.
    const bool two_sided = is_cf_continuous(m).holds && is_cf_continuous(m.inverse()).holds;
    if (two_sided != verdict.holds)
        throw StructuralError("homeomorphism routes disagree; internal error");
    return verdict;
}

SpaceMap with_induced_target(const FuzzyClosureSpace& source, const Universe& target_universe,
                             std::vector<int> ground) {
    source.require_validated();
    const Chain chain = source.chain();
    FuzzyClosureSpace target = FuzzyClosureSpace::finitely_generated(
        target_universe, chain, [&](const FuzzyPoint& p) {
            std::vector<int> pre(source.universe().size(), 0);
            for (int i = 0; i < source.universe().size(); ++i)
                if (ground[i] == p.element()) pre[i] = p.level_numerator();
            const FuzzySet closed = source.closure(FuzzySet(source.universe(), chain, pre));
            std::vector<int> mem(target_universe.size(), 0);
            for (int i = 0; i < source.universe().size(); ++i)
                mem[ground[i]] = std::max(mem[ground[i]], closed.numerator(i));
            mem[p.element()] = std::max(mem[p.element()], p.level_numerator());
            return FuzzySet(target_universe, chain, std::move(mem));
        });
    return SpaceMap(source, std::move(target), std::move(ground));
}

SpaceMap relabel_map(const FuzzyClosureSpace& s, const std::vector<int>& perm,
                     const std::vector<std::string>& new_names) {
    s.require_validated();
    const int n = s.universe().size();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(new_names.size()) != n)
        throw StructuralError("relabeling needs one new position and name per element");
    const Universe target(new_names);
    const Chain chain = s.chain();
    const auto push = [&](const FuzzySet& f) {
        std::vector<int> mem(n);
        for (int i = 0; i < n; ++i) mem[perm[i]] = f.numerator(i);
        return FuzzySet(target, chain, std::move(mem));
    };
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    FuzzyClosureSpace relabeled = FuzzyClosureSpace::finitely_generated(
        target, chain, [&](const FuzzyPoint& p) {
            return push(s.closure(FuzzyPoint(s.universe(), chain, inv[p.element()],
                                             p.level_numerator())));
        });
    return SpaceMap(s, std::move(relabeled), perm);
}

} // namespace fcs
