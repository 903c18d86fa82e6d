#include "fcs/io.hpp"

#include "fcs/errors.hpp"

namespace fcs {

namespace {

Fraction fraction_from_json(const ordered_json& v) {
    if (v.is_string()) return Fraction::parse(v.get<std::string>());
    if (v.is_number_integer()) return Fraction(v.get<std::int64_t>(), 1);
    throw StructuralError("memberships must be exact fraction strings, got: " + v.dump());
}

int level_from_json(const ordered_json& v, const Chain& c) {
    const Fraction fr = fraction_from_json(v);
    const auto k = c.numerator_of(fr);
    if (!k) throw StructuralError("value " + fr.str() + " is not on the chain with denominator " +
                                  std::to_string(c.denominator()));
    return *k;
}

ordered_json operator_to_json(const FuzzyClosureSpace& s) {
    ordered_json op;
    if (std::holds_alternative<DiscreteOp>(s.op())) {
        op["kind"] = "named";
        op["name"] = "discrete";
    } else if (std::holds_alternative<IndiscreteOp>(s.op())) {
        op["kind"] = "named";
        op["name"] = "indiscrete";
    } else if (const auto* fg = std::get_if<FgOp>(&s.op())) {
        op["kind"] = "finitely_generated";
        ordered_json entries = ordered_json::object();
        for (int e = 0; e < s.universe().size(); ++e) {
            ordered_json per_level = ordered_json::object();
            for (int k = 1; k <= s.chain().denominator(); ++k)
                per_level[s.chain().level(k).str()] = fuzzy_set_to_json(fg->entries[e][k - 1]);
            entries[s.universe().name(e)] = std::move(per_level);
        }
        op["entries"] = std::move(entries);
    } else {
        const auto& table = std::get<TableOp>(s.op());
        op["kind"] = "table";
        ordered_json entries = ordered_json::array();
        SetEnumeration en(s.universe(), s.chain());
        for (std::uint64_t r = 0; r < en.size(); ++r) {
            ordered_json row;
            row["set"] = fuzzy_set_to_json(en.at(r));
            row["closure"] = fuzzy_set_to_json(table.closures[r]);
            entries.push_back(std::move(row));
        }
        op["entries"] = std::move(entries);
    }
    return op;
}

ordered_json space_to_json(const FuzzyClosureSpace& s) {
    ordered_json doc;
    doc["format"] = 1;
    doc["universe"] = s.universe().names();
    doc["denominator"] = s.chain().denominator();
    doc["operator"] = operator_to_json(s);
    return doc;
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw StructuralError(std::string("document syntax error: ") + e.what());
    }
}

FuzzyClosureSpace space_from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw StructuralError("document must be a JSON object");
    if (!doc.contains("format") || doc["format"] != 1)
        throw StructuralError("unsupported document format");
    if (!doc.contains("universe") || !doc["universe"].is_array())
        throw StructuralError("missing universe");
    std::vector<std::string> names;
    for (const auto& n : doc["universe"]) {
        if (!n.is_string()) throw StructuralError("universe elements must be strings");
        names.push_back(n.get<std::string>());
    }
    const Universe u(names);
    if (!doc.contains("denominator") || !doc["denominator"].is_number_integer())
        throw StructuralError("missing denominator");
    const Chain chain(doc["denominator"].get<int>());

    if (!doc.contains("operator") || !doc["operator"].is_object())
        throw StructuralError("missing operator");
    const auto& op = doc["operator"];
    if (!op.contains("kind")) throw StructuralError("operator kind missing");
    const std::string kind = op["kind"].get<std::string>();

    ClosureOperator built;
    if (kind == "named") {
        const std::string name = op.value("name", "");
        if (name == "discrete") built = DiscreteOp{};
        else if (name == "indiscrete") built = IndiscreteOp{};
        else throw StructuralError("unknown named operator: " + name);
    } else if (kind == "finitely_generated") {
        if (!op.contains("entries") || !op["entries"].is_object())
            throw StructuralError("finitely_generated operator needs entries");
        FgOp fg;
        fg.entries.resize(u.size());
        for (int e = 0; e < u.size(); ++e) {
            const std::string& name = u.name(e);
            if (!op["entries"].contains(name))
                throw StructuralError("missing point closures for element " + name);
            const auto& per_level = op["entries"][name];
            if (!per_level.is_object())
                throw StructuralError("point closures for " + name + " must be an object");
            // Level keys may arrive unreduced; resolve them through the chain.
            std::vector<const ordered_json*> by_level(chain.denominator(), nullptr);
            for (const auto& [key, value] : per_level.items()) {
                const auto k = chain.numerator_of(Fraction::parse(key));
                if (!k || *k < 1)
                    throw StructuralError("level " + key + " is not a positive chain level");
                if (by_level[*k - 1])
                    throw StructuralError("duplicate point closure for " + name + " at level " + key);
                by_level[*k - 1] = &value;
            }
            for (int k = 1; k <= chain.denominator(); ++k) {
                if (!by_level[k - 1])
                    throw StructuralError("missing point closure for " + name + " at level " +
                                          chain.level(k).str());
                fg.entries[e].push_back(fuzzy_set_from_json(*by_level[k - 1], u, chain));
            }
        }
        built = std::move(fg);
    } else if (kind == "table") {
        if (!op.contains("entries") || !op["entries"].is_array())
            throw StructuralError("table operator needs an entries array");
        SetEnumeration en(u, chain);
        std::vector<FuzzySet> closures(en.size(), FuzzySet(u, chain));
        std::vector<bool> seen(en.size(), false);
        for (const auto& row : op["entries"]) {
            if (!row.contains("set") || !row.contains("closure"))
                throw StructuralError("table rows need set and closure");
            const FuzzySet key = fuzzy_set_from_json(row["set"], u, chain);
            const std::uint64_t r = en.rank_of(key);
            if (seen[r]) throw StructuralError("duplicate table row for " + key.str());
            seen[r] = true;
            closures[r] = fuzzy_set_from_json(row["closure"], u, chain);
        }
        for (std::uint64_t r = 0; r < en.size(); ++r)
            if (!seen[r]) throw StructuralError("table is missing a row for " + en.at(r).str());
        built = TableOp{std::move(closures)};
    } else {
        throw StructuralError("unknown operator kind: " + kind);
    }

    FuzzyClosureSpace space(u, chain, std::move(built));
    if (!space.validated())
        throw ValidationError("operator fails the closure axioms", space.validation());
    return space;
}

} // namespace

ordered_json fuzzy_set_to_json(const FuzzySet& f) {
    ordered_json out = ordered_json::object();
    for (int i = 0; i < f.universe().size(); ++i) out[f.universe().name(i)] = f.value(i).str();
    return out;
}

FuzzySet fuzzy_set_from_json(const ordered_json& j, const Universe& u, const Chain& c) {
    if (!j.is_object()) throw StructuralError("fuzzy set must be an object of memberships");
    std::vector<int> mem(u.size(), 0);
    for (const auto& [key, value] : j.items()) {
        mem[u.require(key)] = level_from_json(value, c);
    }
    return FuzzySet(u, c, std::move(mem));
}

FuzzySet parse_set_expression(const std::string& text, const Universe& u, const Chain& c) {
    if (text == "0") return FuzzySet::zero(u, c);
    if (text == "1") return FuzzySet::one(u, c);
    return fuzzy_set_from_json(parse_text(text), u, c);
}

std::string serialize_space(const FuzzyClosureSpace& s) {
    return space_to_json(s).dump(2) + "\n";
}

ordered_json space_document(const FuzzyClosureSpace& s) { return space_to_json(s); }

FuzzyClosureSpace parse_space(const std::string& text) {
    return space_from_json(parse_text(text));
}

std::string serialize_map(const SpaceMap& m) {
    ordered_json doc = space_to_json(m.source());
    if (m.source().universe() != m.target().universe() ||
        m.source().chain() != m.target().chain() ||
        serialize_space(m.source()) != serialize_space(m.target()))
        doc["target"] = space_to_json(m.target());
    ordered_json ground = ordered_json::object();
    for (int i = 0; i < m.source().universe().size(); ++i)
        ground[m.source().universe().name(i)] = m.target().universe().name(m.apply(i));
    doc["map"] = std::move(ground);
    return doc.dump(2) + "\n";
}

SpaceMap parse_map(const std::string& text) {
    const ordered_json doc = parse_text(text);
    if (!doc.contains("map") || !doc["map"].is_object())
        throw StructuralError("map document needs a map block");
    FuzzyClosureSpace source = space_from_json(doc);
    FuzzyClosureSpace target = doc.contains("target") ? space_from_json(doc["target"]) : source;
    std::vector<std::pair<std::string, std::string>> assignment;
    for (const auto& [from, to] : doc["map"].items()) {
        if (!to.is_string()) throw StructuralError("map values must be element names");
        assignment.emplace_back(from, to.get<std::string>());
    }
    return SpaceMap::from_names(std::move(source), std::move(target), assignment);
}

bool is_map_document(const std::string& text) {
    const ordered_json doc = parse_text(text);
    return doc.is_object() && doc.contains("map");
}

ordered_json witness_to_json(const Witness& w) {
    ordered_json out = ordered_json::object();
    if (!w.points.empty()) {
        ordered_json points = ordered_json::object();
        for (const auto& [label, p] : w.points) {
            ordered_json pj;
            pj["element"] = p.support();
            pj["value"] = p.value().str();
            points[label] = std::move(pj);
        }
        out["points"] = std::move(points);
    }
    if (!w.sets.empty()) {
        ordered_json sets = ordered_json::object();
        for (const auto& [label, f] : w.sets) sets[label] = fuzzy_set_to_json(f);
        out["sets"] = std::move(sets);
    }
    return out;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json out;
    out["axiom"] = v.axiom;
    out["holds"] = v.holds;
    if (v.witness) out["witness"] = witness_to_json(*v.witness);
    return out;
}

ordered_json validation_report_to_json(const ValidationReport& r) {
    ordered_json out;
    out["passed"] = r.passed;
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json vj;
        vj["axiom"] = v.axiom;
        vj["detail"] = v.detail;
        ordered_json sets = ordered_json::array();
        for (const auto& f : v.sets) sets.push_back(fuzzy_set_to_json(f));
        vj["sets"] = std::move(sets);
        violations.push_back(std::move(vj));
    }
    out["violations"] = std::move(violations);
    return out;
}

ordered_json separation_report_to_json(const SeparationReport& r) {
    ordered_json out = ordered_json::object();
    for (const auto& v : r.verdicts) out[v.axiom] = verdict_to_json(v);
    return out;
}

} // namespace fcs
