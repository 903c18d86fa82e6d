#ifndef FCS_IO_HPP
#define FCS_IO_HPP

#include <string>

#include <json.hpp>

#include "fcs/closure.hpp"
#include "fcs/maps.hpp"
#include "fcs/separation.hpp"
#include "fcs/verdict.hpp"

namespace fcs {

using ordered_json = nlohmann::ordered_json;

/// Space failed the closure axioms at parse time; carries the report.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}
    ValidationReport report;
};

/// Canonical JSON document for one space:
///   format, universe (element order), denominator, operator.
/// Memberships and levels are reduced fraction strings; keys follow universe
/// order, then ascending levels. serialize(parse(doc)) is byte-identical on
/// canonical documents.
std::string serialize_space(const FuzzyClosureSpace& s);

/// The same document as a JSON value, for embedding in reports.
ordered_json space_document(const FuzzyClosureSpace& s);

/// Parses and validates; throws StructuralError for malformed documents and
/// ValidationError when the operator fails the closure axioms.
FuzzyClosureSpace parse_space(const std::string& text);

/// Map document: the source space document plus a "map" block, and an
/// optional "target" sub-document for maps between different spaces.
std::string serialize_map(const SpaceMap& m);
SpaceMap parse_map(const std::string& text);

/// True iff the document contains a "map" block.
bool is_map_document(const std::string& text);

ordered_json fuzzy_set_to_json(const FuzzySet& f);
FuzzySet fuzzy_set_from_json(const ordered_json& j, const Universe& u, const Chain& c);

/// CLI set expressions: a JSON object {element: "k/D"} (missing elements are
/// zero) or the literals "0" / "1".
FuzzySet parse_set_expression(const std::string& text, const Universe& u, const Chain& c);

ordered_json witness_to_json(const Witness& w);
ordered_json verdict_to_json(const Verdict& v);
ordered_json validation_report_to_json(const ValidationReport& r);
ordered_json separation_report_to_json(const SeparationReport& r);

} // namespace fcs

#endif
