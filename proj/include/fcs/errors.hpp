#ifndef FCS_ERRORS_HPP
#define FCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcs {

/// Malformed input: mismatched universes/chains, unknown elements,
/// out-of-range memberships, bad documents.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or construction exceeds the configured carrier budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fcs

#endif
