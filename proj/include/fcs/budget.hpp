#ifndef FCS_BUDGET_HPP
#define FCS_BUDGET_HPP

#include <cstdint>

namespace fcs {

/// Maximum enumerated carrier size, i.e. the largest (D+1)^|X| any
/// enumeration-backed operation will attempt. Defaults to 1,000,000 and can
/// be overridden with the FCS_MAX_CARRIER environment variable.
std::uint64_t max_carrier();

} // namespace fcs

#endif
