#include "fcs/budget.hpp"

#include <cstdlib>
#include <string>

namespace fcs {

std::uint64_t max_carrier() {
    static const std::uint64_t cached = [] {
        if (const char* env = std::getenv("FCS_MAX_CARRIER")) {
            try {
                const long long v = std::stoll(env);
                if (v > 0) return static_cast<std::uint64_t>(v);
            } catch (...) {
                // fall through to the default on unparsable values
            }
        }
        return std::uint64_t{1000000};
    }();
    return cached;
}

} // namespace fcs
