#include "fcs/fraction.hpp"

#include <numeric>

#include "fcs/errors.hpp"

namespace fcs {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw StructuralError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
}

Fraction Fraction::parse(const std::string& text) {
    if (text.empty()) throw StructuralError("empty fraction");
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw StructuralError("bad fraction: " + text);
            return Fraction(n, 1);
        }
        const std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw StructuralError("bad fraction: " + text);
        const std::string den_part = text.substr(slash + 1);
        const std::int64_t d = std::stoll(den_part, &used);
        if (used != den_part.size()) throw StructuralError("bad fraction: " + text);
        return Fraction(n, d);
    } catch (const std::invalid_argument&) {
        throw StructuralError("bad fraction: " + text);
    } catch (const std::out_of_range&) {
        throw StructuralError("fraction out of range: " + text);
    }
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
    // Cross-multiplication in 128-bit to be safe against large denominators.
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace fcs
