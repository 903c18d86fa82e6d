#ifndef FCS_FRACTION_HPP
#define FCS_FRACTION_HPP

#include <cstdint>
#include <compare>
#include <string>

namespace fcs {

/// Exact rational in canonical reduced form (den > 0, gcd(|num|, den) = 1).
/// All membership arithmetic goes through this type; no floating point.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(std::int64_t num, std::int64_t den);

    static Fraction zero() { return Fraction(); }
    static Fraction one() { return Fraction(1, 1); }

    /// Parses "3/4", "-1/2", "0", "1". Whitespace is not accepted.
    static Fraction parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;

    /// 1 - x, the lattice complement on [0,1].
    Fraction one_minus() const { return Fraction(den_ - num_, den_); }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    std::strong_ordering operator<=>(const Fraction& o) const;

    /// Reduced textual form: "0", "1", "3/4".
    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace fcs

#endif
