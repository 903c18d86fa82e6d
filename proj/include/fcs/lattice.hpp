#ifndef FCS_LATTICE_HPP
#define FCS_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fcs/fraction.hpp"

namespace fcs {

/// The membership grid {0, 1/D, ..., 1}. Levels are handled internally as
/// numerators k over the fixed denominator D, which keeps every lattice
/// operation exact integer arithmetic.
class Chain {
public:
    explicit Chain(int denominator);

    int denominator() const { return den_; }
    int level_count() const { return den_ + 1; } // including 0

    Fraction level(int numerator) const;

    /// Numerator k with value == k/D, if the value lies on the grid.
    std::optional<int> numerator_of(const Fraction& value) const;

    bool operator==(const Chain& o) const { return den_ == o.den_; }
    bool operator!=(const Chain& o) const { return den_ != o.den_; }

private:
    int den_;
};

/// Finite ordered universe of distinct element names. Universes are interned
/// process-wide, so copies are raw pointer copies with no reference-count
/// traffic (sets are copied in bulk inside the parallel sweeps), and equality
/// is a pointer comparison.
class Universe {
public:
    explicit Universe(std::vector<std::string> elements);

    /// Convenience universe "a", "b", ... (past 26 elements: "e26", "e27", ...).
    static Universe letters(int n);

    int size() const { return static_cast<int>(impl_->names.size()); }
    const std::string& name(int index) const { return impl_->names.at(index); }
    const std::vector<std::string>& names() const { return impl_->names; }

    std::optional<int> index_of(const std::string& name) const;
    /// Like index_of but throws StructuralError for unknown names.
    int require(const std::string& name) const;

    bool operator==(const Universe& o) const { return impl_ == o.impl_; }
    bool operator!=(const Universe& o) const { return impl_ != o.impl_; }

private:
    struct Impl {
        std::vector<std::string> names;
        std::unordered_map<std::string, int> index;
    };
    const Impl* impl_; // interned for the process lifetime
};

class FuzzySet;

/// Fuzzy point x_lambda: value lambda > 0 at one support element, 0 elsewhere.
class FuzzyPoint {
public:
    FuzzyPoint(Universe u, Chain chain, int element, int level_numerator);

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }
    int element() const { return element_; }
    const std::string& support() const { return universe_.name(element_); }
    int level_numerator() const { return level_; }
    Fraction value() const { return chain_.level(level_); }
    bool is_singleton() const { return level_ == chain_.denominator(); }

    FuzzySet as_set() const;

    bool operator==(const FuzzyPoint& o) const;

private:
    Universe universe_;
    Chain chain_;
    int element_;
    int level_;
};

/// Total map universe -> chain levels; the lattice carrier. Value semantics,
/// immutable in spirit: lattice operations return new sets.
class FuzzySet {
public:
    /// The constant 0 set.
    FuzzySet(Universe u, Chain chain);
    FuzzySet(Universe u, Chain chain, std::vector<int> numerators);

    static FuzzySet zero(const Universe& u, const Chain& c) { return FuzzySet(u, c); }
    static FuzzySet one(const Universe& u, const Chain& c);
    /// Characteristic set of a crisp subset given by element names.
    static FuzzySet crisp(const Universe& u, const Chain& c, const std::vector<std::string>& members);
    static FuzzySet constant(const Universe& u, const Chain& c, int level_numerator);

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }

    int numerator(int element) const { return mem_.at(element); }
    Fraction value(int element) const { return chain_.level(mem_.at(element)); }
    Fraction value_of(const std::string& name) const;
    const std::vector<int>& numerators() const { return mem_; }

    bool is_zero() const;
    bool is_one() const;

    FuzzySet join(const FuzzySet& o) const;  // pointwise max
    FuzzySet meet(const FuzzySet& o) const;  // pointwise min
    FuzzySet complement() const;             // pointwise 1 - f(x)
    bool leq(const FuzzySet& o) const;       // pointwise <=

    /// True iff p.value <= f(p.support).
    bool contains(const FuzzyPoint& p) const;

    /// {x_{f(x)} : f(x) > 0}; joining them reconstructs f.
    std::vector<FuzzyPoint> maximal_points() const;

    /// Element indices with positive membership.
    std::vector<int> support() const;
    std::vector<std::string> support_names() const;

    bool operator==(const FuzzySet& o) const;
    bool operator!=(const FuzzySet& o) const { return !(*this == o); }

    /// Display form "{a:1/2, b:0}".
    std::string str() const;

private:
    void require_compatible(const FuzzySet& o) const;

    Universe universe_;
    Chain chain_;
    std::vector<int> mem_;
};

/// Bijection between fuzzy sets on (u, chain) and ranks 0 .. (D+1)^|u| - 1.
/// Ranks count in base D+1 with the FIRST universe element as the least
/// significant digit, so enumeration order is colexicographic in the element
/// ordering. The order is part of the contract: witnesses are reported
/// minimal with respect to it.
class SetEnumeration {
public:
    SetEnumeration(Universe u, Chain chain);

    const Universe& universe() const { return universe_; }
    const Chain& chain() const { return chain_; }

    std::uint64_t size() const { return size_; }
    FuzzySet at(std::uint64_t rank) const;
    std::uint64_t rank_of(const FuzzySet& f) const;

    /// All sets in rank order. Budget-checked.
    std::vector<FuzzySet> all() const;

private:
    Universe universe_;
    Chain chain_;
    std::uint64_t size_;
};

/// (D+1)^|u| with overflow and budget checks; throws ResourceError when the
/// carrier exceeds the configured maximum.
std::uint64_t carrier_size_checked(const Universe& u, const Chain& c);

/// All fuzzy sets on (u, chain) in enumeration order.
std::vector<FuzzySet> enumerate_sets(const Universe& u, const Chain& c);

/// All fuzzy points, elements in universe order, levels ascending.
std::vector<FuzzyPoint> enumerate_points(const Universe& u, const Chain& c);

} // namespace fcs

#endif
