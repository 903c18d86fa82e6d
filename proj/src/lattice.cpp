#include "fcs/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "fcs/budget.hpp"
#include "fcs/errors.hpp"

namespace fcs {

Chain::Chain(int denominator) : den_(denominator) {
    if (denominator < 1) throw StructuralError("chain denominator must be >= 1");
}

Fraction Chain::level(int numerator) const {
    if (numerator < 0 || numerator > den_)
        throw StructuralError("level numerator out of range");
    return Fraction(numerator, den_);
}

std::optional<int> Chain::numerator_of(const Fraction& value) const {
    if (value < Fraction::zero() || value > Fraction::one()) return std::nullopt;
    const std::int64_t scaled = value.num() * den_;
    if (scaled % value.den() != 0) return std::nullopt;
    return static_cast<int>(scaled / value.den());
}

Universe::Universe(std::vector<std::string> elements) {
    if (elements.empty()) throw StructuralError("universe must be non-empty");
    static std::mutex intern_mutex;
    static std::map<std::vector<std::string>, std::unique_ptr<Impl>> interned;
    std::lock_guard<std::mutex> lock(intern_mutex);
    auto it = interned.find(elements);
    if (it == interned.end()) {
        auto impl = std::make_unique<Impl>();
        impl->names = elements;
        for (int i = 0; i < static_cast<int>(impl->names.size()); ++i) {
            if (impl->names[i].empty()) throw StructuralError("empty element name");
            if (!impl->index.emplace(impl->names[i], i).second)
                throw StructuralError("duplicate element name: " + impl->names[i]);
        }
        it = interned.emplace(std::move(elements), std::move(impl)).first;
    }
    impl_ = it->second.get();
}

Universe Universe::letters(int n) {
    if (n < 1) throw StructuralError("universe must be non-empty");
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i < 26) names.push_back(std::string(1, static_cast<char>('a' + i)));
        else names.push_back("e" + std::to_string(i));
    }
    return Universe(std::move(names));
}

std::optional<int> Universe::index_of(const std::string& name) const {
    const auto it = impl_->index.find(name);
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
}

int Universe::require(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw StructuralError("unknown element: " + name);
}

FuzzyPoint::FuzzyPoint(Universe u, Chain chain, int element, int level_numerator)
    : universe_(std::move(u)), chain_(std::move(chain)), element_(element), level_(level_numerator) {
    if (element_ < 0 || element_ >= universe_.size())
        throw StructuralError("fuzzy point support out of range");
    if (level_ < 1 || level_ > chain_.denominator())
        throw StructuralError("fuzzy point value must lie in (0,1] on the chain");
}

FuzzySet FuzzyPoint::as_set() const {
    std::vector<int> mem(universe_.size(), 0);
    mem[element_] = level_;
    return FuzzySet(universe_, chain_, std::move(mem));
}

bool FuzzyPoint::operator==(const FuzzyPoint& o) const {
    return universe_ == o.universe_ && chain_ == o.chain_ &&
           element_ == o.element_ && level_ == o.level_;
}

FuzzySet::FuzzySet(Universe u, Chain chain)
    : universe_(std::move(u)), chain_(std::move(chain)), mem_(universe_.size(), 0) {}

FuzzySet::FuzzySet(Universe u, Chain chain, std::vector<int> numerators)
    : universe_(std::move(u)), chain_(std::move(chain)), mem_(std::move(numerators)) {
    if (static_cast<int>(mem_.size()) != universe_.size())
        throw StructuralError("membership vector does not cover the universe");
    for (int v : mem_)
        if (v < 0 || v > chain_.denominator())
            throw StructuralError("membership off the chain");
}

FuzzySet FuzzySet::one(const Universe& u, const Chain& c) {
    return constant(u, c, c.denominator());
}

FuzzySet FuzzySet::crisp(const Universe& u, const Chain& c, const std::vector<std::string>& members) {
    std::vector<int> mem(u.size(), 0);
    for (const auto& name : members) mem[u.require(name)] = c.denominator();
    return FuzzySet(u, c, std::move(mem));
}

FuzzySet FuzzySet::constant(const Universe& u, const Chain& c, int level_numerator) {
    if (level_numerator < 0 || level_numerator > c.denominator())
        throw StructuralError("constant level off the chain");
    return FuzzySet(u, c, std::vector<int>(u.size(), level_numerator));
}

Fraction FuzzySet::value_of(const std::string& name) const {
    return value(universe_.require(name));
}

bool FuzzySet::is_zero() const {
    return std::all_of(mem_.begin(), mem_.end(), [](int v) { return v == 0; });
}

bool FuzzySet::is_one() const {
    const int d = chain_.denominator();
    return std::all_of(mem_.begin(), mem_.end(), [d](int v) { return v == d; });
}

void FuzzySet::require_compatible(const FuzzySet& o) const {
    if (universe_ != o.universe_) throw StructuralError("fuzzy sets on different universes");
    if (chain_ != o.chain_) throw StructuralError("fuzzy sets on different chains");
}

FuzzySet FuzzySet::join(const FuzzySet& o) const {
    require_compatible(o);
    std::vector<int> mem(mem_.size());
    for (std::size_t i = 0; i < mem_.size(); ++i) mem[i] = std::max(mem_[i], o.mem_[i]);
    return FuzzySet(universe_, chain_, std::move(mem));
}

FuzzySet FuzzySet::meet(const FuzzySet& o) const {
    require_compatible(o);
    std::vector<int> mem(mem_.size());
    for (std::size_t i = 0; i < mem_.size(); ++i) mem[i] = std::min(mem_[i], o.mem_[i]);
    return FuzzySet(universe_, chain_, std::move(mem));
}

FuzzySet FuzzySet::complement() const {
    const int d = chain_.denominator();
    std::vector<int> mem(mem_.size());
    for (std::size_t i = 0; i < mem_.size(); ++i) mem[i] = d - mem_[i];
    return FuzzySet(universe_, chain_, std::move(mem));
}

bool FuzzySet::leq(const FuzzySet& o) const {
    require_compatible(o);
    for (std::size_t i = 0; i < mem_.size(); ++i)
        if (mem_[i] > o.mem_[i]) return false;
    return true;
}

bool FuzzySet::contains(const FuzzyPoint& p) const {
    if (p.universe() != universe_) throw StructuralError("point from a different universe");
    if (p.chain() != chain_) throw StructuralError("point from a different chain");
    return p.level_numerator() <= mem_[p.element()];
}

std::vector<FuzzyPoint> FuzzySet::maximal_points() const {
    std::vector<FuzzyPoint> out;
    for (int i = 0; i < static_cast<int>(mem_.size()); ++i)
        if (mem_[i] > 0) out.emplace_back(universe_, chain_, i, mem_[i]);
    return out;
}

std::vector<int> FuzzySet::support() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mem_.size()); ++i)
        if (mem_[i] > 0) out.push_back(i);
    return out;
}

std::vector<std::string> FuzzySet::support_names() const {
    std::vector<std::string> out;
    for (int i : support()) out.push_back(universe_.name(i));
    return out;
}

bool FuzzySet::operator==(const FuzzySet& o) const {
    return universe_ == o.universe_ && chain_ == o.chain_ && mem_ == o.mem_;
}

std::string FuzzySet::str() const {
    std::string out = "{";
    for (int i = 0; i < universe_.size(); ++i) {
        if (i) out += ", ";
        out += universe_.name(i) + ":" + value(i).str();
    }
    return out + "}";
}

std::uint64_t carrier_size_checked(const Universe& u, const Chain& c) {
    const std::uint64_t base = static_cast<std::uint64_t>(c.denominator()) + 1;
    const std::uint64_t cap = max_carrier();
    std::uint64_t size = 1;
    for (int i = 0; i < u.size(); ++i) {
        if (size > cap / base)
            throw ResourceError("carrier (D+1)^|X| exceeds the configured budget of " +
                                std::to_string(cap) + " (set FCS_MAX_CARRIER to raise it)");
        size *= base;
    }
    if (size > cap)
        throw ResourceError("carrier (D+1)^|X| exceeds the configured budget of " +
                            std::to_string(cap) + " (set FCS_MAX_CARRIER to raise it)");
    return size;
}

SetEnumeration::SetEnumeration(Universe u, Chain chain)
    : universe_(std::move(u)), chain_(std::move(chain)),
      size_(carrier_size_checked(universe_, chain_)) {}

FuzzySet SetEnumeration::at(std::uint64_t rank) const {
    if (rank >= size_) throw StructuralError("set rank out of range");
    const std::uint64_t base = static_cast<std::uint64_t>(chain_.denominator()) + 1;
    std::vector<int> mem(universe_.size());
    for (int i = 0; i < universe_.size(); ++i) {
        mem[i] = static_cast<int>(rank % base);
        rank /= base;
    }
    return FuzzySet(universe_, chain_, std::move(mem));
}

std::uint64_t SetEnumeration::rank_of(const FuzzySet& f) const {
    if (f.universe() != universe_ || f.chain() != chain_)
        throw StructuralError("set from a different carrier");
    const std::uint64_t base = static_cast<std::uint64_t>(chain_.denominator()) + 1;
    std::uint64_t rank = 0;
    for (int i = universe_.size() - 1; i >= 0; --i)
        rank = rank * base + static_cast<std::uint64_t>(f.numerator(i));
    return rank;
}

std::vector<FuzzySet> SetEnumeration::all() const {
    std::vector<FuzzySet> out;
    out.reserve(size_);
    for (std::uint64_t r = 0; r < size_; ++r) out.push_back(at(r));
    return out;
}

std::vector<FuzzySet> enumerate_sets(const Universe& u, const Chain& c) {
    return SetEnumeration(u, c).all();
}

std::vector<FuzzyPoint> enumerate_points(const Universe& u, const Chain& c) {
    std::vector<FuzzyPoint> out;
    out.reserve(static_cast<std::size_t>(u.size()) * c.denominator());
    for (int e = 0; e < u.size(); ++e)
        for (int k = 1; k <= c.denominator(); ++k)
            out.emplace_back(u, c, e, k);
    return out;
}

} // namespace fcs
