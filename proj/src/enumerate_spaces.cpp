#include "fcs/enumerate_spaces.hpp"

#include "fcs/errors.hpp"

namespace fcs {

namespace {

// All nondecreasing sequences a_1 <= ... <= a_D with a_k in [low(k), D],
// in lexicographic order. low(k) = k for diagonal blocks, 0 otherwise.
void gen_sequences(int d, bool diagonal, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    const int k = static_cast<int>(current.size()) + 1;
    if (k > d) {
        out.push_back(current);
        return;
    }
    const int floor_prev = current.empty() ? 0 : current.back();
    const int low = std::max(diagonal ? k : 0, floor_prev);
    for (int v = low; v <= d; ++v) {
        current.push_back(v);
        gen_sequences(d, diagonal, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> sequences(int d, bool diagonal) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    gen_sequences(d, diagonal, current, out);
    return out;
}

FuzzyClosureSpace build_from_choices(const Universe& u, const Chain& chain,
                                     const std::vector<std::vector<int>>& diagonal_seqs,
                                     const std::vector<std::vector<int>>& free_seqs,
                                     const std::vector<std::uint64_t>& choice) {
    const int n = u.size();
    const int d = chain.denominator();
    FgOp op;
    op.entries.resize(n);
    for (int e = 0; e < n; ++e) {
        for (int k = 1; k <= d; ++k) {
            std::vector<int> mem(n);
            for (int y = 0; y < n; ++y) {
                const auto& seq = (y == e) ? diagonal_seqs[choice[e * n + y]]
                                           : free_seqs[choice[e * n + y]];
                mem[y] = seq[k - 1];
            }
            op.entries[e].emplace_back(u, chain, std::move(mem));
        }
    }
    return FuzzyClosureSpace(u, chain, std::move(op));
}

} // namespace

FgSpaceEnumeration::FgSpaceEnumeration(Universe u, Chain chain)
    : universe_(std::move(u)), chain_(std::move(chain)),
      diagonal_seqs_(sequences(chain_.denominator(), true)),
      free_seqs_(sequences(chain_.denominator(), false)) {
    const int n = universe_.size();
    __int128 total = 1;
    for (int e = 0; e < n; ++e)
        for (int y = 0; y < n; ++y) {
            total *= (y == e) ? diagonal_seqs_.size() : free_seqs_.size();
            if (total > static_cast<__int128>(UINT64_MAX))
                throw ResourceError("point-generated space family too large to index");
        }
    size_ = static_cast<std::uint64_t>(total);
}

FuzzyClosureSpace FgSpaceEnumeration::at(std::uint64_t index) const {
    if (index >= size_) throw StructuralError("space index out of range");
    const int n = universe_.size();
    std::vector<std::uint64_t> choice(static_cast<std::size_t>(n) * n, 0);
    for (int b = n * n - 1; b >= 0; --b) {
        const int e = b / n;
        const int y = b % n;
        const std::uint64_t count = (y == e) ? diagonal_seqs_.size() : free_seqs_.size();
        choice[b] = index % count;
        index /= count;
    }
    return build_from_choices(universe_, chain_, diagonal_seqs_, free_seqs_, choice);
}

FuzzyClosureSpace random_fg_space(const Universe& u, const Chain& chain, std::uint64_t seed) {
    const auto diagonal_seqs = sequences(chain.denominator(), true);
    const auto free_seqs = sequences(chain.denominator(), false);
    std::mt19937_64 rng(seed);
    const int n = u.size();
    std::vector<std::uint64_t> choice(static_cast<std::size_t>(n) * n);
    for (int e = 0; e < n; ++e)
        for (int y = 0; y < n; ++y) {
            const std::uint64_t count = (y == e) ? diagonal_seqs.size() : free_seqs.size();
            choice[e * n + y] = rng() % count;
        }
    return build_from_choices(u, chain, diagonal_seqs, free_seqs, choice);
}

FuzzyClosureSpace random_fg_space(int n, int d, std::uint64_t seed) {
    return random_fg_space(Universe::letters(n), Chain(d), seed);
}

std::vector<int> random_ground(int source_size, int target_size, std::mt19937_64& rng) {
    std::vector<int> out(source_size);
    for (int& v : out) v = static_cast<int>(rng() % static_cast<std::uint64_t>(target_size));
    return out;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(out[i], out[j]);
    }
    return out;
}

namespace {

void enumerate_tables_rec(const Universe& u, const Chain& chain, const SetEnumeration& en,
                          std::vector<FuzzySet>& closures, std::uint64_t next,
                          const std::function<void(const FuzzyClosureSpace&)>& fn) {
    const std::uint64_t carrier = en.size();
    if (next == carrier) {
        FuzzyClosureSpace space(u, chain, TableOp{closures});
        if (space.validated()) fn(space);
        return;
    }
    const FuzzySet f = en.at(next);
    // Expansiveness prunes the candidate closures to the upset of f.
    for (std::uint64_t r = 0; r < carrier; ++r) {
        const FuzzySet candidate = en.at(r);
        if (!f.leq(candidate)) continue;
        if (next == 0 && !candidate.is_zero()) continue; // c(0) = 0
        closures.push_back(candidate);
        enumerate_tables_rec(u, chain, en, closures, next + 1, fn);
        closures.pop_back();
    }
}

} // namespace

void enumerate_table_spaces(const Universe& u, const Chain& chain,
                            const std::function<void(const FuzzyClosureSpace&)>& fn) {
    SetEnumeration en(u, chain);
    if (en.size() > 9)
        throw ResourceError("table enumeration restricted to carriers of at most 9 sets");
    std::vector<FuzzySet> closures;
    closures.reserve(en.size());
    enumerate_tables_rec(u, chain, en, closures, 0, fn);
}

} // namespace fcs
