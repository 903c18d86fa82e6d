#ifndef FCS_PARALLEL_HPP
#define FCS_PARALLEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fcs {

/// Execution policy for the harness sweeps. The serial path is a plain loop
/// kept as the reference implementation; the parallel path shards indices
/// across OpenMP threads. Both produce identical results: work items are
/// pure, and merging is by index.
struct ExecPolicy {
    bool parallel = true;
    int threads = 0; // 0 = OpenMP default

    static ExecPolicy serial() { return {false, 0}; }
};

inline int effective_threads(const ExecPolicy& policy) {
#ifdef _OPENMP
    if (!policy.parallel) return 1;
    return policy.threads > 0 ? policy.threads : omp_get_max_threads();
#else
    (void)policy;
    return 1;
#endif
}

/// fn(i) for i in [0, n); fn must only write to its own index's slots.
template <typename Fn>
void parallel_for_indexed(std::uint64_t n, const ExecPolicy& policy, Fn&& fn) {
    if (!policy.parallel || n < 2) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    const int threads = effective_threads(policy);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        fn(static_cast<std::uint64_t>(i));
#else
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
#endif
}

/// First index satisfying pred, in index order, or nullopt. The parallel path
/// evaluates fixed-size chunks concurrently and inspects them in order, so
/// serial and parallel runs return the same index.
template <typename Pred>
std::optional<std::uint64_t> find_first_index(std::uint64_t n, const ExecPolicy& policy,
                                              Pred&& pred) {
    if (!policy.parallel) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    constexpr std::uint64_t kChunk = 512;
    std::vector<char> hits;
    for (std::uint64_t base = 0; base < n; base += kChunk) {
        const std::uint64_t count = std::min(kChunk, n - base);
        hits.assign(count, 0);
        parallel_for_indexed(count, policy,
                             [&](std::uint64_t i) { hits[i] = pred(base + i) ? 1 : 0; });
        for (std::uint64_t i = 0; i < count; ++i)
            if (hits[i]) return base + i;
    }
    return std::nullopt;
}

} // namespace fcs

#endif
