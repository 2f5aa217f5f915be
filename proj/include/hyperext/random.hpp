#pragma once

#include "hyperext/hypergraph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hyperext {

/// Seeded generator with draws that do not depend on the standard library's
/// distribution implementations, so a seed reproduces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Each r-subset of [n] independently with probability `density`.
inline Hypergraph random_hypergraph(Rng& rng, int n, int r, double density) {
    std::vector<VertexSet> edges;
    for_each_subset(VertexSet::first(n), r, [&](VertexSet e) {
        if (rng.chance(density)) edges.push_back(e);
    });
    return Hypergraph::from_canonical(n, r, std::move(edges));
}

/// Exactly `m` distinct r-subsets of [n], uniformly.
inline Hypergraph random_hypergraph_with_size(Rng& rng, int n, int r, std::size_t m) {
    std::vector<VertexSet> pool = all_subsets(n, r);
    m = std::min(m, pool.size());
    for (std::size_t i = 0; i < m; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(m);
    return Hypergraph(n, r, std::move(pool));
}

/// `h` plus `extra` r-sets chosen uniformly among its non-edges.
inline Hypergraph add_random_edges(Rng& rng, const Hypergraph& h, std::size_t extra) {
    std::vector<VertexSet> missing;
    for_each_subset(h.vertices(), h.r(), [&](VertexSet e) {
        if (!h.contains(e)) missing.push_back(e);
    });
    extra = std::min(extra, missing.size());
    for (std::size_t i = 0; i < extra; ++i) std::swap(missing[i], missing[i + rng.below(missing.size() - i)]);
    missing.resize(extra);
    return with_edges(h, missing);
}

}  // namespace hyperext
