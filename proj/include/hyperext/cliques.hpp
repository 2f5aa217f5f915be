#pragma once

#include "hyperext/bigint.hpp"
#include "hyperext/hypergraph.hpp"

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace hyperext {

/// K_s^r(H) with optional per-vertex counts K_s^r(u, H).
struct CliqueCount {
    int s = 0;
    BigInt total = 0;
    std::vector<BigInt> per_vertex;  // empty unless requested; indexed by 0-based vertex
};

/// Precomputed adjacency for s-clique search in an r-graph.
///
/// For every (r-1)-set T the table stores link(T) = {w : T u {w} is an edge}.
/// A vertex w extends a partial clique C iff w lies in link(T) for every
/// (r-1)-subset T of C; adding v to C only introduces the subsets containing v,
/// so the candidate set is refined incrementally.
class CliqueSearch {
public:
    explicit CliqueSearch(const Hypergraph& h) : h_(&h) {
        for (VertexSet e : h.edges())
            e.for_each([&](int w) { links_[e.without(w)] = links_[e.without(w)].with(w); });
    }

    const Hypergraph& graph() const noexcept { return *h_; }

    VertexSet link(VertexSet t) const {
        const auto it = links_.find(t);
        return it == links_.end() ? VertexSet{} : it->second;
    }

    /// Vertices outside `c` that extend the clique `c` (which must itself be a clique).
    VertexSet extenders(VertexSet c) const {
        VertexSet cand = h_->vertices() - c;
        const int r = h_->r();
        if (c.size() < r - 1) return cand;
        for_each_subset(c, r - 1, [&](VertexSet t) {
            cand = cand & link(t);
            return !cand.empty();
        });
        return cand;
    }

    /// Visits all s-cliques in colex order. Stops early if `f` returns false.
    template <typename F>
    bool for_each_clique(int s, F&& f) const {
        check_size(s);
        return descend(VertexSet{}, extenders(VertexSet{}), s, f);
    }

    /// Number of s-cliques whose lowest vertex is `lowest` (one shard of the count).
    std::uint64_t count_with_lowest(int s, int lowest, std::vector<std::uint64_t>* per_vertex) const {
        check_size(s);
        const VertexSet start = extenders(VertexSet{});
        if (!start.contains(lowest)) return 0;
        const VertexSet c = VertexSet::single(lowest);
        if (s == 1) {
            if (per_vertex) ++(*per_vertex)[lowest];
            return 1;
        }
        return ascend_count(c, refine(c, lowest, start & above(lowest)), s, per_vertex);
    }

    /// True iff the clique `c` (|c| <= s) lies inside some s-clique.
    bool extends_to_clique(VertexSet c, int s) const {
        if (c.size() >= s) return c.size() == s;
        auto stop = [](VertexSet) { return false; };
        return !descend(c, extenders(c), s, stop);
    }

private:
    static VertexSet above(int v) noexcept { return VertexSet(v >= 63 ? 0 : ~VertexSet::first(v + 1).bits()); }
    static VertexSet below(int v) noexcept { return VertexSet::first(v); }

    void check_size(int s) const {
        if (s < h_->r()) throw std::invalid_argument("clique size s must be at least r");
    }

    // Candidates for c (which already contains v) given the candidates before v was added.
    VertexSet refine(VertexSet c, int v, VertexSet cand) const {
        const int r = h_->r();
        if (r < 2 || cand.empty()) return cand;
        const VertexSet rest = c.without(v);
        if (rest.size() < r - 2) return cand;
        for_each_subset(rest, r - 2, [&](VertexSet u) {
            cand = cand & link(u.with(v));
            return !cand.empty();
        });
        return cand;
    }

    // Adds vertices in decreasing-label position order so cliques come out colex-sorted.
    template <typename F>
    bool descend(VertexSet c, VertexSet cand, int s, F& f) const {
        if (c.size() == s) return invoke(f, c);
        const int need = s - c.size();
        bool keep_going = true;
        cand.for_each([&](int v) {
            if (!keep_going) return;
            const VertexSet lower = cand & below(v);
            if (lower.size() < need - 1) return;
            const VertexSet next = c.with(v);
            keep_going = descend(next, refine(next, v, lower), s, f);
        });
        return keep_going;
    }

    std::uint64_t ascend_count(VertexSet c, VertexSet cand, int s, std::vector<std::uint64_t>* per_vertex) const {
        const int need = s - c.size();
        if (cand.size() < need) return 0;
        if (need == 1) {
            const std::uint64_t found = static_cast<std::uint64_t>(cand.size());
            if (per_vertex && found > 0) {
                c.for_each([&](int v) { (*per_vertex)[v] += found; });
                cand.for_each([&](int w) { ++(*per_vertex)[w]; });
            }
            return found;
        }
        std::uint64_t total = 0;
        cand.for_each([&](int v) {
            const VertexSet next = c.with(v);
            total += ascend_count(next, refine(next, v, cand & above(v)), s, per_vertex);
        });
        return total;
    }

    template <typename F>
    static bool invoke(F& f, VertexSet c) {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, VertexSet>, bool>) return f(c);
        else {
            f(c);
            return true;
        }
    }

    const Hypergraph* h_;
    std::unordered_map<VertexSet, VertexSet, VertexSetHash> links_;
};

/// Streams the s-cliques of `h` in colex order.
template <typename F>
void enumerate_cliques(const Hypergraph& h, int s, F&& f) {
    CliqueSearch(h).for_each_clique(s, f);
}

inline std::vector<VertexSet> list_cliques(const Hypergraph& h, int s) {
    std::vector<VertexSet> out;
    enumerate_cliques(h, s, [&](VertexSet c) { out.push_back(c); });
    return out;
}

/// K_s^r(H). Work is sharded on the lowest clique vertex; shards are merged by
/// exact addition in vertex order, so the result does not depend on `jobs`.
inline CliqueCount count_cliques(const Hypergraph& h, int s, bool per_vertex = false, int jobs = 1) {
    const CliqueSearch search(h);
    if (s < h.r()) throw std::invalid_argument("clique size s must be at least r");
    const int n = h.n();
    // A shard's count is at most C(64, 32) < 2^64, so word-sized partial sums are exact.
    std::vector<std::uint64_t> shard_totals(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::uint64_t>> shard_vertex(
        per_vertex ? static_cast<std::size_t>(n) : 0, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));

    auto run_shard = [&](int v) {
        shard_totals[v] = search.count_with_lowest(s, v, per_vertex ? &shard_vertex[v] : nullptr);
    };
    if (jobs <= 1 || n < 2) {
        for (int v = 0; v < n; ++v) run_shard(v);
    } else {
        std::atomic<int> next{0};
        std::vector<std::jthread> workers;
        for (int t = 0; t < std::min(jobs, n); ++t)
            workers.emplace_back([&] {
                for (int v = next++; v < n; v = next++) run_shard(v);
            });
    }

    CliqueCount out;
    out.s = s;
    for (int v = 0; v < n; ++v) out.total += shard_totals[v];
    if (per_vertex) {
        out.per_vertex.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) out.per_vertex[u] += shard_vertex[v][u];
    }
    return out;
}

inline BigInt clique_number_count(const Hypergraph& h, int s) { return count_cliques(h, s).total; }

/// Word-sized K_s^r(H) for hot loops (exact for n <= 64).
inline std::uint64_t count_cliques_u64(const CliqueSearch& search, int s) {
    std::uint64_t total = 0;
    for (int v = 0; v < search.graph().n(); ++v) total += search.count_with_lowest(s, v, nullptr);
    return total;
}

inline std::uint64_t count_cliques_u64(const Hypergraph& h, int s) { return count_cliques_u64(CliqueSearch(h), s); }

/// True iff every edge of `h` lies in at least one s-clique.
inline bool every_edge_in_clique(const Hypergraph& h, int s) {
    const CliqueSearch search(h);
    for (VertexSet e : h.edges())
        if (!search.extends_to_clique(e, s)) return false;
    return true;
}

/// The edges of `h` lying in at least one s-clique.
inline Hypergraph clique_supported_edges(const Hypergraph& h, int s) {
    const CliqueSearch search(h);
    std::vector<VertexSet> kept;
    for (VertexSet e : h.edges())
        if (search.extends_to_clique(e, s)) kept.push_back(e);
    return Hypergraph::from_canonical(h.n(), h.r(), std::move(kept));
}

}  // namespace hyperext
