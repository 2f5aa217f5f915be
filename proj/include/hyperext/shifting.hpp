#pragma once

#include "hyperext/errors.hpp"
#include "hyperext/hypergraph.hpp"
#include "hyperext/matchings.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperext {

// ---------------------------------------------------------------------------
// The shifting operator S_ij and stabilization

namespace detail {
inline void check_shift_pair(const Hypergraph& h, int i, int j) {
    if (i < 0 || j >= h.n() || i >= j) throw std::invalid_argument("shift requires 1 <= i < j <= n");
}
}  // namespace detail

/// S_ij(H), 0-based i < j. An edge E moves to (E - j) + i when j is in E, i is
/// not, and the target is not already an edge of H. Edge count is preserved.
inline Hypergraph shift(const Hypergraph& h, int i, int j, std::size_t* moved = nullptr) {
    detail::check_shift_pair(h, i, j);
    std::vector<VertexSet> out;
    out.reserve(h.size());
    std::size_t count = 0;
    for (VertexSet e : h.edges()) {
        if (e.contains(j) && !e.contains(i)) {
            const VertexSet target = e.without(j).with(i);
            if (!h.contains(target)) {
                out.push_back(target);
                ++count;
                continue;
            }
        }
        out.push_back(e);
    }
    if (moved) *moved = count;
    std::sort(out.begin(), out.end());
    return Hypergraph::from_canonical(h.n(), h.r(), std::move(out));
}

struct ShiftApplication {
    int i = 0;  // 0-based
    int j = 0;
    std::size_t moved = 0;
};

struct ShiftTrace {
    std::vector<ShiftApplication> applications;  // only shifts that moved an edge
    int rounds = 0;                              // sweeps performed, including the final idle one
    Hypergraph result;
};

/// Sweeps all pairs (i, j), i < j, lexicographically until a sweep moves nothing.
/// Terminates because every moved edge lowers the sum of its labels.
inline ShiftTrace stabilize(const Hypergraph& h) {
    ShiftTrace trace;
    trace.result = h;
    bool changed = true;
    while (changed) {
        changed = false;
        ++trace.rounds;
        for (int i = 0; i < h.n(); ++i)
            for (int j = i + 1; j < h.n(); ++j) {
                std::size_t moved = 0;
                Hypergraph next = shift(trace.result, i, j, &moved);
                if (moved > 0) {
                    trace.applications.push_back({i, j, moved});
                    trace.result = std::move(next);
                    changed = true;
                }
            }
    }
    return trace;
}

/// Operator definition: S_ij(H) = H for every i < j.
inline bool is_stable(const Hypergraph& h) {
    for (VertexSet e : h.edges())
        for (int j = 0; j < h.n(); ++j) {
            if (!e.contains(j)) continue;
            for (int i = 0; i < j; ++i)
                if (!e.contains(i) && !h.contains(e.without(j).with(i))) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Precedence order

/// E1 precedes E2 iff the p-th smallest element of E1 is at most the p-th
/// smallest of E2 for every p. Reflexive.
inline bool precedes(VertexSet e1, VertexSet e2) {
    if (e1.size() != e2.size()) throw std::invalid_argument("precedes: sets must have equal size");
    VertexSet::Word a = e1.bits();
    VertexSet::Word b = e2.bits();
    while (a != 0) {
        if (std::countr_zero(a) > std::countr_zero(b)) return false;
        a &= a - 1;
        b &= b - 1;
    }
    return true;
}

/// Sets covered by `e` in the precedence order: replace one element x by x - 1
/// when x - 1 is absent. Every S preceding E is reachable by such steps.
inline std::vector<VertexSet> lower_covers(VertexSet e) {
    std::vector<VertexSet> out;
    e.for_each([&](int x) {
        if (x > 0 && !e.contains(x - 1)) out.push_back(e.without(x).with(x - 1));
    });
    return out;
}

/// Downset check: every S preceding an edge is itself an edge. Equivalent to is_stable().
inline bool stable_closure_check(const Hypergraph& h) {
    for (VertexSet e : h.edges())
        for (VertexSet s : lower_covers(e))
            if (!h.contains(s)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration of families of r-sets

/// Colex rank of an r-set: sum over the p-th smallest element c_p of C(c_p, p).
inline std::size_t colex_rank(VertexSet e) {
    std::size_t rank = 0;
    int p = 1;
    e.for_each([&](int c) { rank += small_binomial(c, p++); });
    return rank;
}

/// Decides whether `candidate` may join the family `current`. Must be monotone:
/// once a family is rejected, every superset would be rejected too.
using FamilyFilter = std::function<bool(std::span<const VertexSet> current, VertexSet candidate)>;

/// Filter keeping nu <= k. Adding E breaks the bound iff the edges disjoint from E
/// already hold a matching of size k.
inline FamilyFilter matching_at_most(int k, int r, SearchBudget budget = {}) {
    return [k, r, budget](std::span<const VertexSet> current, VertexSet candidate) {
        std::vector<VertexSet> disjoint;
        for (VertexSet e : current)
            if (!e.intersects(candidate)) disjoint.push_back(e);
        if (static_cast<int>(disjoint.size()) < k) return true;
        return !find_matching_of_size(disjoint, r, k, budget).has_value();
    };
}

struct EnumerationBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::optional<std::chrono::milliseconds> max_time;
};

/// Walks families of r-subsets of [n] by adding elements in increasing colex
/// rank, so each family is reached along exactly one path and emitted once.
///
/// In downset mode an element may only be added once all its lower covers are
/// present; the emitted families are then exactly the stable r-graphs. In full
/// mode every family is emitted. An optional monotone filter prunes subtrees.
///
/// Work splits into shards: the nodes at `shard_depth` (families of that many
/// edges) each root an independent subtree; shallower nodes form the preamble.
class FamilyEnumerator {
public:
    struct Shard {
        std::vector<std::size_t> path;  // element indices, increasing
    };

    FamilyEnumerator(int n, int r, bool downsets_only, FamilyFilter filter = {}, EnumerationBudget budget = {})
        : n_(n), r_(r), downsets_only_(downsets_only), filter_(std::move(filter)), budget_(budget) {
        Hypergraph::check_dimensions(n, r);
        elements_ = all_subsets(n, r);
        if (elements_.size() > 4096) throw std::invalid_argument("family enumeration: too many r-sets to materialize");
        covers_.resize(elements_.size());
        for (std::size_t x = 0; x < elements_.size(); ++x)
            for (VertexSet c : lower_covers(elements_[x])) covers_[x].push_back(colex_rank(c));
        start_ = std::chrono::steady_clock::now();
    }

    std::span<const VertexSet> elements() const noexcept { return elements_; }
    std::uint64_t nodes() const noexcept { return nodes_.load(); }

    /// Visits every admissible family with fewer than `shard_depth` edges and
    /// returns the shard roots (families of exactly `shard_depth` edges) in DFS order.
    template <typename Visit>
    std::vector<Shard> run_preamble(std::size_t shard_depth, Visit&& visit) {
        State st(elements_.size());
        std::vector<Shard> shards;
        preamble(st, -1, shard_depth, visit, shards);
        return shards;
    }

    /// Visits the subtree rooted at `shard` (including the root). Thread-safe
    /// across distinct shards as long as `visit` is.
    template <typename Visit>
    void run_shard(const Shard& shard, Visit&& visit) {
        State st(elements_.size());
        for (std::size_t x : shard.path) st.push(x, elements_[x]);
        dfs(st, shard.path.empty() ? -1L : static_cast<long>(shard.path.back()), visit);
    }

    /// Serial walk over everything.
    template <typename Visit>
    void run(Visit&& visit) {
        State st(elements_.size());
        dfs(st, -1, visit);
    }

private:
    struct State {
        explicit State(std::size_t size) : present(size, 0) {}
        void push(std::size_t x, VertexSet e) {
            present[x] = 1;
            edges.push_back(e);
        }
        void pop(std::size_t x) {
            present[x] = 0;
            edges.pop_back();
        }
        std::vector<char> present;
        std::vector<VertexSet> edges;
    };

    void tick() {
        const std::uint64_t count = ++nodes_;
        if (count > budget_.max_nodes) throw BudgetExceeded("family enumeration exceeded its node budget", count);
        if (budget_.max_time && (count & 1023U) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.max_time)
            throw BudgetExceeded("family enumeration exceeded its time budget", count);
    }

    bool can_add(const State& st, std::size_t x) const {
        if (downsets_only_)
            for (std::size_t c : covers_[x])
                if (!st.present[c]) return false;
        return !filter_ || filter_(st.edges, elements_[x]);
    }

    template <typename Visit>
    void dfs(State& st, long last, Visit& visit) {
        tick();
        visit(std::span<const VertexSet>(st.edges));
        for (std::size_t x = static_cast<std::size_t>(last + 1); x < elements_.size(); ++x) {
            if (!can_add(st, x)) continue;
            st.push(x, elements_[x]);
            dfs(st, static_cast<long>(x), visit);
            st.pop(x);
        }
    }

    template <typename Visit>
    void preamble(State& st, long last, std::size_t depth, Visit& visit, std::vector<Shard>& shards) {
        if (st.edges.size() == depth) {
            Shard shard;
            for (std::size_t x = 0; x < elements_.size(); ++x)
                if (st.present[x]) shard.path.push_back(x);
            shards.push_back(std::move(shard));
            return;
        }
        tick();
        visit(std::span<const VertexSet>(st.edges));
        for (std::size_t x = static_cast<std::size_t>(last + 1); x < elements_.size(); ++x) {
            if (!can_add(st, x)) continue;
            st.push(x, elements_[x]);
            preamble(st, static_cast<long>(x), depth, visit, shards);
            st.pop(x);
        }
    }

    int n_;
    int r_;
    bool downsets_only_;
    FamilyFilter filter_;
    EnumerationBudget budget_;
    std::vector<VertexSet> elements_;
    std::vector<std::vector<std::size_t>> covers_;
    std::atomic<std::uint64_t> nodes_{0};
    std::chrono::steady_clock::time_point start_;
};

/// Streams every stable r-graph on [n] (every downset of the precedence order),
/// restricted by an optional monotone filter such as matching_at_most().
template <typename Visit>
void enumerate_stable(int n, int r, Visit&& visit, FamilyFilter filter = {}, EnumerationBudget budget = {}) {
    FamilyEnumerator walker(n, r, true, std::move(filter), budget);
    walker.run([&](std::span<const VertexSet> edges) {
        visit(Hypergraph::from_canonical(n, r, std::vector<VertexSet>(edges.begin(), edges.end())));
    });
}

}  // namespace hyperext
