#pragma once

#include "hyperext/bigint.hpp"
#include "hyperext/errors.hpp"
#include "hyperext/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperext {

/// Pairwise disjoint edges of some host hypergraph.
struct Matching {
    std::vector<VertexSet> edges;

    std::size_t size() const noexcept { return edges.size(); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

/// One edge per color, pairwise disjoint. `color` is 0-based (printed 1-based).
struct RainbowPick {
    int color = 0;
    VertexSet edge;
    friend bool operator==(const RainbowPick&, const RainbowPick&) = default;
};

struct RainbowMatching {
    std::vector<RainbowPick> picks;  // sorted by color
};

struct SearchBudget {
    /// Hard cap on search nodes; exceeding it throws BudgetExceeded.
    std::uint64_t max_nodes = 200'000'000;
};

struct MatchingResult {
    int size = 0;
    Matching witness;
    std::uint64_t nodes = 0;
};

inline bool pairwise_disjoint(std::span<const VertexSet> sets) {
    VertexSet used;
    for (VertexSet e : sets) {
        if (used.intersects(e)) return false;
        used = used | e;
    }
    return true;
}

inline bool is_matching_of(const Hypergraph& h, const Matching& m) {
    return pairwise_disjoint(m.edges) &&
           std::all_of(m.edges.begin(), m.edges.end(), [&](VertexSet e) { return h.contains(e); });
}

inline bool is_rainbow_matching_of(const ColoredFamily& fam, const RainbowMatching& m) {
    if (static_cast<int>(m.picks.size()) != fam.k()) return false;
    std::vector<VertexSet> edges;
    for (int i = 0; i < fam.k(); ++i) {
        if (m.picks[i].color != i || !fam[i].contains(m.picks[i].edge)) return false;
        edges.push_back(m.picks[i].edge);
    }
    return pairwise_disjoint(edges);
}

namespace detail {

// Branch and bound over an edge list. Branches on the lowest vertex covered by a
// remaining edge: take each edge through it, or drop the vertex.
class MatchingSearch {
public:
    MatchingSearch(int r, int stop_at, const SearchBudget& budget) : r_(r), stop_at_(stop_at), budget_(budget) {}

    MatchingResult run(std::vector<VertexSet> edges) {
        VertexSet covered;
        for (VertexSet e : edges) covered = covered | e;
        ceiling_ = std::min<int>(covered.size() / r_, static_cast<int>(edges.size()));
        if (stop_at_ > 0) ceiling_ = std::min(ceiling_, stop_at_);
        solve(edges, 0);
        return {static_cast<int>(best_.size()), Matching{best_}, nodes_};
    }

private:
    void solve(const std::vector<VertexSet>& edges, int depth) {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("matching search exceeded its node budget", nodes_);
        if (depth > static_cast<int>(best_.size())) best_ = current_;
        if (static_cast<int>(best_.size()) >= ceiling_ || edges.empty()) return;
        VertexSet covered;
        for (VertexSet e : edges) covered = covered | e;
        const int bound = depth + std::min<int>(covered.size() / r_, static_cast<int>(edges.size()));
        if (bound <= static_cast<int>(best_.size())) return;

        const int v = covered.min();
        std::vector<VertexSet> rest;
        for (VertexSet e : edges) {
            if (!e.contains(v)) continue;
            rest.clear();
            for (VertexSet f : edges)
                if (!f.intersects(e)) rest.push_back(f);
            current_.push_back(e);
            solve(rest, depth + 1);
            current_.pop_back();
            if (static_cast<int>(best_.size()) >= ceiling_) return;
        }
        rest.clear();
        for (VertexSet f : edges)
            if (!f.contains(v)) rest.push_back(f);
        solve(rest, depth);
    }

    int r_;
    int stop_at_;
    SearchBudget budget_;
    int ceiling_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<VertexSet> current_;
    std::vector<VertexSet> best_;
};

}  // namespace detail

/// nu(H) with a maximum matching as witness.
inline MatchingResult matching_number(const Hypergraph& h, const SearchBudget& budget = {}) {
    return detail::MatchingSearch(h.r(), 0, budget).run(std::vector<VertexSet>(h.edges().begin(), h.edges().end()));
}

/// Some matching of size `t` among `edges` (r-sets), if one exists.
inline std::optional<Matching> find_matching_of_size(std::span<const VertexSet> edges, int r, int t,
                                                     const SearchBudget& budget = {}) {
    if (t <= 0) return Matching{};
    MatchingResult res = detail::MatchingSearch(r, t, budget).run(std::vector<VertexSet>(edges.begin(), edges.end()));
    if (res.size < t) return std::nullopt;
    res.witness.edges.resize(static_cast<std::size_t>(t));
    return res.witness;
}

/// nu(H) <= k; stops as soon as a matching of size k + 1 turns up.
inline bool has_matching_at_most(const Hypergraph& h, int k, const SearchBudget& budget = {}) {
    return !find_matching_of_size(h.edges(), h.r(), k + 1, budget).has_value();
}

/// Exhaustive backtracking for one pairwise disjoint edge per color. Colors are
/// tried in ascending order of edge count (ties by index).
inline std::optional<RainbowMatching> find_rainbow_matching(const ColoredFamily& fam, const SearchBudget& budget = {}) {
    const int k = fam.k();
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fam[a].size() < fam[b].size(); });

    std::vector<VertexSet> chosen(static_cast<std::size_t>(k));
    std::uint64_t nodes = 0;
    auto search = [&](auto&& self, int depth, VertexSet used) -> bool {
        if (depth == k) return true;
        if (++nodes > budget.max_nodes) throw BudgetExceeded("rainbow search exceeded its node budget", nodes);
        const int color = order[depth];
        for (VertexSet e : fam[color].edges()) {
            if (e.intersects(used)) continue;
            chosen[color] = e;
            if (self(self, depth + 1, used | e)) return true;
        }
        return false;
    };
    if (!search(search, 0, VertexSet{})) return std::nullopt;
    RainbowMatching out;
    for (int i = 0; i < k; ++i) out.picks.push_back({i, chosen[i]});
    return out;
}

/// Degree bound 2(k-1) C(n-2, r-2) from the high-degree-vertex matching lemma.
inline BigInt high_degree_threshold(int n, int k, int r) { return 2 * (k - 1) * binomial(n - 2, r - 2); }

/// Builds a matching E_1, ..., E_k with v_i in E_i. Step i takes the first edge
/// (colex) through v_i that avoids every earlier E_j and every later v_j.
///
/// The purely greedy pass can get stuck even when every deg(v_i) exceeds
/// high_degree_threshold(): an early edge may cover every neighbor a later
/// vertex needs. With `backtrack` set, the search resumes from the last choice
/// instead, which always succeeds under that hypothesis when rk <= n.
inline std::optional<Matching> greedy_matching_from_high_degree_vertices(const Hypergraph& h, std::span<const int> vs,
                                                                         bool backtrack = true) {
    VertexSet all_v;
    for (int v : vs) {
        if (v < 0 || v >= h.n()) throw std::invalid_argument("greedy matching: vertex out of range");
        if (all_v.contains(v)) throw std::invalid_argument("greedy matching: vertices must be distinct");
        all_v = all_v.with(v);
    }
    const int k = static_cast<int>(vs.size());
    std::vector<VertexSet> chosen;
    auto step = [&](auto&& self, int i, VertexSet used) -> bool {
        if (i == k) return true;
        VertexSet later;
        for (int j = i + 1; j < k; ++j) later = later.with(vs[j]);
        for (VertexSet e : h.edges()) {
            if (!e.contains(vs[i]) || e.intersects(used) || e.intersects(later)) continue;
            chosen.push_back(e);
            if (self(self, i + 1, used | e)) return true;
            chosen.pop_back();
            if (!backtrack) return false;
        }
        return false;
    };
    if (!step(step, 0, VertexSet{})) return std::nullopt;
    return Matching{chosen};
}

/// r(k-1) C(n-a-1, r-a-1): the degree bound under which the tuple greedy provably succeeds.
inline BigInt tuple_degree_threshold(int n, int k, int r, int a) {
    return BigInt(r) * (k - 1) * binomial(n - a - 1, r - a - 1);
}

/// For disjoint a-sets A_1..A_k, picks B_i in N_H(A_i) avoiding all A_j and all
/// earlier B_j (first in colex order) and returns {A_i u B_i}. No backtracking.
inline std::optional<Matching> greedy_matching_from_disjoint_tuples(const Hypergraph& h,
                                                                    std::span<const VertexSet> tuples) {
    VertexSet all_a;
    for (VertexSet a : tuples) {
        if (a.size() != tuples.front().size()) throw std::invalid_argument("tuple greedy: tuples must share a size");
        if (a.size() >= h.r()) throw std::invalid_argument("tuple greedy: tuple size must be below r");
        if (a.intersects(all_a)) throw std::invalid_argument("tuple greedy: tuples must be pairwise disjoint");
        all_a = all_a | a;
    }
    Matching out;
    VertexSet used_b;
    for (VertexSet a : tuples) {
        std::optional<VertexSet> pick;
        for (VertexSet b : neighborhood(h, a)) {
            if (!b.intersects(all_a) && !b.intersects(used_b)) {
                pick = b;
                break;
            }
        }
        if (!pick) return std::nullopt;
        used_b = used_b | *pick;
        out.edges.push_back(a | *pick);
    }
    return out;
}

}  // namespace hyperext
