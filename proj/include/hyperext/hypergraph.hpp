#pragma once

#include "hyperext/vertex_set.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperext {

/// An r-uniform hypergraph on the vertex set {0, ..., n-1}.
///
/// Immutable once built. Edges are unique, all of cardinality r, and kept in
/// colex order, so two hypergraphs with the same (n, r, edge set) compare equal
/// structurally.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and canonicalizes `edges` (sorts, removes duplicates).
    Hypergraph(int n, int r, std::vector<VertexSet> edges) : n_(n), r_(r), edges_(std::move(edges)) {
        check_dimensions(n, r);
        const VertexSet ground = VertexSet::first(n);
        for (VertexSet e : edges_) {
            if (e.size() != r)
                throw std::invalid_argument("edge " + e.to_string() + " does not have cardinality " + std::to_string(r));
            if (!ground.contains(e))
                throw std::invalid_argument("edge " + e.to_string() + " uses a vertex above " + std::to_string(n));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    /// Trusted constructor: `edges` must already be sorted, unique and valid.
    static Hypergraph from_canonical(int n, int r, std::vector<VertexSet> edges) {
        Hypergraph h;
        h.n_ = n;
        h.r_ = r;
        h.edges_ = std::move(edges);
        return h;
    }

    static Hypergraph empty(int n, int r) { return Hypergraph(n, r, {}); }

    /// Every r-subset of {0, ..., m-1} as an r-graph on n >= m vertices.
    static Hypergraph complete(int n, int r, int m) {
        check_dimensions(n, r);
        if (m > n) throw std::invalid_argument("complete: clique size exceeds n");
        return from_canonical(n, r, all_subsets(m, r));
    }
    static Hypergraph complete(int n, int r) { return complete(n, r, n); }

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    std::span<const VertexSet> edges() const noexcept { return edges_; }
    VertexSet vertices() const noexcept { return VertexSet::first(n_); }

    bool contains(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

    static void check_dimensions(int n, int r) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
        if (r < 1 || r > n)
            throw std::invalid_argument("uniformity must satisfy 1 <= r <= n");
    }

private:
    int n_ = 0;
    int r_ = 1;
    std::vector<VertexSet> edges_;
};

/// H[S]: the edges of `h` contained in `s`, on the same vertex labels.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet s) {
    if (!h.vertices().contains(s)) throw std::invalid_argument("induced_subhypergraph: vertex set out of range");
    std::vector<VertexSet> kept;
    for (VertexSet e : h.edges())
        if (s.contains(e)) kept.push_back(e);
    return Hypergraph::from_canonical(h.n(), h.r(), std::move(kept));
}

/// H - S, i.e. H induced on the complement of `s`.
inline Hypergraph delete_vertices(const Hypergraph& h, VertexSet s) {
    if (!h.vertices().contains(s)) throw std::invalid_argument("delete_vertices: vertex set out of range");
    return induced_subhypergraph(h, h.vertices() - s);
}

inline Hypergraph delete_vertex(const Hypergraph& h, int v) { return delete_vertices(h, VertexSet::single(v)); }

/// N_H(S): the (r - |S|)-sets T disjoint from S with S u T an edge, colex order.
inline std::vector<VertexSet> neighborhood(const Hypergraph& h, VertexSet s) {
    if (s.size() >= h.r()) throw std::invalid_argument("neighborhood: |S| must be smaller than r");
    if (!h.vertices().contains(s)) throw std::invalid_argument("neighborhood: vertex set out of range");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (e.contains(s)) out.push_back(e - s);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t degree(const Hypergraph& h, VertexSet s) {
    if (s.size() >= h.r()) throw std::invalid_argument("degree: |S| must be smaller than r");
    return static_cast<std::size_t>(
        std::count_if(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.contains(s); }));
}

inline std::size_t degree(const Hypergraph& h, int v) { return degree(h, VertexSet::single(v)); }

/// Adds edges to `h`; used by generators and tests.
inline Hypergraph with_edges(const Hypergraph& h, std::span<const VertexSet> extra) {
    std::vector<VertexSet> all(h.edges().begin(), h.edges().end());
    all.insert(all.end(), extra.begin(), extra.end());
    return Hypergraph(h.n(), h.r(), std::move(all));
}

/// An ordered list of r-graphs F_1..F_k on a common vertex set.
class ColoredFamily {
public:
    explicit ColoredFamily(std::vector<Hypergraph> members) : members_(std::move(members)) {
        if (members_.empty()) throw std::invalid_argument("colored family needs at least one member");
        for (const Hypergraph& f : members_)
            if (f.n() != members_.front().n() || f.r() != members_.front().r())
                throw std::invalid_argument("colored family members must share n and r");
    }

    int n() const noexcept { return members_.front().n(); }
    int r() const noexcept { return members_.front().r(); }
    int k() const noexcept { return static_cast<int>(members_.size()); }
    const Hypergraph& operator[](int i) const { return members_.at(static_cast<std::size_t>(i)); }
    std::span<const Hypergraph> members() const noexcept { return members_; }

private:
    std::vector<Hypergraph> members_;
};

}  // namespace hyperext
