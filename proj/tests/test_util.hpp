#pragma once

#include "hyperext/hypergraph.hpp"

#include <initializer_list>
#include <vector>

namespace testutil {

// Builds a hypergraph from 1-based label lists.
inline hyperext::Hypergraph hg(int n, int r, std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<hyperext::VertexSet> sets;
    for (const auto& e : edges) {
        hyperext::VertexSet s;
        for (int v : e) s = s.with(v - 1);
        sets.push_back(s);
    }
    return hyperext::Hypergraph(n, r, sets);
}

inline hyperext::VertexSet vs(std::initializer_list<int> labels) {
    hyperext::VertexSet s;
    for (int v : labels) s = s.with(v - 1);
    return s;
}

}  // namespace testutil
