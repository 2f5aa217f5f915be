#pragma once

// Text format for hypergraphs (".hg"):
//
//   # comment
//   n r
//   v_1 ... v_r        one edge per line, 1-indexed labels
//
// Canonical output lists edges in colex order, labels increasing, single
// spaces, newline-terminated lines.

#include "hyperext/errors.hpp"
#include "hyperext/hypergraph.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace hyperext {

struct ParseOptions {
    /// Treat a repeated edge as an error instead of dropping it with a warning.
    bool duplicate_edges_are_errors = false;
};

struct ParseResult {
    Hypergraph graph;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<long long> split_integers(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc{} || ptr != line.data() + end)
            throw ParseError("not an integer: '" + std::string(line.substr(pos, end - pos)) + "'", line_no);
        out.push_back(value);
        pos = end;
    }
    return out;
}

inline bool is_blank_or_comment(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace detail

inline ParseResult parse_hypergraph(std::istream& in, const ParseOptions& options = {}) {
    std::string line;
    int line_no = 0;
    int n = -1;
    int r = -1;
    std::vector<VertexSet> edges;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<std::string> warnings;

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line)) continue;
        const std::vector<long long> values = detail::split_integers(line, line_no);
        if (n < 0) {
            if (values.size() != 2) throw ParseError("header must be 'n r'", line_no);
            if (values[0] < 0 || values[0] > kMaxVertices)
                throw ParseError("n must lie in [0, " + std::to_string(kMaxVertices) + "]", line_no);
            if (values[1] < 1 || values[1] > values[0])
                throw ParseError("r must satisfy 1 <= r <= n", line_no);
            n = static_cast<int>(values[0]);
            r = static_cast<int>(values[1]);
            continue;
        }
        VertexSet e;
        for (long long v : values) {
            if (v < 1 || v > n)
                throw ParseError("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) + "]", line_no);
            e = e.with(static_cast<int>(v - 1));
        }
        if (e.size() != r) {
            throw ParseError("edge has " + std::to_string(e.size()) + " distinct vertices, expected r = " +
                                 std::to_string(r) + (e.size() < static_cast<int>(values.size()) ? " (repeated vertex)" : ""),
                             line_no);
        }
        if (!seen.insert(e).second) {
            if (options.duplicate_edges_are_errors) throw ParseError("duplicate edge " + e.to_string(), line_no);
            warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " + e.to_string() + " dropped");
            continue;
        }
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("missing 'n r' header");
    return {Hypergraph(n, r, std::move(edges)), std::move(warnings)};
}

inline ParseResult parse_hypergraph(const std::string& text, const ParseOptions& options = {}) {
    std::istringstream in(text);
    return parse_hypergraph(in, options);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n() << ' ' << h.r() << '\n';
    for (VertexSet e : h.edges()) {
        bool first = true;
        e.for_each([&](int v) {
            if (!first) out << ' ';
            out << v + 1;
            first = false;
        });
        out << '\n';
    }
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

}  // namespace hyperext
