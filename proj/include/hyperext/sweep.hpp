#pragma once

// Parameter grids for verification sweeps.
//
// A config is a list of `name=lo..hi` or `name=value` entries separated by
// commas or newlines; '#' starts a comment. Bounds are integer expressions over
// literals, earlier names, + - * /, parentheses, min(...) and max(...):
//
//   n=6..10, k=1..2, r=2..3, s=r..min(n, r*k+r-1)
//
// Entries nest in the order written (first entry outermost). The names n, k, r
// and s are required.

#include "hyperext/errors.hpp"
#include "hyperext/verifier.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace hyperext {

struct SweepAxis {
    std::string name;
    std::string lo;  // expression text
    std::string hi;
};

struct SweepConfig {
    std::vector<SweepAxis> axes;
};

using SweepCell = std::map<std::string, int>;

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const SweepCell& vars) : text_(text), vars_(vars) {}

    long long evaluate() {
        const long long v = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
        return v;
    }

private:
    long long sum() {
        long long v = product();
        for (;;) {
            skip_space();
            if (accept('+')) v += product();
            else if (accept('-')) v -= product();
            else return v;
        }
    }
    long long product() {
        long long v = unary();
        for (;;) {
            skip_space();
            if (accept('*')) v *= unary();
            else if (accept('/')) {
                const long long d = unary();
                if (d == 0) fail("division by zero");
                v = v / d - ((v % d != 0 && ((v < 0) != (d < 0))) ? 1 : 0);
            } else return v;
        }
    }
    long long unary() {
        skip_space();
        if (accept('-')) return -unary();
        return atom();
    }
    long long atom() {
        skip_space();
        if (accept('(')) {
            const long long v = sum();
            skip_space();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            long long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = v * 10 + (text_[pos_++] - '0');
            return v;
        }
        std::string name;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        if (name.empty()) fail("expected a number, a name or '('");
        skip_space();
        if (name == "min" || name == "max") {
            if (!accept('(')) fail("expected '(' after " + name);
            long long v = sum();
            for (;;) {
                skip_space();
                if (accept(',')) {
                    const long long w = sum();
                    v = name == "min" ? std::min(v, w) : std::max(v, w);
                } else break;
            }
            if (!accept(')')) fail("missing ')' after " + name + " arguments");
            return v;
        }
        const auto it = vars_.find(name);
        if (it == vars_.end()) fail("unknown name '" + name + "' (names must be defined by an earlier entry)");
        return it->second;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("in expression '" + text_ + "': " + what); }

    const std::string& text_;
    const SweepCell& vars_;
    std::size_t pos_ = 0;
};

// Splits on commas outside parentheses.
inline std::vector<std::string> split_entries(const std::string& line) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : line) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace detail

inline long long evaluate_expression(const std::string& text, const SweepCell& vars) {
    return detail::ExprParser(text, vars).evaluate();
}

inline SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (const std::string& raw : detail::split_entries(line)) {
            const std::string entry = detail::trim(raw);
            if (entry.empty()) continue;
            const auto eq = entry.find('=');
            if (eq == std::string::npos) throw ParseError("expected name=range, got '" + entry + "'", line_no);
            SweepAxis axis;
            axis.name = detail::trim(entry.substr(0, eq));
            const std::string range = detail::trim(entry.substr(eq + 1));
            if (axis.name.empty() || range.empty()) throw ParseError("empty name or range in '" + entry + "'", line_no);
            for (const SweepAxis& a : cfg.axes)
                if (a.name == axis.name) throw ParseError("'" + axis.name + "' defined twice", line_no);
            if (const auto dots = range.find(".."); dots != std::string::npos) {
                axis.lo = detail::trim(range.substr(0, dots));
                axis.hi = detail::trim(range.substr(dots + 2));
            } else {
                axis.lo = axis.hi = range;
            }
            cfg.axes.push_back(axis);
        }
    }
    for (const char* required : {"n", "k", "r", "s"}) {
        bool present = false;
        for (const SweepAxis& a : cfg.axes) present = present || a.name == required;
        if (!present) throw ParseError(std::string("sweep config must define '") + required + "'");
    }
    return cfg;
}

/// All grid points, outermost axis first.
inline std::vector<SweepCell> expand_sweep(const SweepConfig& cfg) {
    std::vector<SweepCell> out;
    SweepCell current;
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == cfg.axes.size()) {
            out.push_back(current);
            return;
        }
        const SweepAxis& a = cfg.axes[axis];
        const long long lo = evaluate_expression(a.lo, current);
        const long long hi = evaluate_expression(a.hi, current);
        for (long long v = lo; v <= hi; ++v) {
            current[a.name] = static_cast<int>(v);
            self(self, axis + 1);
        }
        current.erase(a.name);
    };
    rec(rec, 0);
    return out;
}

/// Runs verify_extremal_cell on each cell, `jobs` cells at a time; reports come
/// back in cell order. Cells outside the construction's domain are reported
/// with status unset and an error message, as are cells that ran out of budget.
inline std::vector<VerificationReport> run_sweep(const std::vector<SweepCell>& cells, const VerifyOptions& cell_options,
                                                 int jobs) {
    std::vector<VerificationReport> out(cells.size());
    auto run_one = [&](std::size_t i) {
        const SweepCell& c = cells[i];
        const int n = c.at("n"), k = c.at("k"), r = c.at("r"), s = c.at("s");
        try {
            out[i] = verify_extremal_cell(n, k, r, s, cell_options);
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.kind = cell_options.full_enumeration ? "extremal-full" : "extremal";
            rep.cell = {{"n", n}, {"k", k}, {"r", r}, {"s", s}};
            rep.error = e.what();
            if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e)) rep.nodes = b->nodes();
            out[i] = rep;
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < cells.size(); i = next++) run_one(i);
        });
    workers.clear();  // joins
    return out;
}

}  // namespace hyperext
