#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperext {

/// Malformed `.hg` or configuration input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A search hit its node or wall-clock budget. Carries how far it got.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes)
        : std::runtime_error(what + " (" + std::to_string(nodes) + " nodes visited)"), nodes_(nodes) {}
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

}  // namespace hyperext
