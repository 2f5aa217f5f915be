#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperext {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the convention C(x, y) = 0 unless 0 <= y <= x.
inline BigInt binomial(std::int64_t x, std::int64_t y) {
    if (y < 0 || x < 0 || y > x) return 0;
    if (y > x - y) y = x - y;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= y; ++i) {
        acc *= x - y + i;
        acc /= i;  // exact: acc is C(x - y + i, i) here
    }
    return acc;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return BigInt(s);
}

/// Word-sized binomial table for indexing code (n <= 64, no overflow below C(64, 32)).
class BinomialTable {
public:
    BinomialTable() {
        for (int x = 0; x <= 64; ++x) {
            table_[x][0] = 1;
            for (int y = 1; y <= x; ++y) table_[x][y] = table_[x - 1][y - 1] + (y <= x - 1 ? table_[x - 1][y] : 0);
        }
    }
    std::uint64_t operator()(int x, int y) const noexcept {
        if (y < 0 || x < 0 || y > x || x > 64) return 0;
        return table_[x][y];
    }
    static const BinomialTable& instance() {
        static const BinomialTable t;
        return t;
    }

private:
    std::uint64_t table_[65][65] = {};
};

inline std::uint64_t small_binomial(int x, int y) noexcept { return BinomialTable::instance()(x, y); }

}  // namespace hyperext
