#pragma once

// Binomial estimates used throughout the extremal bounds, checked exactly:
//
//   (1) C(a,b) <= (e a / b)^b
//   (2) C(b,c) <= (b / a)^c C(a,c)
//   (3) C(a,c) <= ((a - c) / (b - c))^c C(b,c)          (b > c)
//   (4) C(a,c) <= (e a / b)^c C(b,c)
//   (5) (1 + x)^p <= 1 + p^2 x                          (p >= 1, 0 < x <= 1/p)
//
// for integers a >= b >= c >= 0. Powers of e are bracketed by rational bounds
// on e, so "holds" and "fails" verdicts are both rigorous.

#include "hyperext/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperext {

/// Rational enclosure lo_num/den < e < hi_num/den from the Taylor series.
struct EBounds {
    BigInt lo_num;
    BigInt hi_num;
    BigInt den;

    static const EBounds& instance() {
        static const EBounds bounds = [] {
            // sum_{i<=N} 1/i! < e < sum_{i<=N} 1/i! + 1/(N! N)
            constexpr int terms = 24;
            BigInt factorial = 1;
            for (int i = 2; i <= terms; ++i) factorial *= i;
            BigInt sum = 0;
            BigInt falling = factorial;  // N! / i!
            for (int i = 0; i <= terms; ++i) {
                sum += falling;
                if (i < terms) falling /= (i + 1);
            }
            EBounds b;
            b.den = factorial * terms;
            b.lo_num = sum * terms;
            b.hi_num = b.lo_num + 1;
            return b;
        }();
        return bounds;
    }
};

enum class Verdict { holds, fails, undetermined, precondition_violated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::undetermined: return "undetermined";
        case Verdict::precondition_violated: return "precondition-violated";
    }
    return "?";
}

struct InequalityVerdict {
    int id = 0;
    Verdict verdict = Verdict::holds;
};

namespace detail {

// lhs <= coeff * e^m, decided with both ends of the enclosure.
inline Verdict compare_with_e_power(const BigInt& lhs, const BigInt& coeff_num, const BigInt& coeff_den, unsigned m) {
    const EBounds& e = EBounds::instance();
    const BigInt scale = boost::multiprecision::pow(e.den, m) * coeff_den;
    const BigInt lhs_scaled = lhs * scale;
    if (lhs_scaled <= coeff_num * boost::multiprecision::pow(e.lo_num, m)) return Verdict::holds;
    if (lhs_scaled > coeff_num * boost::multiprecision::pow(e.hi_num, m)) return Verdict::fails;
    return Verdict::undetermined;
}

inline Verdict exact_le(const BigInt& lhs, const BigInt& rhs) { return lhs <= rhs ? Verdict::holds : Verdict::fails; }

}  // namespace detail

/// Verdicts for (1)-(4) on (a, b, c).
inline std::vector<InequalityVerdict> binomial_inequality_suite(int a, int b, int c) {
    using boost::multiprecision::pow;
    std::vector<InequalityVerdict> out;
    const bool ordered = a >= b && b >= c && c >= 0;
    const auto ub = static_cast<unsigned>(std::max(b, 0));
    const auto uc = static_cast<unsigned>(std::max(c, 0));
    const BigInt A = a, B = b, C = c;

    if (!ordered) {
        for (int id = 1; id <= 4; ++id) out.push_back({id, Verdict::precondition_violated});
        return out;
    }
    // (1): C(a,b) b^b <= a^b e^b ; b = 0 reads as 1 <= 1.
    out.push_back({1, detail::compare_with_e_power(binomial(a, b) * pow(B, ub), pow(A, ub), 1, ub)});
    // (2): C(b,c) a^c <= b^c C(a,c)
    out.push_back({2, detail::exact_le(binomial(b, c) * pow(A, uc), pow(B, uc) * binomial(a, c))});
    // (3): C(a,c) (b-c)^c <= (a-c)^c C(b,c)
    if (b > c)
        out.push_back({3, detail::exact_le(binomial(a, c) * pow(B - C, uc), pow(A - C, uc) * binomial(b, c))});
    else
        out.push_back({3, Verdict::precondition_violated});
    // (4): C(a,c) b^c <= a^c C(b,c) e^c
    out.push_back({4, detail::compare_with_e_power(binomial(a, c) * pow(B, uc), pow(A, uc) * binomial(b, c), 1, uc)});
    return out;
}

/// Verdict for (5) with rational x.
inline InequalityVerdict power_inequality(int p, const Rational& x) {
    if (p < 1 || x <= 0 || x > Rational(1, p)) return {5, Verdict::precondition_violated};
    Rational lhs = 1;
    for (int i = 0; i < p; ++i) lhs *= (1 + x);
    return {5, lhs <= 1 + Rational(p) * p * x ? Verdict::holds : Verdict::fails};
}

/// Parses "u/v" or "u" into a rational.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_decimal(text));
    const BigInt num = parse_decimal(text.substr(0, slash));
    const BigInt den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

/// n >= coeff * (e * base)^m, decided conservatively: true only when it provably holds.
inline bool at_least_e_power(const BigInt& n, const Rational& coeff, const Rational& base, unsigned m) {
    using boost::multiprecision::pow;
    const EBounds& e = EBounds::instance();
    // coeff * base^m * (hi/den)^m as a rational, compared exactly.
    Rational bound = coeff;
    const Rational factor = base * Rational(e.hi_num, e.den);
    for (unsigned i = 0; i < m; ++i) bound *= factor;
    return Rational(n) >= bound;
}

}  // namespace hyperext
