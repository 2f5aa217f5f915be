#pragma once

#include "hyperext/bigint.hpp"
#include "hyperext/cliques.hpp"
#include "hyperext/hypergraph.hpp"
#include "hyperext/inequalities.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperext {

/// Size of the head segment [ak + a - 1].
constexpr int head_size(int k, int a) noexcept { return a * k + a - 1; }

/// Head-intersection level a = floor((s - r) / k) + 1.
inline int level(int k, int r, int s) {
    if (k < 1) throw std::invalid_argument("level requires k >= 1");
    if (s < r) throw std::invalid_argument("level requires s >= r");
    return (s - r) / k + 1;
}

namespace detail {
inline void check_family_params(int n, int k, int r, int a) {
    if (k < 0) throw std::invalid_argument("extremal family: k must be non-negative");
    if (a < 1 || a > r) throw std::invalid_argument("extremal family: need 1 <= a <= r");
    if (r > n) throw std::invalid_argument("extremal family: need r <= n");
    if (n < head_size(k, a)) throw std::invalid_argument("extremal family: need n >= ak + a - 1");
    Hypergraph::check_dimensions(n, r);
}

// Number of s-sets of [n] meeting the head [h] in at least `lo` vertices; for
// s < r every s-set is vacuously a clique.
inline BigInt family_clique_count(int n, int k, int r, int a, int s) {
    if (s < 0) return 0;
    if (s < r) return binomial(n, s);
    const int h = head_size(k, a);
    BigInt total = 0;
    for (int i = std::max(0, s - r + a); i <= std::min(s, h); ++i) total += binomial(h, i) * binomial(n - h, s - i);
    return total;
}
}  // namespace detail

/// F^(r)_{n,k,a}: every r-subset of [n] with at least a vertices in [ak + a - 1].
/// Its matching number is at most k, since k + 1 disjoint edges would need
/// (k + 1) a head vertices.
inline Hypergraph build_extremal_family(int n, int k, int r, int a) {
    detail::check_family_params(n, k, r, a);
    const VertexSet head = VertexSet::first(head_size(k, a));
    std::vector<VertexSet> edges;
    for_each_subset(VertexSet::first(n), r, [&](VertexSet e) {
        if ((e & head).size() >= a) edges.push_back(e);
    });
    return Hypergraph::from_canonical(n, r, std::move(edges));
}

/// K_s^r(F^(r)_{n,k,a}) = sum_{i = s-r+a}^{s} C(ak+a-1, i) C(n-ak-a+1, s-i): an
/// s-clique of the family meets the head in at least s - r + a vertices.
inline BigInt closed_form_clique_count(int n, int k, int r, int a, int s) {
    detail::check_family_params(n, k, r, a);
    if (s < r) throw std::invalid_argument("closed form requires s >= r");
    return detail::family_clique_count(n, k, r, a, s);
}

/// C(rk + r - 1, s), the s-clique count of the complete-head family
/// F^(r)_{n,k,r} whenever n >= rk + r - 1.
inline BigInt head_clique_count(int k, int r, int s) { return binomial(head_size(k, r), s); }

/// K_s(F_{n-1,k-1,1}) + K_{s-1}(F_{n-1,k-1,1}) == K_s(F_{n,k,1}), evaluated exactly.
/// For s = r the (r-1)-cliques are all (r-1)-sets, and the identity becomes the
/// edge-count recurrence.
inline bool recurrence_check(int n, int k, int r, int s) {
    if (k < 1 || s < r || n < 1) throw std::invalid_argument("recurrence_check: need k >= 1, s >= r");
    detail::check_family_params(n, k, r, 1);
    detail::check_family_params(n - 1, k - 1, r, 1);
    const BigInt lhs =
        detail::family_clique_count(n - 1, k - 1, r, 1, s) + detail::family_clique_count(n - 1, k - 1, r, 1, s - 1);
    return lhs == detail::family_clique_count(n, k, r, 1, s);
}

/// n*(k, r, s) = (r/a)^((s-r+a)/(r-a)) * (rk + r - 1 - s) / s. Below it the
/// complete-head family has more s-cliques than F^(r)_{n,k,a}. Informational.
inline double n_star(int k, int r, int s) {
    if (k < 1 || r < 1 || s < r || s > (r - 1) * (k + 1))
        throw std::invalid_argument("n_star requires r <= s <= (r-1)(k+1)");
    const int a = level(k, r, s);
    if (a >= r) throw std::invalid_argument("n_star is undefined when a = r");
    const double exponent = static_cast<double>(s - r + a) / (r - a);
    return std::pow(static_cast<double>(r) / a, exponent) * (static_cast<double>(r * k + r - 1 - s) / s);
}

enum class Regime { I, II, III };

inline const char* to_string(Regime g) {
    switch (g) {
        case Regime::I: return "I";
        case Regime::II: return "II";
        case Regime::III: return "III";
    }
    return "?";
}

/// (I) r <= s <= k+r-1, (II) k+r <= s <= (r-1)(k+1), (III) (r-1)k+r <= s <= rk+r-1.
/// The three ranges partition [r, rk+r-1] for r >= 2. For r = 1, (I) and (III)
/// coincide, so the classification is refused.
inline std::optional<Regime> classify_regime(int k, int r, int s) {
    if (r < 2 || k < 1) return std::nullopt;
    if (s >= r && s <= k + r - 1) return Regime::I;
    if (s >= k + r && s <= (r - 1) * (k + 1)) return Regime::II;
    if (s >= (r - 1) * k + r && s <= r * k + r - 1) return Regime::III;
    return std::nullopt;
}

struct ExtremalParams {
    int n = 0;
    int k = 0;
    int r = 0;
    int s = 0;

    int a() const { return level(k, r, s); }
};

struct TheoremBound {
    Regime regime = Regime::I;
    int a = 1;
    BigInt bound;                    // K_s^r of the regime's construction
    std::optional<BigInt> gap_bound;  // regime III only
};

/// The maximum claimed for the cell's regime: K_s^r(F_{n,k,1}) in (I),
/// K_s^r(F_{n,k,a}) in (II), K_s^r(F_{n,k,r}) = C(rk+r-1, s) in (III) together
/// with the second-level bound C(rk+r-1, s) - C(rk-1, s-r). The n-thresholds
/// are not enforced here; see hypothesis_threshold_met().
inline TheoremBound theorem_bound(const ExtremalParams& p) {
    const std::optional<Regime> regime = classify_regime(p.k, p.r, p.s);
    if (!regime)
        throw std::invalid_argument("s = " + std::to_string(p.s) + " lies outside [r, rk + r - 1] (or r < 2)");
    TheoremBound out;
    out.regime = *regime;
    out.a = *regime == Regime::I ? 1 : p.a();
    out.bound = closed_form_clique_count(p.n, p.k, p.r, out.a, p.s);
    if (*regime == Regime::III) out.gap_bound = head_clique_count(p.k, p.r, p.s) - binomial(p.r * p.k - 1, p.s - p.r);
    return out;
}

/// Whether n provably meets the regime's size hypothesis:
/// (I) n >= 4 (er)^{s-r+2} k, (II) n >= 4 r^2 k (er/(a-1))^{s-r+a}, (III) n >= rk + r - 1.
inline bool hypothesis_threshold_met(const ExtremalParams& p) {
    const std::optional<Regime> regime = classify_regime(p.k, p.r, p.s);
    if (!regime) return false;
    switch (*regime) {
        case Regime::I:
            return at_least_e_power(p.n, Rational(4 * p.k), Rational(p.r), static_cast<unsigned>(p.s - p.r + 2));
        case Regime::II: {
            const int a = p.a();
            return at_least_e_power(p.n, Rational(4 * p.r * p.r * p.k), Rational(p.r, a - 1),
                                    static_cast<unsigned>(p.s - p.r + a));
        }
        case Regime::III: return p.n >= head_size(p.k, p.r);
    }
    return false;
}

/// Size hypothesis of the rainbow theorem: n >= 4k(t-r+2)(er)^{t-r+2}.
inline bool rainbow_threshold_met(int n, int k, int r, int t) {
    return at_least_e_power(n, Rational(4 * k * (t - r + 2)), Rational(r), static_cast<unsigned>(t - r + 2));
}

struct ColorHypothesis {
    bool holds = false;
    std::optional<int> witness_s;  // smallest s with a strict excess
};

/// For each color F_i: is there s in [r, t] with K_s^r(F_i) > K_s^r(F^(r)_{n,k-1,1})?
inline std::vector<ColorHypothesis> rainbow_hypothesis_check(const ColoredFamily& fam, int t) {
    const int r = fam.r();
    const int k = fam.k();
    if (t < r || t > k + r - 2) throw std::invalid_argument("rainbow hypothesis needs r <= t <= k + r - 2");
    std::vector<BigInt> reference;
    for (int s = r; s <= t; ++s) reference.push_back(closed_form_clique_count(fam.n(), k - 1, r, 1, s));
    std::vector<ColorHypothesis> out;
    for (const Hypergraph& f : fam.members()) {
        ColorHypothesis verdict;
        const CliqueSearch search(f);
        for (int s = r; s <= t; ++s) {
            if (BigInt(count_cliques_u64(search, s)) > reference[static_cast<std::size_t>(s - r)]) {
                verdict.holds = true;
                verdict.witness_s = s;
                break;
            }
        }
        out.push_back(verdict);
    }
    return out;
}

}  // namespace hyperext
