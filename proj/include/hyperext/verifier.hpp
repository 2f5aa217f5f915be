#pragma once

// Exhaustive desk-scale checks of the extremal statements.
//
// The extremal search only visits stable r-graphs. Shifting never lowers an
// s-clique count and never raises the matching number, and repeated shifting
// ends in a stable r-graph, so the maximum over stable r-graphs with nu <= k
// equals the maximum over all r-graphs with nu <= k. The full-enumeration mode
// drops the reduction and is used to cross-check it on small cells.

#include "hyperext/bigint.hpp"
#include "hyperext/cliques.hpp"
#include "hyperext/errors.hpp"
#include "hyperext/extremal.hpp"
#include "hyperext/hypergraph.hpp"
#include "hyperext/matchings.hpp"
#include "hyperext/random.hpp"
#include "hyperext/shifting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hyperext {

enum class Status { confirmed, bound_not_yet_active, counterexample };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::confirmed: return "confirmed";
        case Status::bound_not_yet_active: return "bound-not-yet-active";
        case Status::counterexample: return "counterexample";
    }
    return "?";
}

struct VerificationReport {
    std::string kind;                                 // "extremal", "extremal-full", "head-intersection", "rainbow"
    std::vector<std::pair<std::string, int>> cell;    // ordered parameters
    std::optional<Regime> regime;
    BigInt claimed_bound = 0;
    BigInt observed_max = 0;
    std::optional<BigInt> gap_bound;                  // regime III
    std::optional<BigInt> observed_below_bound;       // largest count strictly below claimed_bound
    std::optional<Hypergraph> witness;
    std::optional<std::vector<Hypergraph>> witness_family;  // rainbow cells
    std::optional<Status> status;                     // unset when the search was cut off
    bool threshold_met = false;
    std::uint64_t families = 0;                       // families examined (or qualifying, see kind)
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
    std::string error;
};

struct VerifyOptions {
    int jobs = 1;
    /// Families of this many edges root the parallel shards. Independent of
    /// `jobs`, so reports do not depend on the worker count.
    std::size_t shard_depth = 3;
    bool full_enumeration = false;
    EnumerationBudget budget;
    SearchBudget matching_budget;
};

namespace detail {

// Order-independent tie-break for witnesses: fewer edges, then colex-smaller edge list.
inline bool better_witness(std::span<const VertexSet> a, const std::vector<VertexSet>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::uint64_t to_u64_saturating(const BigInt& v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v);
}

/// Runs the enumerator over preamble and shards, with one accumulator per shard.
/// `Acc` needs `void visit(std::span<const VertexSet>)` and `void merge(const Acc&)`.
template <typename Acc, typename MakeAcc>
Acc run_sharded(FamilyEnumerator& walker, const VerifyOptions& opt, MakeAcc make) {
    Acc total = make();
    auto shards = walker.run_preamble(opt.shard_depth, [&](std::span<const VertexSet> f) { total.visit(f); });
    std::vector<Acc> partial;
    partial.reserve(shards.size());
    for (std::size_t i = 0; i < shards.size(); ++i) partial.push_back(make());

    if (opt.jobs <= 1 || shards.size() < 2) {
        for (std::size_t i = 0; i < shards.size(); ++i)
            walker.run_shard(shards[i], [&](std::span<const VertexSet> f) { partial[i].visit(f); });
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        {
            std::vector<std::jthread> workers;
            const auto count = std::min<std::size_t>(static_cast<std::size_t>(opt.jobs), shards.size());
            for (std::size_t t = 0; t < count; ++t)
                workers.emplace_back([&] {
                    try {
                        for (std::size_t i = next++; i < shards.size() && !failed; i = next++)
                            walker.run_shard(shards[i], [&](std::span<const VertexSet> f) { partial[i].visit(f); });
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                });
        }
        if (failure) std::rethrow_exception(failure);
    }
    for (const Acc& p : partial) total.merge(p);
    return total;
}

struct ExtremalAccumulator {
    int n = 0;
    int r = 0;
    int s = 0;
    std::uint64_t bound = 0;
    std::uint64_t max_count = 0;
    bool seen_any = false;
    std::vector<VertexSet> witness;
    std::optional<std::uint64_t> below_bound;  // largest count < bound
    std::vector<VertexSet> below_witness;
    std::uint64_t families = 0;

    void visit(std::span<const VertexSet> edges) {
        ++families;
        const Hypergraph h = Hypergraph::from_canonical(n, r, std::vector<VertexSet>(edges.begin(), edges.end()));
        const std::uint64_t count = count_cliques_u64(h, s);
        offer_max(count, edges);
        if (count < bound) offer_below(count, edges);
    }

    void offer_max(std::uint64_t count, std::span<const VertexSet> edges) {
        if (!seen_any || count > max_count || (count == max_count && better_witness(edges, witness))) {
            seen_any = true;
            max_count = count;
            witness.assign(edges.begin(), edges.end());
        }
    }

    void offer_below(std::uint64_t count, std::span<const VertexSet> edges) {
        if (!below_bound || count > *below_bound || (count == *below_bound && better_witness(edges, below_witness))) {
            below_bound = count;
            below_witness.assign(edges.begin(), edges.end());
        }
    }

    void merge(const ExtremalAccumulator& o) {
        families += o.families;
        if (o.seen_any) offer_max(o.max_count, o.witness);
        if (o.below_bound) offer_below(*o.below_bound, o.below_witness);
    }
};

inline std::int64_t millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Maximum of K_s^r over r-graphs on [n] with nu <= k (stable ones unless
/// `full_enumeration`), compared with the regime's claimed maximum. In regime
/// (III) the largest count strictly below the maximum is also checked against
/// C(rk+r-1, s) - C(rk-1, s-r).
///
/// Throws BudgetExceeded if the enumeration budget runs out.
inline VerificationReport verify_extremal_cell(int n, int k, int r, int s, const VerifyOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExtremalParams params{n, k, r, s};
    const TheoremBound tb = theorem_bound(params);

    VerificationReport rep;
    rep.kind = opt.full_enumeration ? "extremal-full" : "extremal";
    rep.cell = {{"n", n}, {"k", k}, {"r", r}, {"s", s}};
    rep.regime = tb.regime;
    rep.claimed_bound = tb.bound;
    rep.gap_bound = tb.gap_bound;
    rep.threshold_met = hypothesis_threshold_met(params);

    FamilyEnumerator walker(n, r, !opt.full_enumeration, matching_at_most(k, r, opt.matching_budget), opt.budget);
    const std::uint64_t bound = detail::to_u64_saturating(tb.bound);
    const auto acc = detail::run_sharded<detail::ExtremalAccumulator>(walker, opt, [&] {
        detail::ExtremalAccumulator a;
        a.n = n;
        a.r = r;
        a.s = s;
        a.bound = bound;
        return a;
    });

    rep.observed_max = acc.max_count;
    rep.witness = Hypergraph::from_canonical(n, r, acc.witness);
    if (acc.below_bound) rep.observed_below_bound = BigInt(*acc.below_bound);
    rep.families = acc.families;
    rep.nodes = walker.nodes();

    bool violated = rep.observed_max > rep.claimed_bound;
    if (tb.gap_bound && rep.observed_below_bound && *rep.observed_below_bound > *tb.gap_bound) violated = true;
    if (!violated) rep.status = Status::confirmed;
    else rep.status = rep.threshold_met ? Status::counterexample : Status::bound_not_yet_active;
    rep.millis = detail::millis_since(t0);
    return rep;
}

/// For every stable r-graph on [n] with nu <= k whose edges all lie in s-cliques,
/// checks |E n [rk + a - 1]| >= a for each edge E. `families` counts the
/// qualifying hypergraphs; `observed_max` counts violating ones.
inline VerificationReport verify_head_intersection(int n, int k, int r, int s, const VerifyOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k < 1 || s < k + r || s > r * k + r - 1)
        throw std::invalid_argument("head-intersection check needs k + r <= s <= rk + r - 1");
    if (n < r * k + r - 1) throw std::invalid_argument("head-intersection check needs n >= rk + r - 1");
    const int a = level(k, r, s);
    const VertexSet head = VertexSet::first(r * k + a - 1);

    struct Acc {
        int n, r, s, a;
        VertexSet head;
        std::uint64_t qualifying = 0;
        std::uint64_t violations = 0;
        std::vector<VertexSet> witness;
        bool has_witness = false;

        void visit(std::span<const VertexSet> edges) {
            const Hypergraph h = Hypergraph::from_canonical(n, r, std::vector<VertexSet>(edges.begin(), edges.end()));
            if (!every_edge_in_clique(h, s)) return;
            ++qualifying;
            const bool ok = std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return (e & head).size() >= a; });
            if (!ok) offer(edges, 1);
        }
        void offer(std::span<const VertexSet> edges, std::uint64_t count) {
            violations += count;
            if (!has_witness || detail::better_witness(edges, witness)) {
                witness.assign(edges.begin(), edges.end());
                has_witness = true;
            }
        }
        void merge(const Acc& o) {
            qualifying += o.qualifying;
            if (o.has_witness) offer(o.witness, o.violations);
            else violations += o.violations;
        }
    };

    FamilyEnumerator walker(n, r, true, matching_at_most(k, r, opt.matching_budget), opt.budget);
    const Acc acc = detail::run_sharded<Acc>(walker, opt, [&] { return Acc{n, r, s, a, head, 0, 0, {}, false}; });

    VerificationReport rep;
    rep.kind = "head-intersection";
    rep.cell = {{"n", n}, {"k", k}, {"r", r}, {"s", s}};
    rep.regime = classify_regime(k, r, s);
    rep.claimed_bound = 0;
    rep.observed_max = acc.violations;
    if (acc.has_witness) rep.witness = Hypergraph::from_canonical(n, r, acc.witness);
    rep.families = acc.qualifying;
    rep.nodes = walker.nodes();
    rep.threshold_met = true;
    rep.status = acc.violations == 0 ? Status::confirmed : Status::counterexample;
    rep.millis = detail::millis_since(t0);
    return rep;
}

/// Rainbow-matching check on seeded families. Every eligible family (each color
/// beats F^(r)_{n,k-1,1} in s-cliques for some s in [r, t]) should have a rainbow
/// matching; the boundary family where all colors equal F^(r)_{n,k-1,1} must not.
///
/// `claimed_bound` is the number of eligible families, `observed_max` the number
/// in which a rainbow matching was found. Below the size hypothesis a miss is
/// reported as bound-not-yet-active with the offending family as witness.
inline VerificationReport verify_rainbow_cell(int n, int k, int r, int t, int trials, std::uint64_t seed,
                                              const VerifyOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k < 2 || t < r || t > k + r - 2) throw std::invalid_argument("rainbow cell needs k >= 2 and r <= t <= k + r - 2");
    if (n < r * k) throw std::invalid_argument("rainbow cell needs n >= rk");

    VerificationReport rep;
    rep.kind = "rainbow";
    rep.cell = {{"n", n}, {"k", k}, {"r", r}, {"t", t}, {"trials", trials}};
    rep.threshold_met = rainbow_threshold_met(n, k, r, t);

    const Hypergraph boundary = build_extremal_family(n, k - 1, r, 1);
    const Hypergraph head_clique = Hypergraph::complete(n, r, std::min(n, r * k - 1));
    Rng rng(seed);

    std::uint64_t eligible = 0;
    std::uint64_t found = 0;
    std::uint64_t nodes = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Hypergraph> colors;
        for (int i = 0; i < k; ++i) {
            switch (rng.below(3)) {
                case 0: colors.push_back(random_hypergraph(rng, n, r, 0.3 + 0.65 * rng.unit())); break;
                case 1: colors.push_back(add_random_edges(rng, boundary, 1 + rng.below(3))); break;
                default: colors.push_back(add_random_edges(rng, head_clique, rng.below(3))); break;
            }
        }
        const ColoredFamily fam(colors);
        const auto verdicts = rainbow_hypothesis_check(fam, t);
        if (!std::all_of(verdicts.begin(), verdicts.end(), [](const ColorHypothesis& v) { return v.holds; })) continue;
        ++eligible;
        ++nodes;
        if (find_rainbow_matching(fam, opt.matching_budget)) ++found;
        else if (!rep.witness_family) rep.witness_family = colors;
    }

    const ColoredFamily boundary_family(std::vector<Hypergraph>(static_cast<std::size_t>(k), boundary));
    const bool boundary_has_rainbow = find_rainbow_matching(boundary_family, opt.matching_budget).has_value();

    rep.claimed_bound = eligible;
    rep.observed_max = found;
    rep.families = static_cast<std::uint64_t>(trials);
    rep.nodes = nodes;
    if (boundary_has_rainbow) {
        rep.status = Status::counterexample;
        rep.witness_family = std::vector<Hypergraph>(boundary_family.members().begin(), boundary_family.members().end());
        rep.error = "boundary family admits a rainbow matching";
    } else if (found == eligible) {
        rep.status = Status::confirmed;
    } else {
        rep.status = rep.threshold_met ? Status::counterexample : Status::bound_not_yet_active;
    }
    rep.millis = detail::millis_since(t0);
    return rep;
}

}  // namespace hyperext
