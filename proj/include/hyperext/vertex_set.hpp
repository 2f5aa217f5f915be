#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

namespace hyperext {

/// Largest supported vertex count. Vertex sets are single machine words.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., n-1} stored as a 64-bit mask.
///
/// Internally vertices are 0-indexed; every textual form (parse, serialize,
/// reports, `to_string`) uses 1-indexed labels. Ordering of two sets of the
/// same cardinality by their mask value is the colex order.
class VertexSet {
public:
    using Word = std::uint64_t;

    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(Word bits) noexcept : bits_(bits) {}

    static constexpr VertexSet single(int v) noexcept { return VertexSet(Word{1} << v); }

    /// {0, ..., n-1}
    static constexpr VertexSet first(int n) noexcept {
        return VertexSet(n >= kMaxVertices ? ~Word{0} : (Word{1} << n) - 1);
    }

    /// {lo, ..., hi-1}
    static constexpr VertexSet range(int lo, int hi) noexcept {
        return lo >= hi ? VertexSet{} : VertexSet(first(hi).bits_ & ~first(lo).bits_);
    }

    template <typename Range>
    static VertexSet of(const Range& vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }
    static VertexSet of(std::initializer_list<int> vertices) {
        return of<std::initializer_list<int>>(vertices);
    }

    constexpr Word bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr bool contains(VertexSet other) const noexcept { return (other.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Lowest element; undefined on the empty set.
    constexpr int min() const noexcept { return std::countr_zero(bits_); }
    /// Highest element; undefined on the empty set.
    constexpr int max() const noexcept { return kMaxVertices - 1 - std::countl_zero(bits_); }

    constexpr VertexSet with(int v) const noexcept { return VertexSet(bits_ | (Word{1} << v)); }
    constexpr VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~(Word{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const noexcept { return VertexSet(bits_ ^ o.bits_); }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
    /// Colex order for equal-cardinality sets.
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) noexcept { return a.bits_ <=> b.bits_; }

    /// Calls `f(v)` for each element in increasing order.
    template <typename F>
    constexpr void for_each(F&& f) const {
        for (Word w = bits_; w != 0; w &= w - 1) f(std::countr_zero(w));
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// "{1,2,5}" with 1-indexed labels.
    std::string to_string() const {
        std::string out = "{";
        bool first_element = true;
        for_each([&](int v) {
            if (!first_element) out += ',';
            out += std::to_string(v + 1);
            first_element = false;
        });
        return out + "}";
    }

private:
    Word bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept {
        // splitmix64 finalizer
        std::uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

/// Next mask with the same popcount in increasing numeric (colex) order.
/// Returns 0 once the sequence runs past `limit`.
constexpr VertexSet::Word next_same_size(VertexSet::Word w, VertexSet::Word limit) noexcept {
    const VertexSet::Word low = w & (~w + 1);
    const VertexSet::Word ripple = w + low;
    if (ripple == 0) return 0;  // carried out of the word
    const VertexSet::Word next = ripple | (((w ^ ripple) >> 2) / low);
    return next > limit ? 0 : next;
}

/// Visits every `size`-subset of `ground` in colex order. The callback may
/// return `false` to stop early; the function then returns `false` as well.
template <typename F>
bool for_each_subset(VertexSet ground, int size, F&& f) {
    const int m = ground.size();
    if (size < 0 || size > m) return true;
    if (size == 0) {
        if constexpr (std::is_same_v<std::invoke_result_t<F, VertexSet>, bool>) return f(VertexSet{});
        else {
            f(VertexSet{});
            return true;
        }
    }
    // Enumerate index masks over the m elements of `ground`, then scatter.
    const std::vector<int> elems = ground.elements();
    const VertexSet::Word limit = VertexSet::first(m).bits();
    for (VertexSet::Word idx = VertexSet::first(size).bits(); idx != 0; idx = next_same_size(idx, limit)) {
        VertexSet::Word out = 0;
        for (VertexSet::Word w = idx; w != 0; w &= w - 1) out |= VertexSet::Word{1} << elems[std::countr_zero(w)];
        if constexpr (std::is_same_v<std::invoke_result_t<F, VertexSet>, bool>) {
            if (!f(VertexSet(out))) return false;
        } else {
            f(VertexSet(out));
        }
    }
    return true;
}

/// All `size`-subsets of {0, ..., n-1}, colex order.
inline std::vector<VertexSet> all_subsets(int n, int size) {
    std::vector<VertexSet> out;
    for_each_subset(VertexSet::first(n), size, [&](VertexSet s) { out.push_back(s); });
    return out;
}

}  // namespace hyperext
