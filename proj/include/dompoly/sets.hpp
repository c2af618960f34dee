#ifndef DOMPOLY_SETS_HPP
#define DOMPOLY_SETS_HPP

#include <bit>
#include <cstdint>

namespace dompoly {

/// Set of small nonnegative indices packed into one 64-bit word. Tagged so
/// that vertex sets and edge sets cannot be mixed up silently.
template <class Tag>
struct IndexSet {
    std::uint64_t bits = 0;

    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t raw) : bits(raw) {}

    static constexpr IndexSet single(int i) { return IndexSet{std::uint64_t{1} << i}; }

    /// {0, 1, ..., count-1}
    static constexpr IndexSet first(int count) {
        return IndexSet{count >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << count) - 1};
    }

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }

    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr bool subset_of(IndexSet other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(IndexSet other) const { return (bits & other.bits) != 0; }

    constexpr IndexSet with(int i) const { return IndexSet{bits | (std::uint64_t{1} << i)}; }
    constexpr IndexSet without(int i) const { return IndexSet{bits & ~(std::uint64_t{1} << i)}; }
    constexpr IndexSet minus(IndexSet other) const { return IndexSet{bits & ~other.bits}; }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet{a.bits | b.bits}; }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet{a.bits & b.bits}; }
    friend constexpr IndexSet operator^(IndexSet a, IndexSet b) { return IndexSet{a.bits ^ b.bits}; }
    constexpr IndexSet& operator|=(IndexSet o) { bits |= o.bits; return *this; }
    constexpr IndexSet& operator&=(IndexSet o) { bits &= o.bits; return *this; }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;

    /// Iterates member indices in increasing order.
    struct iterator {
        std::uint64_t rest;
        constexpr int operator*() const { return std::countr_zero(rest); }
        constexpr iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        friend constexpr bool operator==(iterator, iterator) = default;
    };
    constexpr iterator begin() const { return {bits}; }
    constexpr iterator end() const { return {0}; }
};

using VertexSet = IndexSet<struct VertexSetTag>;
using EdgeSet = IndexSet<struct EdgeSetTag>;

} // namespace dompoly

#endif // DOMPOLY_SETS_HPP
