#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wellcov {

/// Set of vertices 0..63 backed by a single 64-bit word.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    /// Full set {0..n-1}.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1ULL; }
    constexpr void add(int v) { bits |= 1ULL << v; }
    constexpr void remove(int v) { bits &= ~(1ULL << v); }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    /// Lowest-index member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits ^ b.bits); }
    VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
    VertexSet& operator-=(VertexSet o) { bits &= ~o.bits; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }
};

}  // namespace wellcov
