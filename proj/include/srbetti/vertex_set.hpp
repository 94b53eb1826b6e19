#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "srbetti/errors.hpp"

namespace srbetti {

// A subset of the vertex set {1,...,n}, n <= 63, as a bitmask.
// Vertex i occupies bit i; bit 0 stays clear.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline VertexSet full_set(int n) {
    return n == 0 ? 0 : ((VertexSet(1) << (n + 1)) - 2);
}

inline VertexSet singleton(int v) { return VertexSet(1) << v; }

// Validates 1 <= v <= n for every vertex.
inline VertexSet make_vertex_set(const std::vector<int>& vertices, int n) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidParameter("vertex count must be between 0 and 63, got " + std::to_string(n));
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 1 || v > n)
            throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        s |= singleton(v);
    }
    return s;
}

inline std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality(s)));
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

// Exact binomial coefficient; C(63,31) still fits in int64. The running
// product is C(n-k+i, i) at step i, so the division is always exact; a
// 128-bit intermediate keeps the multiply from overflowing near n = 63.
inline long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<long long>(r);
}

} // namespace srbetti
