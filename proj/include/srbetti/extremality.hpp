#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "srbetti/betti.hpp"
#include "srbetti/complex.hpp"
#include "srbetti/hochster.hpp"
#include "srbetti/lex.hpp"

namespace srbetti {

// Diagonal witness for non-unique minima: the least degree j whose
// alternating sum is nonzero while min over the diagrams of β_{i,j} is 0
// for every i. When such a j exists no diagram below all inputs can attain
// the Hilbert function, and at least two inputs must be incomparable.
inline std::optional<int> check_diag_witness(const std::vector<BettiDiagram>& diagrams) {
    if (diagrams.empty()) return std::nullopt;
    int n = diagrams.front().n;
    for (const auto& d : diagrams)
        if (d.n != n) throw AmbientMismatch("diagrams live in different variable counts");
    std::vector<long long> d0 = diagonal_sums(diagrams.front());
    for (const auto& d : diagrams)
        if (diagonal_sums(d) != d0)
            throw NotSameHilbertFunction("diagonal alternating sums differ between diagrams");

    for (int j = 0; j <= n; ++j) {
        if (d0[static_cast<std::size_t>(j)] == 0) continue;
        bool all_min_zero = true;
        for (int i = 0; i <= j && all_min_zero; ++i) {
            long long mn = diagrams.front().at(i, j);
            for (const auto& d : diagrams) mn = std::min(mn, d.at(i, j));
            if (mn != 0) all_min_zero = false;
        }
        if (all_min_zero) {
            bool incomparable_pair = false;
            for (std::size_t a = 0; a < diagrams.size() && !incomparable_pair; ++a)
                for (std::size_t b = a + 1; b < diagrams.size() && !incomparable_pair; ++b)
                    if (compare(diagrams[a], diagrams[b]) == DiagramOrder::Incomparable)
                        incomparable_pair = true;
            if (!incomparable_pair)
                throw std::logic_error("diagonal witness without an incomparable pair");
            return j;
        }
    }
    return std::nullopt;
}

// Σ_i β_{i,j} = |d_j| for every j: each diagonal carries entries of one
// sign only. A diagram with this property has the smallest possible total
// Betti number among all ideals with its Hilbert function.
inline bool check_sum_equals_abs_diag(const BettiDiagram& b) {
    std::vector<long long> d = diagonal_sums(b);
    std::vector<long long> col(static_cast<std::size_t>(b.n) + 1, 0);
    for (const auto& [ij, v] : b.entries)
        if (ij.second >= 0 && ij.second <= b.n) col[static_cast<std::size_t>(ij.second)] += v;
    for (int j = 0; j <= b.n; ++j)
        if (col[static_cast<std::size_t>(j)] != std::llabs(d[static_cast<std::size_t>(j)])) return false;
    return true;
}

namespace detail {

inline long long s_at(const std::vector<long long>& s, std::size_t i) {
    return i < s.size() ? s[i] : 0;
}

} // namespace detail

// Total-Betti incomparability clause: with `a` in the role of the ideal I,
// s_0 equal, s_1^a > s_1^b, some k with s_k^a < s_k^b and s_{k+i}^a <=
// s_{k+i}^b for all i > 0, and the support of `a` avoids even j - i for
// j > 0. Swap the arguments for the mirrored variant.
inline bool check_betti_family(const BettiDiagram& a, const BettiDiagram& b) {
    if (a.n != b.n) throw AmbientMismatch("diagrams live in different variable counts");
    if (diagonal_sums(a) != diagonal_sums(b))
        throw NotSameHilbertFunction("diagonal alternating sums differ");
    std::vector<long long> sa = total_betti(a), sb = total_betti(b);
    if (detail::s_at(sa, 0) != detail::s_at(sb, 0)) return false;
    if (detail::s_at(sa, 1) <= detail::s_at(sb, 1)) return false;
    std::size_t len = std::max(sa.size(), sb.size());
    bool found_k = false;
    for (std::size_t k = 2; k < len && !found_k; ++k) {
        if (detail::s_at(sa, k) >= detail::s_at(sb, k)) continue;
        bool tail_ok = true;
        for (std::size_t i = k + 1; i < len && tail_ok; ++i)
            if (detail::s_at(sa, i) > detail::s_at(sb, i)) tail_ok = false;
        found_k = tail_ok;
    }
    if (!found_k) return false;
    for (const auto& [ij, v] : a.entries)
        if (ij.second > 0 && (ij.second - ij.first) % 2 == 0) return false;
    return true;
}

// The k used by check_betti_family, for reporting.
inline std::optional<int> betti_family_k(const BettiDiagram& a, const BettiDiagram& b) {
    std::vector<long long> sa = total_betti(a), sb = total_betti(b);
    std::size_t len = std::max(sa.size(), sb.size());
    for (std::size_t k = 2; k < len; ++k) {
        if (detail::s_at(sa, k) >= detail::s_at(sb, k)) continue;
        bool tail_ok = true;
        for (std::size_t i = k + 1; i < len && tail_ok; ++i)
            if (detail::s_at(sa, i) > detail::s_at(sb, i)) tail_ok = false;
        if (tail_ok) return static_cast<int>(k);
    }
    return std::nullopt;
}

// Unique-minimum test through the two-row lex criterion: the squarefree lex
// diagram for f must be supported on rows 1 and 2 only (besides β_{0,0}),
// and the candidate must attain f and satisfy the single-sign-diagonal
// property. When all three hold the candidate is the unique minimum among
// squarefree monomial ideals with this f-vector.
inline bool check_tworow_unique_min(const FVector& f, const BettiDiagram& candidate,
                                    std::uint32_t characteristic) {
    if (!is_kk_valid(f)) throw NotAnFVector("f-vector " + f.to_string() + " is not realizable");
    SimplicialComplex lex = squarefree_lex_complex(f);
    BettiDiagram lex_b = betti_via_hochster(lex, characteristic);
    for (const auto& [ij, v] : lex_b.entries) {
        auto [i, j] = ij;
        bool ok = (i == 0 && j == 0) || (j - i == 1) || (j - i == 2);
        if (!ok) return false;
    }
    if (!hilbert_series_check(candidate, f)) return false;
    return check_sum_equals_abs_diag(candidate);
}

// Path with isolated points: edges {1,2},...,{k,k+1} plus all singletons.
inline SimplicialComplex path_complex(int n, int k) {
    if (n < 1 || n > kMaxVertices) throw InvalidParameter("need 1 <= n <= 63");
    if (k < 1 || k > n - 1) throw InvalidParameter("path needs 1 <= k <= n-1");
    std::vector<VertexSet> facets;
    for (int i = 1; i <= k; ++i) facets.push_back(singleton(i) | singleton(i + 1));
    return from_facets(n, facets);
}

// The n-cycle: edges {1,2},...,{n-1,n},{n,1}.
inline SimplicialComplex cycle_complex(int n) {
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    if (n > kMaxVertices) throw InvalidParameter("need n <= 63");
    std::vector<VertexSet> facets;
    for (int i = 1; i < n; ++i) facets.push_back(singleton(i) | singleton(i + 1));
    facets.push_back(singleton(n) | singleton(1));
    return from_facets(n, facets);
}

} // namespace srbetti
