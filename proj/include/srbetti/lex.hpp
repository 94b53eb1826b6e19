#pragma once

#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "srbetti/complex.hpp"
#include "srbetti/fvector.hpp"
#include "srbetti/hilbert.hpp"

namespace srbetti {

// Lex order on squarefree monomials of one degree, as subsets: S > T when
// the smallest vertex where they differ lies in S. Reversing labels
// (v -> n+1-v) turns this into colex on subsets, which is what the
// enumeration below walks.

namespace detail {

inline VertexSet reversed_mask(const std::vector<int>& comb_0based, int n) {
    VertexSet s = 0;
    for (int e : comb_0based) s |= singleton(n - e);
    return s;
}

// First `count` d-subsets of {1..n} in ascending lex-smallness (the faces
// a compressed complex uses). Walks colex on reversed labels.
inline std::vector<VertexSet> lex_smallest_subsets(int n, int d, long long count) {
    std::vector<VertexSet> out;
    if (count <= 0 || d < 0 || d > n) return out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> comb(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (long long r = 0; r < count; ++r) {
        out.push_back(reversed_mask(comb, n));
        if (r + 1 < count) {
            // next combination in colex
            int j = d;
            bool advanced = false;
            for (int idx = 0; idx < j && !advanced; ++idx) {
                int limit = (idx + 1 < j) ? comb[static_cast<std::size_t>(idx) + 1] : n;
                if (comb[static_cast<std::size_t>(idx)] + 1 < limit) {
                    ++comb[static_cast<std::size_t>(idx)];
                    for (int t = 0; t < idx; ++t) comb[static_cast<std::size_t>(t)] = t;
                    advanced = true;
                }
            }
            if (!advanced) throw InvalidParameter("requested more subsets than C(n,d)");
        }
    }
    return out;
}

} // namespace detail

// The k lex-largest squarefree monomials of degree d (a lex prefix).
inline std::vector<VertexSet> lex_largest_subsets(int n, int d, long long k) {
    long long total = binomial(n, d);
    if (k < 0 || k > total) throw InvalidParameter("prefix length outside 0..C(n,d)");
    std::vector<VertexSet> all = detail::lex_smallest_subsets(n, d, total);
    return {all.rbegin(), all.rbegin() + static_cast<std::ptrdiff_t>(k)};
}

// Ideal generated by the k lex-largest degree-d squarefree monomials.
inline SquarefreeIdeal lex_prefix_ideal(int n, int d, long long k) {
    return make_ideal(n, lex_largest_subsets(n, d, k));
}

// Compressed complex: in each cardinality d the faces are the f_{d-1}
// lex-smallest squarefree monomials. The family is downward closed exactly
// when f is the f-vector of some complex (Kruskal–Katona), so the closure
// check doubles as the realizability test.
inline SimplicialComplex squarefree_lex_complex(const FVector& f) {
    f.require_well_formed();
    if (f.total_faces() > 10'000'000)
        throw ComplexTooLarge("compressed complex would have " + std::to_string(f.total_faces()) + " faces");
    int n = f.n();
    std::vector<std::vector<VertexSet>> buckets;
    buckets.push_back({0});
    std::unordered_set<VertexSet> prev; // previous level for the closure check
    prev.insert(0);
    for (int d = 1; d <= n; ++d) {
        std::vector<VertexSet> level = detail::lex_smallest_subsets(n, d, f.at(d - 1));
        for (VertexSet s : level) {
            VertexSet rest = s;
            while (rest) {
                VertexSet low = rest & (rest - 1);
                if (!prev.count(s ^ (rest ^ low)))
                    throw NotAnFVector("not realizable: " + f.to_string() +
                                       " fails closure at cardinality " + std::to_string(d));
                rest = low;
            }
        }
        prev.clear();
        prev.insert(level.begin(), level.end());
        buckets.push_back(std::move(level));
    }
    return detail::from_buckets(n, std::move(buckets));
}

inline bool is_kk_valid(const FVector& f) {
    if (!f.well_formed()) return false;
    try {
        squarefree_lex_complex(f);
        return true;
    } catch (const NotAnFVector&) {
        return false;
    }
}

// The squarefree lex ideal attaining f. Requires f_0 = n, otherwise the
// ideal would carry linear generators.
inline SquarefreeIdeal squarefree_lex_ideal(const FVector& f) {
    return minimal_nonfaces(squarefree_lex_complex(f));
}

// Degree d when every minimal generator of the lex ideal for f lives in
// the single degree d; absent otherwise (also absent for the zero ideal,
// which has no generation degree at all). Linear generators (f_0 < n)
// participate with degree 1.
inline std::optional<int> lex_generated_in_single_degree(const FVector& f) {
    SimplicialComplex lex = squarefree_lex_complex(f);
    std::vector<VertexSet> gens = detail::minimal_nonfaces_any(lex);
    if (gens.empty()) return std::nullopt;
    std::set<int> degrees;
    for (VertexSet g : gens) degrees.insert(cardinality(g));
    if (degrees.size() == 1) return *degrees.begin();
    return std::nullopt;
}

// All realizable f-vectors on n vertices with every singleton present
// (f_0 = n), in lexicographic order of entries. Prunes on the fact that a
// zero-padded prefix of a realizable f-vector is itself realizable.
inline std::vector<FVector> enumerate_realizable_fvectors(int n) {
    if (n < 0 || n > 8) throw InvalidParameter("f-vector enumeration capped at n = 8");
    std::vector<FVector> out;
    if (n == 0) return out;
    std::vector<long long> cur(static_cast<std::size_t>(n), 0);
    cur[0] = n;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        self(self, n); // f_i = 0 forces all later entries to 0
        for (long long v = 1; v <= binomial(n, i + 1); ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            if (is_kk_valid(FVector(cur))) self(self, i + 1);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 1);
    return out;
}

} // namespace srbetti
