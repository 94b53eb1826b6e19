#pragma once

#include <optional>
#include <vector>

#include "srbetti/betti.hpp"
#include "srbetti/complex.hpp"
#include "srbetti/hilbert.hpp"
#include "srbetti/homology.hpp"
#include "srbetti/parallel.hpp"

namespace srbetti {

struct HochsterOptions {
    std::optional<int> degree_cap; // compute β_{i,j} for j <= cap only
    int threads = 0;               // 0 = hardware concurrency
    int full_cap = 20;             // refuse 2^n enumeration beyond this without a degree cap
};

namespace detail {

// r-th j-subset of {0,...,n-1} in colex order.
inline std::vector<int> unrank_colex(long long r, int j) {
    std::vector<int> comb(static_cast<std::size_t>(j));
    for (int t = j; t >= 1; --t) {
        int c = t - 1;
        while (binomial(c + 1, t) <= r) ++c;
        comb[static_cast<std::size_t>(t - 1)] = c;
        r -= binomial(c, t);
    }
    return comb;
}

inline bool next_colex(std::vector<int>& comb, int n) {
    int j = static_cast<int>(comb.size());
    for (int idx = 0; idx < j; ++idx) {
        int limit = (idx + 1 < j) ? comb[static_cast<std::size_t>(idx) + 1] : n;
        if (comb[static_cast<std::size_t>(idx)] + 1 < limit) {
            ++comb[static_cast<std::size_t>(idx)];
            for (int t = 0; t < idx; ++t) comb[static_cast<std::size_t>(t)] = t;
            return true;
        }
    }
    return false;
}

inline VertexSet mask_of_comb(const std::vector<int>& comb) {
    VertexSet w = 0;
    for (int e : comb) w |= singleton(e + 1);
    return w;
}

} // namespace detail

// Hochster's formula: β_{i,j} = Σ_{|W| = j} dim H~_{j-i-1}(Δ_W; K).
// Subsets of each size are split across workers; per-worker sparse maps
// merge by integer addition, so the result is schedule-independent.
inline BettiDiagram betti_via_hochster(const SimplicialComplex& c, std::uint32_t characteristic,
                                       const HochsterOptions& opts = {}) {
    PrimeField field(characteristic);
    if (c.is_void()) throw VoidComplexError("Betti numbers of the void complex");
    if (!c.has_all_singletons())
        throw LinearGeneratorUnsupported("Hochster computation requires all singleton faces");
    if (!opts.degree_cap && c.n > opts.full_cap)
        throw ComplexTooLarge("n = " + std::to_string(c.n) + " exceeds the cap " +
                              std::to_string(opts.full_cap) + "; pass a degree cap");
    int max_size = opts.degree_cap ? std::min(*opts.degree_cap, c.n) : c.n;
    if (max_size < 0) throw InvalidParameter("degree cap must be nonnegative");

    int threads = resolve_threads(opts.threads);
    BettiDiagram out;
    out.n = c.n;
    out.p = characteristic;

    for (int j = 0; j <= max_size; ++j) {
        long long count = binomial(c.n, j);
        std::vector<BettiDiagram> partial(static_cast<std::size_t>(std::max(1, threads)));
        parallel_chunks(count, threads, [&](int worker, long long lo, long long hi) {
            if (lo >= hi) return;
            BettiDiagram& acc = partial[static_cast<std::size_t>(worker)];
            std::vector<int> comb = detail::unrank_colex(lo, j);
            for (long long r = lo; r < hi; ++r) {
                VertexSet w = detail::mask_of_comb(comb);
                ReducedHomologyProfile h = reduced_homology(restrict_complex(c, w), field);
                for (const auto& [l, d] : h.dims)
                    if (d != 0) acc.add(j - l - 1, j, d);
                if (r + 1 < hi) detail::next_colex(comb, c.n);
            }
        });
        for (const auto& part : partial)
            for (const auto& [ij, v] : part.entries) out.add(ij.first, ij.second, v);
    }
    return out;
}

// Exact check of the Hilbert-series identity: the Betti numerator
// Σ_j d_j t^j must equal (1-t)^n · Σ_d H(d) t^d, with H derived from f.
// Both sides are polynomials of degree <= n, so degrees 0..n decide.
inline bool hilbert_series_check(const BettiDiagram& b, const FVector& f) {
    if (b.n != f.n())
        throw AmbientMismatch("diagram on " + std::to_string(b.n) + " variables vs f-vector on " +
                              std::to_string(f.n()));
    HilbertFunction h = hilbert_from_fvector(f);
    std::vector<long long> d = diagonal_sums(b);
    for (int m = 0; m <= b.n; ++m) {
        __int128 conv = 0;
        for (int k = 0; k <= m; ++k) {
            __int128 term = static_cast<__int128>(binomial(b.n, k)) * h.value(m - k);
            conv += (k % 2 == 0) ? term : -term;
        }
        if (conv != static_cast<__int128>(d[static_cast<std::size_t>(m)])) return false;
    }
    return true;
}

} // namespace srbetti
