#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "srbetti/betti.hpp"
#include "srbetti/complex.hpp"
#include "srbetti/hochster.hpp"
#include "srbetti/parallel.hpp"

namespace srbetti {

struct EnumerateOptions {
    bool mod_iso = false;
    long long max_complexes = -1; // < 0: unlimited
    int n_cap_full = 7;           // labeled enumeration cap
    int n_cap_iso = 8;            // cap with isomorphism reduction
};

// Canonical form: the lexicographically smallest face encoding over all
// vertex relabelings. Exact and cheap at the enumeration caps.
inline std::vector<VertexSet> canonical_key(const SimplicialComplex& c) {
    std::vector<int> perm(static_cast<std::size_t>(c.n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<VertexSet> best;
    bool have_best = false;
    do {
        std::vector<VertexSet> key;
        key.reserve(static_cast<std::size_t>(c.total_faces()));
        for (const auto& bucket : c.faces) {
            std::vector<VertexSet> mapped;
            mapped.reserve(bucket.size());
            for (VertexSet s : bucket) {
                VertexSet t = 0;
                for (int v : vertices_of(s)) t |= singleton(perm[static_cast<std::size_t>(v - 1)]);
                mapped.push_back(t);
            }
            std::sort(mapped.begin(), mapped.end());
            key.insert(key.end(), mapped.begin(), mapped.end());
        }
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Streams every complex on n vertices (all singletons present) with the
// given f-vector, one representative per isomorphism class when mod_iso.
// Dimension-by-dimension backtracking: level d candidates are the masks
// whose maximal subsets were all chosen at level d-1. Returns the number
// of complexes emitted; the callback may stop the stream by returning
// false. Unrealizable f gives an empty stream.
inline long long enumerate_complexes(int n, const FVector& f, const EnumerateOptions& opts,
                                     const std::function<bool(const SimplicialComplex&)>& emit) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    if (opts.mod_iso ? n > opts.n_cap_iso : n > opts.n_cap_full)
        throw InvalidParameter("enumeration capped at n = " +
                               std::to_string(opts.mod_iso ? opts.n_cap_iso : opts.n_cap_full) +
                               (opts.mod_iso ? " with" : " without") + " isomorphism reduction");
    if (f.n() != n || !f.well_formed()) return 0;
    if (f.at(0) != n) return 0; // complexes here carry every singleton

    std::vector<std::vector<VertexSet>> chosen(static_cast<std::size_t>(n) + 1);
    chosen[0] = {0};
    chosen[1].reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) chosen[1].push_back(singleton(v));

    long long emitted = 0;
    bool stopped = false;
    std::set<std::vector<VertexSet>> seen_keys;

    // candidates for level d: all d-sets whose (d-1)-subsets are all chosen
    auto level_candidates = [&](int d) {
        std::vector<VertexSet> cand;
        const auto& below = chosen[static_cast<std::size_t>(d) - 1];
        std::set<VertexSet> below_set(below.begin(), below.end());
        for (VertexSet s : below) {
            int top = s == 0 ? 0 : 63 - std::countl_zero(s);
            for (int v = top + 1; v <= n; ++v) {
                VertexSet ext = s | singleton(v);
                bool ok = true;
                VertexSet rest = ext;
                while (rest && ok) {
                    VertexSet low = rest & (rest - 1);
                    if (!below_set.count(ext ^ (rest ^ low))) ok = false;
                    rest = low;
                }
                if (ok) cand.push_back(ext);
            }
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        return cand;
    };

    std::function<void(int)> descend = [&](int d) {
        if (stopped) return;
        if (d > n || f.at(d - 1) == 0) {
            // remaining levels must be empty; any later nonzero entry is unreachable
            for (int m = d - 1; m < n; ++m)
                if (f.at(m) != 0) return;
            auto levels = std::min<std::size_t>(static_cast<std::size_t>(d), chosen.size());
            std::vector<std::vector<VertexSet>> buckets(chosen.begin(),
                                                        chosen.begin() + static_cast<std::ptrdiff_t>(levels));
            SimplicialComplex c = detail::from_buckets(n, std::move(buckets));
            if (opts.mod_iso && !seen_keys.insert(canonical_key(c)).second) return;
            ++emitted;
            if (!emit(c)) stopped = true;
            if (opts.max_complexes >= 0 && emitted >= opts.max_complexes) stopped = true;
            return;
        }
        std::vector<VertexSet> cand = level_candidates(d);
        long long need = f.at(d - 1);
        if (static_cast<long long>(cand.size()) < need) return;

        std::vector<VertexSet> pick;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
            if (stopped) return;
            if (static_cast<long long>(pick.size()) == need) {
                chosen[static_cast<std::size_t>(d)] = pick;
                descend(d + 1);
                return;
            }
            long long still = need - static_cast<long long>(pick.size());
            for (std::size_t i = from;
                 i + static_cast<std::size_t>(still) <= cand.size() && !stopped; ++i) {
                pick.push_back(cand[i]);
                choose(i + 1);
                pick.pop_back();
            }
        };
        choose(0);
        chosen[static_cast<std::size_t>(d)].clear();
    };

    descend(2);
    return emitted;
}

// The set of distinct Betti diagrams over one f-vector, with one witness
// complex per diagram and the cached pairwise order.
struct BettiPoset {
    FVector f;
    std::uint32_t p = 0;
    std::vector<BettiDiagram> diagrams;
    std::vector<SimplicialComplex> witnesses;
    std::vector<std::vector<DiagramOrder>> relation;
    long long complexes_seen = 0;
    bool truncated = false;

    std::vector<std::size_t> minimal_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t a = 0; a < diagrams.size(); ++a) {
            bool minimal = true;
            for (std::size_t b = 0; b < diagrams.size() && minimal; ++b)
                if (b != a && relation[b][a] == DiagramOrder::Less) minimal = false;
            if (minimal) out.push_back(a);
        }
        return out;
    }

    bool totally_ordered() const {
        for (std::size_t a = 0; a < diagrams.size(); ++a)
            for (std::size_t b = a + 1; b < diagrams.size(); ++b)
                if (relation[a][b] == DiagramOrder::Incomparable) return false;
        return true;
    }
};

inline std::vector<BettiDiagram> minimal_elements(const BettiPoset& poset) {
    std::vector<BettiDiagram> out;
    for (std::size_t i : poset.minimal_indices()) out.push_back(poset.diagrams[i]);
    return out;
}

inline bool has_unique_min(const BettiPoset& poset) { return poset.minimal_indices().size() == 1; }

struct PosetOptions {
    EnumerateOptions enumerate;
    int threads = 0;
};

// Enumerates all complexes attaining f, deduplicates their Betti diagrams,
// and caches the pairwise order. Diagrams are computed over batches in
// parallel and merged in stream order, so the result is deterministic.
// Every diagram is checked against the Hilbert-series identity as a
// whole-pipeline self-test.
inline BettiPoset build_poset(int n, const FVector& f, std::uint32_t characteristic,
                              const PosetOptions& opts = {}) {
    BettiPoset poset;
    poset.f = f;
    poset.p = characteristic;

    int threads = resolve_threads(opts.threads);
    const std::size_t batch_size = 256;
    std::vector<SimplicialComplex> batch;
    std::map<std::map<std::pair<int, int>, long long>, std::size_t> index_of;

    auto flush = [&]() {
        if (batch.empty()) return;
        std::vector<BettiDiagram> computed(batch.size());
        HochsterOptions hopts;
        hopts.threads = 1;
        parallel_chunks(static_cast<long long>(batch.size()), threads,
                        [&](int, long long lo, long long hi) {
                            for (long long i = lo; i < hi; ++i)
                                computed[static_cast<std::size_t>(i)] = betti_via_hochster(
                                    batch[static_cast<std::size_t>(i)], characteristic, hopts);
                        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            auto [it, inserted] = index_of.try_emplace(computed[i].entries, poset.diagrams.size());
            if (inserted) {
                poset.diagrams.push_back(computed[i]);
                poset.witnesses.push_back(batch[i]);
            }
        }
        batch.clear();
    };

    poset.complexes_seen = enumerate_complexes(n, f, opts.enumerate, [&](const SimplicialComplex& c) {
        batch.push_back(c);
        if (batch.size() >= batch_size) flush();
        return true;
    });
    flush();
    poset.truncated = opts.enumerate.max_complexes >= 0 &&
                      poset.complexes_seen >= opts.enumerate.max_complexes;

    for (const auto& d : poset.diagrams)
        if (!hilbert_series_check(d, f))
            throw std::logic_error("pipeline self-test failed: diagram contradicts the Hilbert series");

    poset.relation.assign(poset.diagrams.size(),
                          std::vector<DiagramOrder>(poset.diagrams.size(), DiagramOrder::Equal));
    for (std::size_t a = 0; a < poset.diagrams.size(); ++a)
        for (std::size_t b = 0; b < poset.diagrams.size(); ++b)
            poset.relation[a][b] = compare(poset.diagrams[a], poset.diagrams[b]);
    return poset;
}

// Injects an externally supplied diagram (e.g. a known ideal's) into a
// poset, extending witnesses with the given complex.
inline void inject_diagram(BettiPoset& poset, const BettiDiagram& d, const SimplicialComplex& witness) {
    if (!hilbert_series_check(d, poset.f))
        throw NotSameHilbertFunction("injected diagram does not attain the poset's f-vector");
    for (const auto& existing : poset.diagrams)
        if (existing.same_entries(d)) return;
    poset.diagrams.push_back(d);
    poset.witnesses.push_back(witness);
    std::size_t m = poset.diagrams.size();
    poset.relation.assign(m, std::vector<DiagramOrder>(m, DiagramOrder::Equal));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            poset.relation[a][b] = compare(poset.diagrams[a], poset.diagrams[b]);
}

} // namespace srbetti
