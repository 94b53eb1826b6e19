#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "srbetti/errors.hpp"
#include "srbetti/fvector.hpp"
#include "srbetti/vertex_set.hpp"

namespace srbetti {

// A simplicial complex on the vertex set {1,...,n}. Faces are stored
// exhaustively, bucketed by cardinality and sorted by mask value; bucket k
// holds the faces of cardinality k, so homology and Hochster restrictions
// can iterate them directly. A nonvoid complex always stores the empty
// face in bucket 0. The void complex (no faces at all) is representable
// but rejected by every ideal-facing operation.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::vector<VertexSet>> faces; // faces[k]: sorted masks of cardinality k

    bool is_void() const { return faces.empty(); }

    // Dimension of the complex; -1 for {∅}, meaningless (-2) for void.
    int dim() const { return static_cast<int>(faces.size()) - 2; }

    long long face_count(int card) const {
        if (card < 0 || card >= static_cast<int>(faces.size())) return 0;
        return static_cast<long long>(faces[static_cast<std::size_t>(card)].size());
    }

    long long total_faces() const {
        long long t = 0;
        for (const auto& bucket : faces) t += static_cast<long long>(bucket.size());
        return t;
    }

    bool has_face(VertexSet s) const {
        int c = cardinality(s);
        if (c >= static_cast<int>(faces.size())) return false;
        const auto& bucket = faces[static_cast<std::size_t>(c)];
        return std::binary_search(bucket.begin(), bucket.end(), s);
    }

    bool has_all_singletons() const {
        if (faces.size() < 2) return n == 0 && !is_void();
        return static_cast<int>(faces[1].size()) == n;
    }

    // Exhaustive downward-closure check (every face minus one vertex is a face).
    bool is_downward_closed() const {
        if (is_void()) return true;
        if (faces[0].empty()) return false; // nonvoid must contain ∅
        for (std::size_t k = 1; k < faces.size(); ++k)
            for (VertexSet s : faces[k]) {
                VertexSet rest = s;
                while (rest) {
                    VertexSet low = rest & (rest - 1);
                    VertexSet v = rest ^ low; // lowest set bit
                    if (!has_face(s ^ v)) return false;
                    rest = low;
                }
            }
        return true;
    }

    bool operator==(const SimplicialComplex& o) const { return n == o.n && faces == o.faces; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }
};

// A squarefree monomial ideal without linear terms: minimal generators as
// vertex sets of cardinality >= 2, pairwise inclusion-minimal.
struct SquarefreeIdeal {
    int n = 0;
    std::vector<VertexSet> gens; // sorted by mask value

    bool is_zero() const { return gens.empty(); }

    bool operator==(const SquarefreeIdeal& o) const { return n == o.n && gens == o.gens; }
    bool operator!=(const SquarefreeIdeal& o) const { return !(*this == o); }
};

// Validates the type invariants: vertices in range, cardinality >= 2,
// no generator divides another.
inline SquarefreeIdeal make_ideal(int n, std::vector<VertexSet> gens) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidParameter("variable count must be between 0 and 63");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (VertexSet g : gens) {
        if (!is_subset(g, full_set(n)))
            throw InvalidVertex("generator " + to_string(g) + " outside 1.." + std::to_string(n));
        if (cardinality(g) == 0)
            throw InvalidParameter("empty generator (unit ideal) not supported");
        if (cardinality(g) == 1)
            throw LinearGeneratorUnsupported("generator " + to_string(g) + " is linear");
    }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b)
            if (a != b && is_subset(gens[a], gens[b]))
                throw InvalidParameter("generator " + to_string(gens[a]) + " divides " +
                                       to_string(gens[b]) + "; generators must be inclusion-minimal");
    return SquarefreeIdeal{n, std::move(gens)};
}

namespace detail {

inline SimplicialComplex from_buckets(int n, std::vector<std::vector<VertexSet>> buckets) {
    while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
    for (auto& b : buckets) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    return SimplicialComplex{n, std::move(buckets)};
}

} // namespace detail

// Smallest downward-closed family containing the given facets, every
// singleton {1},...,{n}, and the empty face.
inline SimplicialComplex from_facets(int n, const std::vector<VertexSet>& facets) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidParameter("vertex count must be between 0 and 63");
    for (VertexSet f : facets)
        if (!is_subset(f, full_set(n)))
            throw InvalidVertex("facet " + to_string(f) + " references vertex > " + std::to_string(n));

    int maxc = 1;
    for (VertexSet f : facets) maxc = std::max(maxc, cardinality(f));
    std::vector<std::unordered_set<VertexSet>> levels(static_cast<std::size_t>(maxc) + 1);
    levels[0].insert(0);
    for (int v = 1; v <= n; ++v) levels[1].insert(singleton(v));
    for (VertexSet f : facets) levels[static_cast<std::size_t>(cardinality(f))].insert(f);

    for (int k = maxc; k >= 2; --k)
        for (VertexSet s : levels[static_cast<std::size_t>(k)]) {
            VertexSet rest = s;
            while (rest) {
                VertexSet low = rest & (rest - 1);
                levels[static_cast<std::size_t>(k - 1)].insert(s ^ (rest ^ low));
                rest = low;
            }
        }

    std::vector<std::vector<VertexSet>> buckets(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k)
        buckets[k].assign(levels[k].begin(), levels[k].end());
    return detail::from_buckets(n, std::move(buckets));
}

inline FVector f_vector(const SimplicialComplex& c) {
    std::vector<long long> e(static_cast<std::size_t>(c.n), 0);
    for (int i = 0; i < c.n; ++i) e[static_cast<std::size_t>(i)] = c.face_count(i + 1);
    return FVector(std::move(e));
}

// Δ_W = Δ ∩ P(W). The ambient vertex count is kept so faces stay in the
// original labels; the result may lack singletons outside W.
inline SimplicialComplex restrict_complex(const SimplicialComplex& c, VertexSet w) {
    if (!is_subset(w, full_set(c.n)))
        throw InvalidVertex("restriction set " + to_string(w) + " outside ambient vertices");
    std::vector<std::vector<VertexSet>> buckets;
    buckets.reserve(c.faces.size());
    for (const auto& bucket : c.faces) {
        std::vector<VertexSet> kept;
        for (VertexSet s : bucket)
            if (is_subset(s, w)) kept.push_back(s);
        buckets.push_back(std::move(kept));
    }
    while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
    return SimplicialComplex{c.n, std::move(buckets)};
}

// Maximal faces. For {∅} the single facet is the empty face.
inline std::vector<VertexSet> facets_of(const SimplicialComplex& c) {
    std::vector<VertexSet> out;
    for (std::size_t k = 0; k < c.faces.size(); ++k)
        for (VertexSet s : c.faces[k]) {
            bool maximal = true;
            if (k + 1 < c.faces.size())
                for (VertexSet t : c.faces[k + 1])
                    if (is_subset(s, t)) { maximal = false; break; }
            if (maximal) out.push_back(s);
        }
    return out;
}

namespace detail {

// All inclusion-minimal non-faces, linear ones included. A minimal
// non-face is σ ∪ {v} for some face σ, so candidates come from extending
// faces by one vertex.
inline std::vector<VertexSet> minimal_nonfaces_any(const SimplicialComplex& c) {
    std::unordered_set<VertexSet> found;
    for (int v = 1; v <= c.n; ++v)
        if (!c.has_face(singleton(v))) found.insert(singleton(v));
    for (const auto& bucket : c.faces)
        for (VertexSet s : bucket)
            for (int v = 1; v <= c.n; ++v) {
                if (contains(s, v)) continue;
                VertexSet cand = s | singleton(v);
                if (c.has_face(cand)) continue;
                bool all_subfaces = true;
                VertexSet rest = cand;
                while (rest && all_subfaces) {
                    VertexSet low = rest & (rest - 1);
                    if (!c.has_face(cand ^ (rest ^ low))) all_subfaces = false;
                    rest = low;
                }
                if (all_subfaces) found.insert(cand);
            }
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Stanley–Reisner ideal: generators are the inclusion-minimal non-faces.
inline SquarefreeIdeal minimal_nonfaces(const SimplicialComplex& c) {
    if (c.is_void()) throw VoidComplexError("void complex has no Stanley-Reisner ideal");
    if (!c.has_all_singletons())
        throw LinearGeneratorUnsupported("complex is missing a singleton; its ideal would have a linear generator");
    return SquarefreeIdeal{c.n, detail::minimal_nonfaces_any(c)};
}

// Faces are exactly the subsets containing no generator; built level by
// level, so the cost is proportional to the number of faces.
inline SimplicialComplex complex_of_ideal(const SquarefreeIdeal& ideal) {
    std::vector<std::vector<VertexSet>> buckets;
    buckets.push_back({0});
    std::vector<VertexSet> prev;
    prev.reserve(static_cast<std::size_t>(ideal.n));
    for (int v = 1; v <= ideal.n; ++v) prev.push_back(singleton(v));
    buckets.push_back(prev);

    while (!prev.empty()) {
        std::unordered_set<VertexSet> prev_set(prev.begin(), prev.end());
        std::vector<VertexSet> next;
        for (VertexSet s : prev) {
            int top = 63 - std::countl_zero(s);
            for (int v = top + 1; v <= ideal.n; ++v) {
                VertexSet cand = s | singleton(v);
                bool ok = true;
                VertexSet rest = cand;
                while (rest && ok) { // all maximal subsets must be faces
                    VertexSet low = rest & (rest - 1);
                    if (!prev_set.count(cand ^ (rest ^ low))) ok = false;
                    rest = low;
                }
                if (ok) // no proper generator survives the subset check; test cand itself
                    for (VertexSet g : ideal.gens)
                        if (g == cand) { ok = false; break; }
                if (ok) next.push_back(cand);
            }
        }
        std::sort(next.begin(), next.end());
        if (next.empty()) break;
        buckets.push_back(next);
        prev = std::move(next);
    }
    return detail::from_buckets(ideal.n, std::move(buckets));
}

// Relabels vertices: vertex v becomes perm[v-1].
inline SimplicialComplex apply_permutation(const SimplicialComplex& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.n)
        throw InvalidParameter("permutation length must equal vertex count");
    std::vector<std::vector<VertexSet>> buckets(c.faces.size());
    for (std::size_t k = 0; k < c.faces.size(); ++k) {
        buckets[k].reserve(c.faces[k].size());
        for (VertexSet s : c.faces[k]) {
            VertexSet t = 0;
            for (int v : vertices_of(s)) t |= singleton(perm[static_cast<std::size_t>(v - 1)]);
            buckets[k].push_back(t);
        }
        std::sort(buckets[k].begin(), buckets[k].end());
    }
    return SimplicialComplex{c.n, std::move(buckets)};
}

} // namespace srbetti
