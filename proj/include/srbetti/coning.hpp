#pragma once

#include <map>
#include <string>
#include <vector>

#include "srbetti/complex.hpp"
#include "srbetti/fvector.hpp"

namespace srbetti {

// Cone index: a nonnegative integer or infinity. Infinity behaves like any
// j >= n and yields the full cone.
struct ConeIndex {
    bool infinite = false;
    int value = 0;

    static ConeIndex inf() { return ConeIndex{true, 0}; }
    static ConeIndex of(int j) {
        if (j < 0) throw InvalidParameter("cone index must be nonnegative");
        return ConeIndex{false, j};
    }

    int effective(int n) const { return infinite || value > n ? n : value; }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }

    static ConeIndex parse(const std::string& s) {
        if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") return inf();
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw InvalidParameter("bad cone index '" + s + "'");
        return of(v);
    }

    bool operator==(const ConeIndex& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// C_(j)Δ on the new vertex n+1: all faces of Δ, plus σ ∪ {n+1} for every
// face σ with |σ| <= j.
inline SimplicialComplex cone_j(const SimplicialComplex& c, ConeIndex j) {
    if (c.is_void()) throw VoidComplexError("cone of the void complex");
    if (c.n + 1 > kMaxVertices) throw InvalidParameter("coning would exceed 63 vertices");
    int cap = j.effective(c.n);
    int apex = c.n + 1;
    std::vector<std::vector<VertexSet>> buckets(c.faces.size() + 1);
    for (std::size_t k = 0; k < c.faces.size(); ++k) {
        buckets[k].insert(buckets[k].end(), c.faces[k].begin(), c.faces[k].end());
        if (static_cast<int>(k) <= cap)
            for (VertexSet s : c.faces[k]) buckets[k + 1].push_back(s | singleton(apex));
    }
    return detail::from_buckets(apex, std::move(buckets));
}

inline SimplicialComplex cone_inf(const SimplicialComplex& c) { return cone_j(c, ConeIndex::inf()); }

// f-vector transform of the j-cone, the two-case formula:
//   j < n : (1+f_0, f_0+f_1, ..., f_{j-1}+f_j, f_{j+1}, ..., f_{n-1}, 0)
//   j >= n: (1+f_0, f_0+f_1, ..., f_{n-2}+f_{n-1}, f_{n-1})
inline FVector fvector_cone_j(const FVector& f, ConeIndex j) {
    int n = f.n();
    int cap = j.effective(n);
    std::vector<long long> g(static_cast<std::size_t>(n) + 1, 0);
    g[0] = 1 + f.at(0);
    for (int m = 1; m <= n; ++m)
        g[static_cast<std::size_t>(m)] = (m <= cap) ? f.at(m - 1) + f.at(m) : f.at(m);
    return FVector(std::move(g));
}

inline SimplicialComplex cone_seq(const SimplicialComplex& c, const std::vector<ConeIndex>& ms) {
    SimplicialComplex out = c;
    for (ConeIndex m : ms) out = cone_j(out, m);
    return out;
}

inline FVector fvector_cone_seq(const FVector& f, const std::vector<ConeIndex>& ms) {
    FVector out = f;
    for (ConeIndex m : ms) out = fvector_cone_j(out, m);
    return out;
}

// The binary family tree of f-vectors obtained by j-coning and
// infinity-coning. Nodes are keyed by the comma-separated sequence of
// applied indices ("" for the root, e.g. "5,inf,5"). Distinctness of the
// node set is verified, never assumed; collisions are reported so the
// tool stays usable outside the guaranteed regime.
struct ConeTree {
    FVector root;
    ConeIndex branch_j;
    int depth = 0;
    std::map<std::string, FVector> nodes;                  // index string -> f-vector
    std::vector<std::pair<std::string, std::string>> collisions; // equal f-vectors, lexicographic pairs

    std::vector<std::pair<std::string, FVector>> leaves() const {
        std::vector<std::pair<std::string, FVector>> out;
        for (const auto& [key, f] : nodes)
            if (cone_count(key) == depth) out.emplace_back(key, f);
        return out;
    }

    bool all_distinct() const { return collisions.empty(); }

    static int cone_count(const std::string& key) {
        if (key.empty()) return 0;
        int c = 1;
        for (char ch : key)
            if (ch == ',') ++c;
        return c;
    }
};

inline ConeTree cone_tree(const FVector& f, ConeIndex j, int depth) {
    if (depth < 0) throw InvalidParameter("tree depth must be nonnegative");
    ConeTree tree{f, j, depth, {}, {}};
    tree.nodes.emplace("", f);
    std::vector<std::pair<std::string, FVector>> level{{"", f}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::pair<std::string, FVector>> next;
        next.reserve(level.size() * 2);
        for (const auto& [key, fv] : level)
            for (ConeIndex m : {j, ConeIndex::inf()}) {
                std::string child_key = key.empty() ? m.to_string() : key + "," + m.to_string();
                FVector child = fvector_cone_j(fv, m);
                tree.nodes.emplace(child_key, child);
                next.emplace_back(child_key, child);
            }
        level = std::move(next);
    }
    // pairwise distinctness over all nodes
    std::map<FVector, std::string> seen;
    for (const auto& [key, fv] : tree.nodes) {
        auto [it, inserted] = seen.try_emplace(fv, key);
        if (!inserted) tree.collisions.emplace_back(it->second, key);
    }
    return tree;
}

} // namespace srbetti
