#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "srbetti/complex.hpp"
#include "srbetti/gf.hpp"

namespace srbetti {

// Dimensions of the reduced homology H~_l(Δ; K) for l = -1, 0, ..., dim Δ.
// Everything runs in the augmented chain complex (C_{-1} = K spanned by ∅),
// so H~_{-1}({∅}) = K needs no special casing.
struct ReducedHomologyProfile {
    std::map<int, long long> dims;

    long long at(int l) const {
        auto it = dims.find(l);
        return it == dims.end() ? 0 : it->second;
    }

    bool all_zero() const {
        for (const auto& [l, d] : dims)
            if (d != 0) return false;
        return true;
    }

    bool operator==(const ReducedHomologyProfile& o) const { return dims == o.dims; }
};

// Matrix of ∂_l : C_l -> C_{l-1} in the augmented complex. Basis order is
// canonical: faces sorted by mask value, vertices ascending inside a face.
// ∂_0 sends every vertex to 1·∅, so l = 0 gives the all-ones row.
inline FieldMatrix boundary_matrix(const SimplicialComplex& c, int l, const PrimeField& field) {
    if (c.is_void()) throw VoidComplexError("boundary matrix of the void complex");
    if (l < -1 || l > c.dim())
        throw DimensionError("dimension " + std::to_string(l) + " outside -1.." + std::to_string(c.dim()));
    int ncols = static_cast<int>(c.face_count(l + 1));
    int nrows = l == -1 ? 0 : static_cast<int>(c.face_count(l));
    FieldMatrix m(nrows, ncols, field);
    if (l == -1) return m; // C_{-1} -> 0

    const auto& domain = c.faces[static_cast<std::size_t>(l + 1)];
    const auto& codomain = c.faces[static_cast<std::size_t>(l)];
    for (int col = 0; col < ncols; ++col) {
        VertexSet s = domain[static_cast<std::size_t>(col)];
        int pos = 1; // 1-based position of the removed vertex, ascending
        VertexSet rest = s;
        while (rest) {
            VertexSet low = rest & (rest - 1);
            VertexSet face = s ^ (rest ^ low);
            auto it = std::lower_bound(codomain.begin(), codomain.end(), face);
            int row = static_cast<int>(it - codomain.begin());
            m.at(row, col) = (pos % 2 == 1) ? 1 : field.neg(1);
            rest = low;
            ++pos;
        }
    }
    return m;
}

inline ReducedHomologyProfile reduced_homology(const SimplicialComplex& c, const PrimeField& field) {
    if (c.is_void()) throw VoidComplexError("reduced homology of the void complex");
    int d = c.dim();
    // ranks[l + 1] = rank ∂_l for l = -1..d ; ∂_{-1} and ∂_{d+1} have rank 0
    std::vector<int> ranks(static_cast<std::size_t>(d) + 3, 0);
    for (int l = 0; l <= d; ++l)
        ranks[static_cast<std::size_t>(l) + 1] = rank(boundary_matrix(c, l, field));

    ReducedHomologyProfile out;
    for (int l = -1; l <= d; ++l) {
        long long chains = c.face_count(l + 1);
        long long kernel = chains - ranks[static_cast<std::size_t>(l) + 1];
        long long image_above = ranks[static_cast<std::size_t>(l) + 2];
        out.dims[l] = kernel - image_above;
    }
    return out;
}

} // namespace srbetti
