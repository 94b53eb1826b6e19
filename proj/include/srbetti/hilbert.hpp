#pragma once

#include <vector>

#include "srbetti/errors.hpp"
#include "srbetti/fvector.hpp"

namespace srbetti {

// Hilbert function of R/I for a Stanley–Reisner quotient, stored through
// its defining f-vector: H(0) = 1 and H(m) = Σ_i f_i · C(m-1, i) for m > 0.
struct HilbertFunction {
    FVector f;

    int n() const { return f.n(); }

    long long value(int degree) const {
        if (degree < 0) return 0;
        if (degree == 0) return 1;
        long long h = 0;
        for (int i = 0; i < f.n(); ++i) h += f.at(i) * binomial(degree - 1, i);
        return h;
    }

    // H(0..n) as a vector.
    std::vector<long long> values_through(int max_degree) const {
        std::vector<long long> out;
        out.reserve(static_cast<std::size_t>(max_degree) + 1);
        for (int d = 0; d <= max_degree; ++d) out.push_back(value(d));
        return out;
    }
};

inline HilbertFunction hilbert_from_fvector(const FVector& f) {
    f.require_well_formed();
    return HilbertFunction{f};
}

// Inverts the triangular binomial system. `values` holds H(1), H(2), ...;
// at least n degrees are required and extra degrees are consistency-checked.
inline FVector fvector_from_hilbert(const std::vector<long long>& values, int n) {
    if (static_cast<int>(values.size()) < n)
        throw InvalidParameter("need Hilbert values at degrees 1.." + std::to_string(n));
    std::vector<long long> f(static_cast<std::size_t>(n), 0);
    for (int m = 1; m <= n; ++m) {
        long long rest = 0;
        for (int i = 0; i < m - 1; ++i) rest += f[static_cast<std::size_t>(i)] * binomial(m - 1, i);
        long long fi = values[static_cast<std::size_t>(m - 1)] - rest; // coefficient C(m-1, m-1) = 1
        if (fi < 0 || fi > binomial(n, m))
            throw NotAnFVector("degree " + std::to_string(m) + " forces f_" + std::to_string(m - 1) +
                               " = " + std::to_string(fi) + ", outside 0..C(n," + std::to_string(m) + ")");
        f[static_cast<std::size_t>(m - 1)] = fi;
    }
    FVector out(std::move(f));
    HilbertFunction h{out};
    for (int m = n + 1; m <= static_cast<int>(values.size()); ++m)
        if (h.value(m) != values[static_cast<std::size_t>(m - 1)])
            throw NotAnFVector("Hilbert value at degree " + std::to_string(m) +
                               " inconsistent with the degrees 1.." + std::to_string(n));
    return out;
}

inline FVector fvector_from_hilbert(const HilbertFunction& h, int n) {
    std::vector<long long> values;
    for (int m = 1; m <= n; ++m) values.push_back(h.value(m));
    return fvector_from_hilbert(values, n);
}

} // namespace srbetti
