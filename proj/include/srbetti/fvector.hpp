#pragma once

#include <string>
#include <vector>

#include "srbetti/errors.hpp"
#include "srbetti/vertex_set.hpp"

namespace srbetti {

// Face-count vector (f_0,...,f_{n-1}) of a complex on n ambient vertices;
// entry i counts the faces of cardinality i+1. Trailing zeros are kept —
// they record the ambient vertex count.
struct FVector {
    std::vector<long long> entries;

    FVector() = default;
    explicit FVector(std::vector<long long> e) : entries(std::move(e)) {}

    int n() const { return static_cast<int>(entries.size()); }

    long long at(int i) const {
        return (i >= 0 && i < n()) ? entries[static_cast<std::size_t>(i)] : 0;
    }

    long long total_faces() const { // excluding the empty face
        long long t = 0;
        for (long long e : entries) t += e;
        return t;
    }

    bool operator==(const FVector& o) const { return entries == o.entries; }
    bool operator!=(const FVector& o) const { return !(*this == o); }
    bool operator<(const FVector& o) const { return entries < o.entries; }

    // Well-formedness: nonnegative entries bounded by the ambient binomials.
    bool well_formed() const {
        for (int i = 0; i < n(); ++i)
            if (entries[static_cast<std::size_t>(i)] < 0 ||
                entries[static_cast<std::size_t>(i)] > binomial(n(), i + 1))
                return false;
        return true;
    }

    void require_well_formed() const {
        if (!well_formed())
            throw NotAnFVector("entry exceeds binomial bound or is negative in " + to_string());
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < n(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }
};

inline FVector fvector_of(std::initializer_list<long long> e) {
    return FVector(std::vector<long long>(e));
}

} // namespace srbetti
