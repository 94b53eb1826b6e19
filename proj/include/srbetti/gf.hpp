#pragma once

#include <cstdint>
#include <vector>

#include "srbetti/errors.hpp"

namespace srbetti {

// Prime field Z/p with exact arithmetic. p is capped so products fit
// comfortably in 64-bit intermediates.
struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t p_) : p(p_) {
        if (p < 2 || !is_prime(p))
            throw InvalidParameter("characteristic " + std::to_string(p_) + " is not prime");
    }

    static bool is_prime(std::uint32_t m) {
        if (m < 2) return false;
        for (std::uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) return false;
        return true;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t inv(std::uint32_t a) const { // Fermat; p prime
        std::uint32_t r = 1, base = a % p;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<std::uint32_t>(m);
    }
};

// Dense row-major matrix over a prime field.
struct FieldMatrix {
    int rows = 0;
    int cols = 0;
    PrimeField field;
    std::vector<std::uint32_t> a;

    FieldMatrix(int r, int c, PrimeField f)
        : rows(r), cols(c), field(f), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Rank by plain Gaussian elimination; works on a copy.
inline int rank(FieldMatrix m) {
    const PrimeField& F = m.field;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        std::uint32_t pinv = F.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            std::uint32_t factor = F.mul(m.at(i, c), pinv);
            if (factor == 0) continue;
            m.at(i, c) = 0;
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

} // namespace srbetti
