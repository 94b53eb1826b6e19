#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srbetti/errors.hpp"

namespace srbetti {

enum class DiagramOrder { Less, Greater, Equal, Incomparable };

inline const char* to_string(DiagramOrder o) {
    switch (o) {
        case DiagramOrder::Less: return "Less";
        case DiagramOrder::Greater: return "Greater";
        case DiagramOrder::Equal: return "Equal";
        default: return "Incomparable";
    }
}

// Graded Betti numbers of R/I as a sparse map (i, j) -> count, with the
// ambient variable count and the field characteristic they were computed
// over. Zero entries are never stored.
struct BettiDiagram {
    int n = 0;
    std::uint32_t p = 0;
    std::map<std::pair<int, int>, long long> entries; // (homological index i, degree j) -> β_{i,j}

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    void add(int i, int j, long long v) {
        if (v == 0) return;
        auto [it, inserted] = entries.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }

    int max_col() const { // largest i with a nonzero entry
        int m = 0;
        for (const auto& [ij, v] : entries) m = std::max(m, ij.first);
        return m;
    }

    int max_row() const { // largest j - i with a nonzero entry
        int m = 0;
        for (const auto& [ij, v] : entries) m = std::max(m, ij.second - ij.first);
        return m;
    }

    bool same_entries(const BettiDiagram& o) const { return entries == o.entries; }
};

// Column sums s_i = Σ_j β_{i,j}.
inline std::vector<long long> total_betti(const BettiDiagram& b) {
    std::vector<long long> s(static_cast<std::size_t>(b.max_col()) + 1, 0);
    for (const auto& [ij, v] : b.entries) s[static_cast<std::size_t>(ij.first)] += v;
    return s;
}

// Diagonal alternating sums d_j = Σ_i (-1)^i β_{i,j}, j = 0..n.
inline std::vector<long long> diagonal_sums(const BettiDiagram& b) {
    std::vector<long long> d(static_cast<std::size_t>(b.n) + 1, 0);
    for (const auto& [ij, v] : b.entries) {
        auto [i, j] = ij;
        if (j >= 0 && j <= b.n) d[static_cast<std::size_t>(j)] += (i % 2 == 0) ? v : -v;
    }
    return d;
}

// Componentwise partial order over the union of supports.
inline DiagramOrder compare(const BettiDiagram& a, const BettiDiagram& b) {
    if (a.n != b.n)
        throw AmbientMismatch("cannot compare diagrams on " + std::to_string(a.n) + " and " +
                              std::to_string(b.n) + " variables");
    bool some_less = false, some_greater = false;
    auto scan = [&](const BettiDiagram& x) {
        for (const auto& [ij, v] : x.entries) {
            long long va = a.at(ij.first, ij.second);
            long long vb = b.at(ij.first, ij.second);
            if (va < vb) some_less = true;
            if (va > vb) some_greater = true;
        }
    };
    scan(a);
    scan(b);
    if (some_less && some_greater) return DiagramOrder::Incomparable;
    if (some_less) return DiagramOrder::Less;
    if (some_greater) return DiagramOrder::Greater;
    return DiagramOrder::Equal;
}

// Betti table in the Macaulay2-style layout: header row of column sums,
// rows labeled by j - i. Columns run 0..max{i : s_i != 0}; rows run
// 0..max{j - i over the support}, interior all-zero rows included.
inline std::string render_macaulay2(const BettiDiagram& b) {
    std::vector<long long> s = total_betti(b);
    int imax = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) imax = static_cast<int>(i);
    int rmax = b.max_row();

    auto cell = [&](int i, int r) { return std::to_string(b.at(i, i + r)); };
    std::size_t label_w = std::to_string(rmax).size();
    std::vector<std::size_t> col_w(static_cast<std::size_t>(imax) + 1, 1);
    for (int i = 0; i <= imax; ++i) {
        std::size_t w = std::to_string(i < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i)] : 0).size();
        for (int r = 0; r <= rmax; ++r) w = std::max(w, cell(i, r).size());
        col_w[static_cast<std::size_t>(i)] = w;
    }

    auto rjust = [](const std::string& t, std::size_t w) {
        return std::string(w > t.size() ? w - t.size() : 0, ' ') + t;
    };
    std::string out;
    out += std::string(label_w, ' ') + " |";
    for (int i = 0; i <= imax; ++i)
        out += " " + rjust(std::to_string(i < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i)] : 0),
                           col_w[static_cast<std::size_t>(i)]);
    out += "\n" + std::string(label_w, '-') + "-+";
    for (int i = 0; i <= imax; ++i)
        out += std::string(col_w[static_cast<std::size_t>(i)] + 1, '-');
    out += "\n";
    for (int r = 0; r <= rmax; ++r) {
        out += rjust(std::to_string(r), label_w) + " |";
        for (int i = 0; i <= imax; ++i)
            out += " " + rjust(cell(i, r), col_w[static_cast<std::size_t>(i)]);
        out += "\n";
    }
    return out;
}

} // namespace srbetti
