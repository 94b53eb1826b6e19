#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "srbetti/betti.hpp"
#include "srbetti/complex.hpp"
#include "srbetti/coning.hpp"
#include "srbetti/homology.hpp"
#include "srbetti/search.hpp"

namespace srbetti {

using json = nlohmann::json;

// Complex: {"n": int, "facets": [[int,...],...]}
inline json to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (VertexSet s : facets_of(c)) facets.push_back(vertices_of(s));
    return json{{"n", c.n}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<VertexSet> facets;
    for (const auto& face : j.at("facets"))
        facets.push_back(make_vertex_set(face.get<std::vector<int>>(), n));
    return from_facets(n, facets);
}

// Ideal: {"n": int, "gens": [[int,...],...]}
inline json to_json(const SquarefreeIdeal& ideal) {
    json gens = json::array();
    for (VertexSet g : ideal.gens) gens.push_back(vertices_of(g));
    return json{{"n", ideal.n}, {"gens", gens}};
}

inline SquarefreeIdeal ideal_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<VertexSet> gens;
    for (const auto& g : j.at("gens")) gens.push_back(make_vertex_set(g.get<std::vector<int>>(), n));
    return make_ideal(n, gens);
}

// Diagram: {"n": int, "char": int, "entries": [{"i","j","v"},...]}
inline json to_json(const BettiDiagram& b) {
    json entries = json::array();
    for (const auto& [ij, v] : b.entries)
        entries.push_back(json{{"i", ij.first}, {"j", ij.second}, {"v", v}});
    return json{{"n", b.n}, {"char", b.p}, {"entries", entries}};
}

inline BettiDiagram diagram_from_json(const json& j) {
    BettiDiagram b;
    b.n = j.at("n").get<int>();
    b.p = j.at("char").get<std::uint32_t>();
    for (const auto& e : j.at("entries"))
        b.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("v").get<long long>());
    return b;
}

inline json to_json(const FVector& f) { return json(f.entries); }

inline FVector fvector_from_json(const json& j) { return FVector(j.get<std::vector<long long>>()); }

// Homology profile: {"-1": d, "0": d, ...}
inline json to_json(const ReducedHomologyProfile& h) {
    json out = json::object();
    for (const auto& [l, d] : h.dims) out[std::to_string(l)] = d;
    return out;
}

// Cone tree: list of {"index": "5,inf,...", "fvector": [...]}
inline json to_json(const ConeTree& tree) {
    json out = json::array();
    for (const auto& [key, f] : tree.nodes)
        out.push_back(json{{"index", key}, {"fvector", f.entries}});
    return out;
}

// Poset: {"fvector", "char", "diagrams", "edges", "unique_min"}; an edge
// [a, b] records diagrams[a] < diagrams[b].
inline json to_json(const BettiPoset& poset) {
    json diagrams = json::array();
    for (const auto& d : poset.diagrams) diagrams.push_back(to_json(d));
    json edges = json::array();
    for (std::size_t a = 0; a < poset.diagrams.size(); ++a)
        for (std::size_t b = 0; b < poset.diagrams.size(); ++b)
            if (poset.relation[a][b] == DiagramOrder::Less) edges.push_back(json::array({a, b}));
    return json{{"fvector", poset.f.entries},
                {"char", poset.p},
                {"diagrams", diagrams},
                {"edges", edges},
                {"unique_min", has_unique_min(poset)}};
}

} // namespace srbetti
