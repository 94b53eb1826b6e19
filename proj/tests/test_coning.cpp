#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "srbetti/srbetti.hpp"

using namespace srbetti;

namespace {

SimplicialComplex wedge_example() { // f-vector (4,4,1,0)
    return from_facets(4, {make_vertex_set({1, 2, 4}, 4), make_vertex_set({1, 4}, 4),
                           make_vertex_set({2, 4}, 4), make_vertex_set({3, 4}, 4)});
}

} // namespace

TEST_CASE("j-cone of the (4,4,1,0) complex") {
    SimplicialComplex c = wedge_example();
    CHECK(f_vector(cone_j(c, ConeIndex::of(0))) == fvector_of({5, 4, 1, 0, 0}));
    CHECK(f_vector(cone_j(c, ConeIndex::of(1))) == fvector_of({5, 8, 1, 0, 0}));
    CHECK(f_vector(cone_j(c, ConeIndex::of(2))) == fvector_of({5, 8, 5, 0, 0}));
    CHECK(f_vector(cone_j(c, ConeIndex::of(3))) == fvector_of({5, 8, 5, 1, 0}));
    CHECK(cone_j(c, ConeIndex::of(3)) == cone_inf(c));
    CHECK(cone_j(c, ConeIndex::of(17)) == cone_inf(c));

    // apex faces are exactly σ ∪ {5} for faces σ with |σ| <= j
    SimplicialComplex c1 = cone_j(c, ConeIndex::of(1));
    for (const auto& bucket : c1.faces)
        for (VertexSet s : bucket)
            if (contains(s, 5)) {
                VertexSet base = s ^ singleton(5);
                CHECK(c.has_face(base));
                CHECK(cardinality(base) <= 1);
            }
}

TEST_CASE("cone of a point is an edge") {
    CHECK(f_vector(cone_inf(from_facets(1, {}))) == fvector_of({2, 1}));
}

TEST_CASE("cone faces grow with j") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex c = oracles::random_complex(5, rng);
        for (int j = 0; j < 5; ++j) {
            SimplicialComplex small = cone_j(c, ConeIndex::of(j));
            SimplicialComplex big = cone_j(c, ConeIndex::of(j + 1));
            for (const auto& bucket : small.faces)
                for (VertexSet s : bucket) CHECK(big.has_face(s));
        }
    }
}

TEST_CASE("f-vector transform matches the complex-level cone") {
    std::mt19937_64 rng(61);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            SimplicialComplex c = oracles::random_complex(n, rng);
            for (int j = 0; j <= n + 1; ++j)
                CHECK(fvector_cone_j(f_vector(c), ConeIndex::of(j)) ==
                      f_vector(cone_j(c, ConeIndex::of(j))));
            CHECK(fvector_cone_j(f_vector(c), ConeIndex::inf()) == f_vector(cone_inf(c)));
        }
    CHECK(fvector_cone_j(fvector_of({4, 0, 0, 0}), ConeIndex::of(0)) == fvector_of({5, 0, 0, 0, 0}));
}

TEST_CASE("cone sequences compose left to right") {
    SimplicialComplex c = wedge_example();
    CHECK(cone_seq(c, {}) == c);
    CHECK(cone_seq(c, {ConeIndex::of(3)}) == cone_inf(c));
    std::vector<ConeIndex> ms{ConeIndex::of(0), ConeIndex::inf()};
    CHECK(f_vector(cone_seq(c, ms)) == fvector_cone_seq(f_vector(c), ms));
}

TEST_CASE("closed-form coning formula equals iterated coning") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 80; ++trial) {
        SimplicialComplex c = oracles::random_complex(4, rng);
        FVector f = f_vector(c);
        int j = static_cast<int>(rng() % 4);
        int len = 1 + static_cast<int>(rng() % 5);
        std::vector<ConeIndex> ms;
        for (int t = 0; t < len; ++t)
            ms.push_back(rng() % 2 ? ConeIndex::inf() : ConeIndex::of(j));
        CHECK(oracles::cone_seq_closed_form(f, ms, j) == fvector_cone_seq(f, ms));
    }
}

TEST_CASE("family tree nodes and distinctness") {
    ConeTree trivial = cone_tree(fvector_of({4, 4, 1, 0}), ConeIndex::of(1), 0);
    CHECK(trivial.nodes.size() == 1);
    CHECK(trivial.leaves().size() == 1);
    CHECK(trivial.all_distinct());

    // three full cones of (6,8,4,0,0,0), then branch on {5, inf}
    FVector base = fvector_cone_seq(fvector_of({6, 8, 4, 0, 0, 0}),
                                    {ConeIndex::inf(), ConeIndex::inf(), ConeIndex::inf()});
    CHECK(base == fvector_of({9, 29, 47, 42, 20, 4, 0, 0, 0}));
    ConeTree tree = cone_tree(base, ConeIndex::of(5), 2);
    CHECK(tree.nodes.size() == 7);
    auto leaves = tree.leaves();
    CHECK(leaves.size() == 4);
    for (std::size_t a = 0; a < leaves.size(); ++a)
        for (std::size_t b = a + 1; b < leaves.size(); ++b)
            CHECK(leaves[a].second != leaves[b].second);
    CHECK(tree.all_distinct());
}

TEST_CASE("cone diagonal preservation, sampled") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex c = oracles::random_complex(5, rng);
        for (std::uint32_t p : {2u, 101u}) {
            BettiDiagram base = betti_via_hochster(c, p);
            for (int j = 0; j <= 5; ++j) {
                BettiDiagram coned = betti_via_hochster(cone_j(c, ConeIndex::of(j)), p);
                for (const auto& [ij, v] : coned.entries)
                    if (ij.second <= j + 1) CHECK(base.at(ij.first, ij.second) == v);
                for (const auto& [ij, v] : base.entries)
                    if (ij.second <= j + 1) CHECK(coned.at(ij.first, ij.second) == v);
            }
            CHECK(betti_via_hochster(cone_inf(c), p).same_entries(base));
        }
    }
}

TEST_CASE("0-cone closed-form Betti numbers, sampled") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex c = oracles::random_complex(5, rng);
        for (std::uint32_t p : {2u, 101u}) {
            BettiDiagram direct = betti_via_hochster(cone_j(c, ConeIndex::of(0)), p);
            BettiDiagram formula = oracles::cone0_betti_closed_form(betti_via_hochster(c, p), c.n);
            CHECK(direct.same_entries(formula));
        }
    }
}

TEST_CASE("cone index parsing") {
    CHECK(ConeIndex::parse("inf").infinite);
    CHECK(ConeIndex::parse("5") == ConeIndex::of(5));
    CHECK_THROWS_AS(ConeIndex::parse("5x"), InvalidParameter);
    CHECK_THROWS_AS(ConeIndex::of(-1), InvalidParameter);
}
