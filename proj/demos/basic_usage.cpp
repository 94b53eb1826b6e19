// Minimal walkthrough: build a complex from an ideal, print its Betti
// diagram, and check the Hilbert-series identity.

#include <cstdio>

#include "srbetti/srbetti.hpp"

using namespace srbetti;

int main() {
    SquarefreeIdeal ideal = make_ideal(4, {make_vertex_set({1, 2}, 4), make_vertex_set({1, 3}, 4),
                                           make_vertex_set({2, 3, 4}, 4)});
    SimplicialComplex c = complex_of_ideal(ideal);
    std::printf("f-vector: %s\n", f_vector(c).to_string().c_str());

    BettiDiagram b = betti_via_hochster(c, 101);
    std::printf("%s", render_macaulay2(b).c_str());
    std::printf("hilbert series consistent: %s\n",
                hilbert_series_check(b, f_vector(c)) ? "yes" : "no");
    return 0;
}
