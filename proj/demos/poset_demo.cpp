// Builds the Betti-diagram poset for a small f-vector and reports whether
// a unique minimal diagram exists.

#include <cstdio>

#include "srbetti/srbetti.hpp"

using namespace srbetti;

int main() {
    FVector f = fvector_of({5, 4, 0, 0, 0});
    BettiPoset poset = build_poset(5, f, 101);
    std::printf("f-vector %s: %lld complexes, %zu distinct diagrams\n", f.to_string().c_str(),
                poset.complexes_seen, poset.diagrams.size());
    std::printf("unique minimum: %s\n", has_unique_min(poset) ? "yes" : "no");
    for (const BettiDiagram& d : minimal_elements(poset)) std::printf("%s", render_macaulay2(d).c_str());
    return 0;
}
