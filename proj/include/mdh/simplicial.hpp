#pragma once

#include <utility>
#include <vector>

#include "mdh/exactnum.hpp"
#include "mdh/intmatrix.hpp"

namespace mdh {

// A finite simplicial complex with a (possibly empty) subcomplex, for
// relative homology. Simplices are strictly increasing vertex tuples and
// both lists are closed under faces and sorted; build through make_complex
// to get that normalization for free.
struct SimplicialPair {
    int vertices = 0; // labels live in [0, vertices)
    std::vector<std::vector<int>> simplices;
    std::vector<std::vector<int>> sub;
};

// Sorts each tuple, closes both lists under faces, dedupes and orders them.
// Rejects repeated vertices, negative labels and sub simplices missing
// from the complex.
SimplicialPair make_complex(std::vector<std::vector<int>> simplices,
                            std::vector<std::vector<int>> sub = {});

void validate_pair(const SimplicialPair& p);

// Integer homology, one entry per degree up to the dimension actually
// carrying anything: free rank and the invariant factors > 1.
struct HomologyProfile {
    std::vector<int> ranks;
    std::vector<std::vector<Int>> torsion;

    int rank(int n) const;
    std::vector<Int> torsion_at(int n) const;

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.ranks == b.ranks && a.torsion == b.torsion;
    }
    friend bool operator!=(const HomologyProfile& a, const HomologyProfile& b) {
        return !(a == b);
    }
};

// H_n(|L|, |L_1|; Z) by Smith reduction of the relative boundary matrices.
HomologyProfile homology(const SimplicialPair& p);

// The staircase of the cone on (L, L_1) with exponent b: trivial below b
// (rank 1 in degree 0 when the subcomplex is empty, else 0), the relative
// homology of the pair at b. Values strictly between b and infinity are
// not defined here; the value at infinity is reported separately.
struct BConeDiagram {
    Rat b;
    std::vector<int> below_ranks; // per degree, on (0, b)
    HomologyProfile at_b;
    HomologyProfile at_inf;
};

// Requires b >= 1.
BConeDiagram bcone_diagram(const SimplicialPair& p, const Rat& b);

// Homology of n disjoint circles, computed honestly from n triangles.
HomologyProfile curve_link_profile(int n_branches);

// Matrices of H_0 and H_1 of a simplicial map between complexes of
// dimension <= 1 with empty subcomplexes. Bases: components ordered by
// least vertex in degree 0; fundamental cycles of the non-forest edges in
// lexicographic edge order in degree 1. vertex_image[v] is the image of v.
std::pair<IntMatrix, IntMatrix> induced_maps_deg01(const SimplicialPair& dom,
                                                   const SimplicialPair& cod,
                                                   const std::vector<int>& vertex_image);

} // namespace mdh
