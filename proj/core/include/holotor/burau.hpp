#pragma once

#include <vector>

#include "holotor/holonomy.hpp"

namespace holotor {

// Twisted Burau matrix (2(n-1) x 2(n-1), k = 2 blocks) together with the color
// tuples at the bottom and top of the braid.  Acts on row vectors; words
// compose by left-to-right matrix products.
struct BurauMatrix {
    Matrix m;
    std::vector<SL2Elem> source_colors;
    std::vector<SL2Elem> target_colors;
};

struct BurauNice {
    Matrix m;
    std::vector<ExtChar> source;
    std::vector<ExtChar> target;
};

// Boundary-reduced twisted Burau representation.
BurauMatrix burau_boundary(const BraidWord& word, const std::vector<SL2Elem>& colors);

// Locally-finite reduced twisted Burau representation (inverse-transpose
// coefficients).
BurauMatrix burau_reduced(const BraidWord& word, const std::vector<SL2Elem>& colors);

// Reduced Burau in the distinguished bases: generator blocks written directly
// in the (kappa, epsilon, phi) coordinates of each letter's target colors.
BurauNice burau_nice(const BraidWord& word, const std::vector<ExtChar>& star);

// Change-of-basis block diagonal Q used to relate burau_reduced and
// burau_nice: blocks p_i = (a_i^+ ... a_1^+)^T for i = 1..n-1.
Matrix nice_basis_change(const std::vector<StarChar>& a);

// Ordered product g_n ... g_1.
SL2Elem total_holonomy(const std::vector<SL2Elem>& colors);

struct TorsionResult {
    cplx value;
    int stabilizations = 0;
};

// Twisted Reidemeister torsion of the closure:
// det(1 - B(beta)) / det(1 - h^{-1}), defined up to sign.
TorsionResult torsion(const BraidWord& word, const std::vector<SL2Elem>& colors,
                      bool auto_stabilize = true, double tol = 1e-9);

}  // namespace holotor
