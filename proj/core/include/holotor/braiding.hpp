#pragma once

#include "holotor/uqi.hpp"

namespace holotor {

// Images under the R-automorphism of the six source generators {K(x)1, 1(x)K,
// E(x)1, 1(x)E, F(x)1, 1(x)F}, as 4x4 matrices in the target representation
// pi4 (x) pi3 of the crossing (x1, x2) -> (x4, x3).
struct RhatImages {
    ExtChar tgt1, tgt2;  // (chi4, mu2), (chi3, mu1): mu's travel with strands
    Matrix K1, K2, E1, E2, F1, F2;
};

RhatImages rhat_images(const ExtChar& x1, const ExtChar& x2);

// A holonomy braiding on V(x1) (x) V(x2), det-normalized by the principal
// fourth root.  Residual ambiguity i^k is inherent and documented.
struct BraidingCell {
    ExtChar src1, src2, tgt1, tgt2;
    Matrix c;               // 4x4
    double residual = 0.0;  // worst intertwining residual over the generators
    double gap = 0.0;       // second-smallest / smallest singular value
};

// Solve c pi12(x) = pi43(Rx) c over the six generators; the nullspace of the
// stacked 96x16 system must be one-dimensional.
BraidingCell solve_braiding(const ExtChar& x1, const ExtChar& x2);

// Module isomorphism V(chi,mu)* -> V(chi^-1,mu), as the (unique up to scale)
// intertwiner between dual_module(simple(chi,mu)) and simple(chi^-1,mu).
Matrix inverse_char_iso(const ExtChar& x);

// Mirror braiding cbar on V(x1)* (x) V(x2)* (Delta^op structure), built from
// the forward solve on inverse characters conjugated by flips and by
// inverse_char_iso factors; det-normalized.
BraidingCell mirror_braiding(const ExtChar& x1, const ExtChar& x2);

// Invariant vector (x)_j z_j, z = |0><0| + |1><1|, in the interleaved order
// (V_1 [x] V_1*) (x) ... (x) (V_n [x] V_n*).  Column vector, dimension 4^n.
Matrix v0(const std::vector<ExtChar>& xs);

// Doubled cell C = c [x] cbar on the interleaved 16-dimensional space,
// rescaled so that C v0(src) = v0(tgt) exactly.
struct DoubledCell {
    ExtChar src1, src2, tgt1, tgt2;
    Matrix C;  // 16x16
    double residual = 0.0;
};

DoubledCell doubled_braiding(const ExtChar& x1, const ExtChar& x2);

// Permutation matrix taking the grouped order (V1 (x) V2) (x) (V1* (x) V2*)
// to the interleaved order (V1 [x] V1*) (x) (V2 [x] V2*); all 2-dim factors.
Matrix interleave_perm();

// Functors on colored braid words: product over letters of the cell matrices
// embedded at the letter's tensor positions.  F acts on 2^n, Fbar on the dual
// 2^n, T on the doubled 4^n.  Negative letters use the inverse of the forward
// cell whose target colors match the current ones.  F and Fbar carry an <i>
// phase ambiguity; T does not.
Matrix functor_F(const BraidWord& word, const std::vector<ExtChar>& xs);
Matrix functor_Fbar(const BraidWord& word, const std::vector<ExtChar>& xs);
Matrix functor_T(const BraidWord& word, const std::vector<ExtChar>& xs);

}  // namespace holotor
