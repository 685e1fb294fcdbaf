#pragma once

#include <array>
#include <vector>

#include "holotor/holonomy.hpp"

namespace holotor {

// Finite-dimensional representation of the small quantum group at q = i,
// given by the images of the generators K, E, F (column-vector action).
// Relations: KE = -EK, KF = -FK, EF - FE = 2i(K - K^{-1}).
struct Rep {
    std::size_t dim = 0;
    Matrix K, E, F;

    Matrix Kinv() const { return inverse(K); }
    Matrix Ftilde() const { return (K * F) * cplx(0.0, 1.0); }  // F~ = iKF
    // Casimir, normalization Omega = i(EF - iK + iK^{-1}) = iEF + K - K^{-1}.
    Matrix Omega() const { return E * F * cplx(0.0, 1.0) + K - Kinv(); }
    // Largest residual of the three defining relations.
    double relation_residual() const;
};

// Principal square root of kappa (argument in (-pi/2, pi/2]).
cplx sqrt_kappa(const StarChar& chi);

// The 2-dimensional simple weight module V(chi, mu); Omega acts by mu - 1/mu.
Rep simple_module(const ExtChar& x);

// Dual representation: u -> transpose(r(S(u))), with S(E) = -EK^{-1},
// S(F) = -KF, S(K) = K^{-1}.
Rep dual_module(const Rep& r);

enum class Coproduct { Delta, DeltaOp };

// Iterated coproduct action on the Kronecker product of the given factors.
Rep tensor_rep(const std::vector<Rep>& reps, Coproduct variant = Coproduct::Delta);

// The 4-dimensional indecomposable projective P0 (basis x, y1, y2, z), the
// parity character Pi, and P1 = Pi (x) P0.
Rep p0_module();
Rep parity_module();
Rep p1_module();

// Module isomorphism P0 -> V(chi,mu) (x) V(chi,mu)^*, as a 4x4 matrix in the
// bases (x, y1, y2, z) and |j> (x) <k|.
Matrix p0_iso(const ExtChar& x);

// Clifford generator family on the tensor product of simple modules:
// alpha_j^1 = -K_1...K_{j-1} E_j / omega_j, alpha_j^2 = K_1...K_{j-1} F~_j / omega_j,
// beta_j = alpha_j - alpha_{j+1}.  The sign of the E-side generator is chosen
// so that braiding conjugation on the beta basis reproduces the nice-basis
// Burau block with no extra diagonal conjugation.
struct CliffordFamily {
    int n = 0;
    // alpha[j-1][nu-1], j = 1..n; beta[j-1][nu-1], j = 1..n-1.
    std::vector<std::array<Matrix, 2>> alpha;
    std::vector<std::array<Matrix, 2>> beta;
};

CliffordFamily clifford_family(const std::vector<ExtChar>& xs);

// Mirrored family on the tensor product of dual modules (Delta^op side):
// abar_j^1 = E_j / omega_j K_{j+1}...K_n, etc.
CliffordFamily mirrored_clifford_family(const std::vector<ExtChar>& xs);

// theta_j = gamma_j - gamma_{j+1} with gamma_j = alpha_j (x) 1 + DeltaK (x) abar_j
// on the interleaved doubled space (V_1 (x) V_1^*) (x) ... (dimension 4^n).
// alpha/beta here store gamma/theta.
CliffordFamily doubled_theta(const std::vector<ExtChar>& xs);

}  // namespace holotor
