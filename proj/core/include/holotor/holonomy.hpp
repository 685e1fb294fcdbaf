#pragma once

#include <array>
#include <utility>
#include <vector>

#include "holotor/braids.hpp"
#include "holotor/sl2.hpp"

namespace holotor {

// A point of SL2(C)* (equivalently a character of the central subalgebra):
// kappa = chi(K^2), epsilon = chi(E^2), phi/kappa = chi(F^2).
struct StarChar {
    cplx kappa{1.0}, epsilon{0.0}, phi{0.0};

    StarChar() = default;
    StarChar(cplx k, cplx e, cplx p) : kappa(k), epsilon(e), phi(p) {
        if (std::abs(kappa) < 1e-14) throw math_error("degenerate character (kappa = 0)");
    }

    Matrix a_plus() const;   // [[kappa, 0], [phi, 1]]
    Matrix a_minus() const;  // [[1, epsilon], [0, kappa]]

    // Group structure transported from the factorization product.
    StarChar operator*(const StarChar& o) const;
    StarChar inv() const;

    cplx trace_psi() const;     // kappa + (1 - epsilon*phi)/kappa
    cplx casimir_sq() const { return trace_psi() - 2.0; }  // chi(Omega^2)
};

// psi(a) = a^+ (a^-)^{-1} = [[kappa, -epsilon], [phi, (1-epsilon*phi)/kappa]].
SL2Elem psi(const StarChar& a);

// Unique preimage of psi; requires nonzero (1,1) entry.
StarChar factorize(const SL2Elem& h, double tol = 1e-12);

// g_i = (a_1^+ ... a_{i-1}^+) psi(a_i) (a_1^+ ... a_{i-1}^+)^{-1}.
std::vector<SL2Elem> defactorize_tuple(const std::vector<StarChar>& a);

// Inverse of defactorize_tuple via partial products g_i...g_1 = psi(a_1...a_i).
std::vector<StarChar> factorize_tuple(const std::vector<SL2Elem>& g, double tol = 1e-12);

// True iff all partial products g_i...g_1 have |(1,1) entry| > tol.
bool is_admissible(const std::vector<SL2Elem>& g, double tol = 1e-9);

// The set-theoretic Yang-Baxter solution on SL2*: positive-crossing rule
// (a1, a2) -> (a4, a3).  Throws on vanishing denominator.
std::pair<StarChar, StarChar> biquandle_B(const StarChar& a1, const StarChar& a2);

// Closed-form inverse: (a4, a3) -> (a1, a2).
std::pair<StarChar, StarChar> biquandle_B_inv(const StarChar& a4, const StarChar& a3);

// The four solutions mu of (mu - 1/mu)^2 = tr psi(chi) - 2; mu^2 is an
// eigenvalue of psi(chi).
std::array<cplx, 4> fractional_eigenvalues(const StarChar& chi);

// Deterministic branch: |mu| >= 1, Re mu >= 0, ties broken by Im mu >= 0.
cplx default_mu(const StarChar& chi);

// A character chi(K^2)=kappa plus a fractional eigenvalue mu, labelling the
// simple weight module V(chi, mu).
struct ExtChar {
    StarChar chi;
    cplx mu{2.0};

    ExtChar() = default;
    ExtChar(StarChar c, cplx m, double tol = 1e-6);

    cplx omega() const { return mu - 1.0 / mu; }  // Casimir action on V(chi, mu)
    bool nonsingular(double tol = 1e-9) const { return std::abs(omega()) > tol; }
};

// Biquandle action on extended characters along a braid word; mu's travel with
// their strands (transposed at each crossing), negative letters use the
// closed-form inverse.
std::vector<ExtChar> act_colors_star(const BraidWord& word, std::vector<ExtChar> a);

std::vector<SL2Elem> gauge_transform(const std::vector<SL2Elem>& g, const SL2Elem& c);

// Seeded random conjugation search until is_admissible holds with margin
// 10*tol; at most 1000 attempts.
SL2Elem find_admissible_gauge(const std::vector<SL2Elem>& g, unsigned long seed,
                              double tol = 1e-9);

// Deterministic pseudo-random SL2 element (unit determinant), used by the
// gauge search and by test drivers.
SL2Elem random_sl2(unsigned long seed);

}  // namespace holotor
