#pragma once

#include "holotor/braiding.hpp"
#include "holotor/linkspec.hpp"

namespace holotor {

// Right partial quantum trace over the last tensor factor: contract f (square
// on the product of factor_dims) with the pivot image on that factor,
// ptr(f)[b,a] = sum_{j,k} f[(b,k),(a,j)] pivot[j,k].
Matrix ptr_right(const Matrix& f, const std::vector<std::size_t>& factor_dims,
                 const Matrix& pivot);

// Modified trace on tensor products of simple modules (pivot K^-1 per factor):
// iterate ptr_right down to the first factor, assert the residue is scalar,
// multiply by the renormalized dimension 1/(mu_1 - 1/mu_1).
cplx mtrace_C(const Matrix& f, const std::vector<ExtChar>& xs);

// Same on the doubled category (factors V [x] V*, pivot K^-1 [x] K).
// Renormalized dimension 1/omega_1^2, with a sign flip when the right leg of
// the first factor carries the opposite fractional eigenvalue (mu_right).
cplx mtrace_D(const Matrix& f, const std::vector<ExtChar>& xs,
              const std::vector<cplx>& mu_right = {});

// Modified trace via the trace-tuple lift through P0 (x) V_1: solve
// (pi (x) id) tau = id for an equivariant tau, right-trace tau f down to P0,
// and read off the coefficient along the socle vector z (normalized so the
// identity evaluates to the renormalized dimension).
cplx mtrace_via_trace_tuple(const Matrix& f, const std::vector<ExtChar>& xs);

// Supertrace of the exterior-algebra action of A, as the alternating sum of
// principal minors.  Test oracle only; equals det(1 - A).
cplx str_exterior_oracle(const Matrix& A);

// A link prepared for evaluation: gauge applied, stabilized, colors
// factorized and extended with per-component fractional eigenvalues.
struct PreparedLink {
    BraidWord word;
    std::vector<SL2Elem> colors;
    std::vector<ExtChar> xs;
    std::vector<cplx> component_mu;  // per component, component order
    int stabilizations = 0;
    bool gauged = false;
};

PreparedLink prepare_link(const LinkSpec& link);

// Value reported as modulus plus phase class modulo pi/2 (the <i> ambiguity
// of the det-normalized braidings).
struct PhasedValue {
    double modulus = 0.0;
    double phase = 0.0;  // representative in [0, pi/2)
};

struct InvariantReport {
    cplx torsion{0.0};
    cplx T{0.0};
    PhasedValue F, Fbar, K;
    bool has_torsion = false, has_T = false, has_F = false, has_K = false;
    double residual = 0.0;  // worst scalar-residue deviation seen
    int stabilizations = 0;
    bool gauged = false;
    std::vector<cplx> mu;  // per component, as evaluated
};

// which: bitmask-free selection by name: "torsion", "T", "F", "K", "all".
InvariantReport compute_invariants(const LinkSpec& link, const std::string& which = "all");

cplx invariant_T(const LinkSpec& link);
cplx invariant_torsion(const LinkSpec& link);
PhasedValue invariant_F(const LinkSpec& link);
PhasedValue invariant_K(const LinkSpec& link);

struct TheoremReport {
    int trials = 0;
    double max_rel_deviation = 0.0;  // of |T| vs |tau|
    bool signs_consistent = true;    // T/tau = +-1 within tolerance each trial
};

// Re-evaluates T and tau over random gauges and mu sign choices.
TheoremReport verify_theorem(const LinkSpec& link, int trials, unsigned long seed);

}  // namespace holotor
