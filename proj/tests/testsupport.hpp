#pragma once

#include <random>

#include "holotor/burau.hpp"
#include "holotor/holonomy.hpp"
#include "holotor/uqi.hpp"

namespace ht = holotor;

inline ht::cplx rand_cplx(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng)};
}

// Random character with coordinates bounded away from the degenerate loci.
inline ht::StarChar rand_star(std::mt19937_64& rng) {
    for (;;) {
        ht::cplx k = rand_cplx(rng) * 1.5, e = rand_cplx(rng), f = rand_cplx(rng);
        if (std::abs(k) < 0.3 || std::abs(e) < 0.1 || std::abs(f) < 0.1) continue;
        ht::StarChar chi(k, e, f);
        if (std::abs(chi.casimir_sq()) < 0.05) continue;  // nonsingular with margin
        return chi;
    }
}

inline ht::ExtChar rand_ext(std::mt19937_64& rng) {
    const ht::StarChar chi = rand_star(rng);
    return ht::ExtChar(chi, ht::default_mu(chi));
}

// Random admissible nonsingular crossing (chi1, chi2) with the biquandle
// denominator and the localization locus bounded away from zero.
inline std::pair<ht::ExtChar, ht::ExtChar> rand_crossing(std::mt19937_64& rng) {
    for (;;) {
        ht::ExtChar x1 = rand_ext(rng), x2 = rand_ext(rng);
        const ht::cplx den = x1.chi.epsilon * x2.chi.phi + x2.chi.kappa;
        if (std::abs(den) < 0.05) continue;
        const ht::cplx w = 1.0 + x1.chi.phi * x2.chi.epsilon / x2.chi.kappa;
        if (std::abs(w) < 0.05) continue;
        try {
            auto [c4, c3] = ht::biquandle_B(x1.chi, x2.chi);
            if (std::abs(c4.casimir_sq()) < 0.05 || std::abs(c3.casimir_sq()) < 0.05) continue;
        } catch (const ht::math_error&) {
            continue;
        }
        return {x1, x2};
    }
}

// Tuple of random extended characters whose pairwise crossings along simple
// test words stay admissible (resampled on failure by callers as needed).
inline std::vector<ht::ExtChar> rand_tuple(std::mt19937_64& rng, int n) {
    std::vector<ht::ExtChar> xs;
    for (int i = 0; i < n; ++i) xs.push_back(rand_ext(rng));
    return xs;
}

// Colors for common closures: all strands share one conjugated diagonal.
inline std::vector<ht::SL2Elem> conj_diag_colors(int n, ht::cplx t, const ht::SL2Elem& c) {
    std::vector<ht::SL2Elem> g;
    const ht::SL2Elem d = ht::SL2Elem::diag(t);
    for (int i = 0; i < n; ++i) g.push_back(c * d * c.inv());
    return g;
}
