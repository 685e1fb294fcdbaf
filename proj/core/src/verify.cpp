#include "holotor/verify.hpp"

#include <random>

#include "holotor/braiding.hpp"
#include "holotor/burau.hpp"
#include "holotor/invariants.hpp"

namespace holotor {

namespace {

cplx rand_c(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

StarChar rand_star(std::mt19937_64& rng) {
    for (;;) {
        const cplx k = rand_c(rng) * 1.5, e = rand_c(rng), f = rand_c(rng);
        if (std::abs(k) < 0.3 || std::abs(e) < 0.1 || std::abs(f) < 0.1) continue;
        StarChar chi(k, e, f);
        if (std::abs(chi.casimir_sq()) < 0.05) continue;
        return chi;
    }
}

ExtChar rand_ext(std::mt19937_64& rng) {
    const StarChar chi = rand_star(rng);
    return ExtChar(chi, default_mu(chi));
}

// Random color tuple that stays admissible along the given word.
std::vector<ExtChar> rand_tuple_for(std::mt19937_64& rng, const BraidWord& w) {
    for (;;) {
        std::vector<ExtChar> xs;
        for (int i = 0; i < w.strands; ++i) xs.push_back(rand_ext(rng));
        try {
            act_colors_star(w, xs);
            return xs;
        } catch (const math_error&) {
            continue;
        }
    }
}

double star_diff(const StarChar& a, const StarChar& b) {
    return std::max({std::abs(a.kappa - b.kappa), std::abs(a.epsilon - b.epsilon),
                     std::abs(a.phi - b.phi)});
}

// Least-squares expansion residual tracking for the Schur-Weyl suite.
Matrix expand_in(const std::vector<Matrix>& basis, const Matrix& b, double& resid) {
    const std::size_t N = b.rows() * b.cols(), K = basis.size();
    Matrix A(N, K), bb(N, 1);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < N; ++i) A(i, k) = basis[k].data()[i];
    for (std::size_t i = 0; i < N; ++i) bb(i, 0) = b.data()[i];
    const Matrix x = lstsq(A, bb);
    resid = std::max(resid, max_abs_diff(A * x, bb) / (1.0 + frobenius(bb)));
    return x;
}

std::vector<Matrix> beta_basis(const CliffordFamily& fam) {
    std::vector<Matrix> out;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(fam.n); ++j) {
        out.push_back(fam.beta[j][1]);  // beta^2 first, matching the nice basis
        out.push_back(fam.beta[j][0]);
    }
    return out;
}

SuiteResult braid_relations(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + static_cast<int>(rng() % 2);
        const BraidWord lhs(n, {1, 2, 1}), rhs(n, {2, 1, 2});
        const auto xs = rand_tuple_for(rng, lhs);
        std::vector<SL2Elem> colors;
        {
            std::vector<StarChar> star;
            for (const auto& x : xs) star.push_back(x.chi);
            colors = defactorize_tuple(star);
        }
        try {
            const Matrix a = burau_reduced(lhs, colors).m, b = burau_reduced(rhs, colors).m;
            r.max_residual =
                std::max(r.max_residual, max_abs_diff(a, b) / (1.0 + frobenius(a)));
            if (n == 4) {  // far commutation sigma_1 sigma_3 = sigma_3 sigma_1
                const Matrix c = burau_reduced(BraidWord(n, {1, 3}), colors).m;
                const Matrix d = burau_reduced(BraidWord(n, {3, 1}), colors).m;
                r.max_residual =
                    std::max(r.max_residual, max_abs_diff(c, d) / (1.0 + frobenius(c)));
            }
        } catch (const math_error&) {
            --t;  // inadmissible draw for the relation word; resample
            continue;
        }
    }
    r.passed = r.max_residual < 1e-9;
    return r;
}

SuiteResult biquandle_ybe(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const BraidWord w1(3, {1, 2, 1}), w2(3, {2, 1, 2});
        const auto xs = rand_tuple_for(rng, w1);
        std::vector<ExtChar> a;
        try {
            a = act_colors_star(w2, xs);
        } catch (const math_error&) {
            --t;
            continue;
        }
        const auto b = act_colors_star(w1, xs);
        for (int i = 0; i < 3; ++i) {
            r.max_residual = std::max(r.max_residual, star_diff(a[i].chi, b[i].chi));
            r.max_residual = std::max(r.max_residual, std::abs(a[i].mu - b[i].mu));
        }
        // closed-form inverse really inverts
        const auto [c4, c3] = biquandle_B(xs[0].chi, xs[1].chi);
        const auto [i1, i2] = biquandle_B_inv(c4, c3);
        r.max_residual = std::max({r.max_residual, star_diff(i1, xs[0].chi),
                                   star_diff(i2, xs[1].chi)});
    }
    r.passed = r.max_residual < 1e-9;
    return r;
}

SuiteResult schur_weyl(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    const BraidWord w(2, {1});
    for (int t = 0; t < trials; ++t) {
        const auto xs = rand_tuple_for(rng, w);
        const auto tgt = act_colors_star(w, xs);
        const BraidingCell cell = solve_braiding(xs[0], xs[1]);
        const auto src_b = beta_basis(clifford_family(xs));
        const auto tgt_b = beta_basis(clifford_family(tgt));
        const Matrix cinv = inverse(cell.c);
        Matrix M(2, 2);
        for (std::size_t j = 0; j < 2; ++j) {
            const Matrix x = expand_in(tgt_b, cell.c * src_b[j] * cinv, r.max_residual);
            for (std::size_t k = 0; k < 2; ++k) M(j, k) = x(k, 0);
        }
        const Matrix nice = burau_nice(w, xs).m;
        r.max_residual =
            std::max(r.max_residual, max_abs_diff(M, nice) / (1.0 + frobenius(nice)));
    }
    r.passed = r.max_residual < 1e-9;
    return r;
}

SuiteResult clifford(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<ExtChar> xs;
        for (int i = 0; i < n; ++i) xs.push_back(rand_ext(rng));
        const CliffordFamily fam = clifford_family(xs);
        std::vector<Rep> reps;
        for (const auto& x : xs) reps.push_back(simple_module(x));
        auto kstring = [&](int j, const Matrix& mid) {
            Matrix m = Matrix::identity(1);
            for (int s = 0; s < j; ++s) m = kron(m, reps[s].K * reps[s].K);
            m = kron(m, mid);
            for (int s = j + 1; s < n; ++s) m = kron(m, Matrix::identity(2));
            return m;
        };
        auto anti = [](const Matrix& a, const Matrix& b) { return a * b + b * a; };
        auto track = [&](const Matrix& got, const Matrix& want) {
            r.max_residual =
                std::max(r.max_residual, max_abs_diff(got, want) / (1.0 + frobenius(want)));
        };
        const std::size_t D = fam.alpha[0][0].rows();
        Matrix Ktot = Matrix::identity(1);
        for (int s = 0; s < n; ++s) Ktot = kron(Ktot, reps[s].K);
        for (int j = 0; j < n; ++j) {
            const cplx w2 = xs[j].omega() * xs[j].omega();
            const Rep& rj = reps[j];
            track(anti(fam.alpha[j][0], fam.alpha[j][0]), kstring(j, rj.E * rj.E) * (2.0 / w2));
            track(anti(fam.alpha[j][1], fam.alpha[j][1]),
                  kstring(j, rj.K * rj.K * rj.F * rj.F) * (2.0 / w2));
            track(anti(fam.alpha[j][0], fam.alpha[j][1]),
                  kstring(j, Matrix::identity(2) - rj.K * rj.K) * (2.0 / w2));
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                for (int nu = 0; nu < 2; ++nu)
                    for (int la = 0; la < 2; ++la)
                        track(anti(fam.alpha[j][nu], fam.alpha[k][la]), Matrix::zero(D, D));
            }
            // beta generators supercommute with the coproduct K action
            for (int nu = 0; nu < 2; ++nu)
                if (j + 1 < n) track(anti(Ktot, fam.beta[j][nu]), Matrix::zero(D, D));
        }
    }
    r.passed = r.max_residual < 1e-9;
    return r;
}

SuiteResult braiding_residuals(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    const BraidWord w(2, {1});
    double min_gap = 1e300;
    for (int t = 0; t < trials; ++t) {
        const auto xs = rand_tuple_for(rng, w);
        try {
            const BraidingCell c = solve_braiding(xs[0], xs[1]);
            const BraidingCell cb = mirror_braiding(xs[0], xs[1]);
            const DoubledCell d = doubled_braiding(xs[0], xs[1]);
            r.max_residual = std::max({r.max_residual, c.residual, cb.residual, d.residual});
            min_gap = std::min(min_gap, c.gap);
        } catch (const math_error&) {
            --t;
            continue;
        }
    }
    r.passed = r.max_residual < 1e-9 && min_gap > 1e6;
    if (min_gap <= 1e6) r.detail = "nullspace gap too small";
    return r;
}

SuiteResult torsion_theorem(int trials, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    const std::vector<std::pair<int, std::vector<int>>> links = {
        {1, {}}, {2, {1, 1}}, {2, {1, 1, 1}}, {3, {1, -2, 1, -2}}};
    for (int t = 0; t < trials; ++t) {
        const auto& [n, word] = links[static_cast<std::size_t>(t) % links.size()];
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const cplx tv(2.2 + 0.8 * u(rng), 0.6 * u(rng));
        LinkSpec s;
        s.strands = n;
        s.word = word;
        const SL2Elem c = random_sl2(seed + 31 * static_cast<unsigned long>(t));
        const auto comps = closure_components(s.braid());
        std::vector<cplx> tvals(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (int strand : comps[k])
                tvals[static_cast<std::size_t>(strand - 1)] =
                    tv + 0.3 * static_cast<double>(k);
        for (int i = 0; i < n; ++i)
            s.colors.push_back(c * SL2Elem::diag(tvals[static_cast<std::size_t>(i)]) * c.inv());
        s.seed = seed + static_cast<unsigned long>(t);
        try {
            const cplx T = invariant_T(s);
            const cplx tau = invariant_torsion(s);
            const double rel = std::abs(std::abs(T) - std::abs(tau)) / std::abs(tau);
            const cplx ratio = T / tau;
            const double sgn =
                std::min(std::abs(ratio - cplx(1.0)), std::abs(ratio + cplx(1.0)));
            r.max_residual = std::max({r.max_residual, rel, sgn});
        } catch (const math_error&) {
            --t;  // degenerate draw (singular holonomy etc.); resample
            continue;
        }
    }
    r.passed = r.max_residual < 1e-6;
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "braid-relations", "biquandle-ybe",      "schur-weyl",
        "clifford",        "braiding-residuals", "torsion-theorem"};
    return names;
}

SuiteResult run_suite(const std::string& name, int trials, unsigned long seed) {
    SuiteResult r;
    if (name == "braid-relations") r = braid_relations(trials, seed);
    else if (name == "biquandle-ybe") r = biquandle_ybe(trials, seed);
    else if (name == "schur-weyl") r = schur_weyl(trials, seed);
    else if (name == "clifford") r = clifford(trials, seed);
    else if (name == "braiding-residuals") r = braiding_residuals(trials, seed);
    else if (name == "torsion-theorem") r = torsion_theorem(trials, seed);
    else throw dim_error("unknown verification suite: " + name);
    r.suite = name;
    r.trials = trials;
    return r;
}

}  // namespace holotor
