#include "holotor/invariants.hpp"

#include "holotor/burau.hpp"

#include <cmath>
#include <future>
#include <numbers>

namespace holotor {

namespace {

// Generalized right partial trace for g : A (x) W -> B (x) W over the common
// last factor of dimension d, with pivot image phi on W:
// out[b, a] = sum_{j,k} g[b d + k, a d + j] phi[j, k].
Matrix ptr_last(const Matrix& g, std::size_t d, const Matrix& phi) {
    if (g.rows() % d != 0 || g.cols() % d != 0) throw dim_error("ptr: factor dim mismatch");
    const std::size_t R = g.rows() / d, C = g.cols() / d;
    Matrix out(R, C);
    for (std::size_t b = 0; b < R; ++b)
        for (std::size_t a = 0; a < C; ++a) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) s += g(b * d + k, a * d + j) * phi(j, k);
            out(b, a) = s;
        }
    return out;
}

// Asserts m = lambda I and returns lambda.
cplx scalar_residue(const Matrix& m, const char* what) {
    const cplx lambda = m.trace() / cplx(static_cast<double>(m.rows()));
    const double dev = max_abs_diff(m, Matrix::identity(m.rows()) * lambda);
    if (dev > 1e-7 * (1.0 + frobenius(m)))
        throw math_error(std::string(what) +
                         ": trace not scalar - first factor not simple or map not equivariant");
    return lambda;
}

Matrix doubled_pivot(const ExtChar& x) {
    const Rep r = simple_module(x);
    return kron(r.Kinv(), dual_module(r).K);  // K^-1 on the left leg, K on the dual leg
}

}  // namespace

Matrix ptr_right(const Matrix& f, const std::vector<std::size_t>& factor_dims,
                 const Matrix& pivot) {
    if (factor_dims.empty()) throw dim_error("ptr_right: no factors");
    std::size_t total = 1;
    for (std::size_t d : factor_dims) total *= d;
    if (f.rows() != total || f.cols() != total) throw dim_error("ptr_right: shape mismatch");
    return ptr_last(f, factor_dims.back(), pivot);
}

cplx mtrace_C(const Matrix& f, const std::vector<ExtChar>& xs) {
    if (xs.empty()) throw dim_error("mtrace_C: no factors");
    Matrix cur = f;
    for (std::size_t i = xs.size(); i-- > 1;) {
        if (cur.rows() % 2 != 0) throw dim_error("mtrace_C: shape mismatch");
        cur = ptr_last(cur, 2, simple_module(xs[i]).Kinv());
    }
    if (cur.rows() != 2) throw dim_error("mtrace_C: shape mismatch");
    return scalar_residue(cur, "mtrace_C") / xs[0].omega();
}

cplx mtrace_D(const Matrix& f, const std::vector<ExtChar>& xs, const std::vector<cplx>& mu_right) {
    if (xs.empty()) throw dim_error("mtrace_D: no factors");
    Matrix cur = f;
    for (std::size_t i = xs.size(); i-- > 1;) {
        if (cur.rows() % 4 != 0) throw dim_error("mtrace_D: shape mismatch");
        cur = ptr_last(cur, 4, doubled_pivot(xs[i]));
    }
    if (cur.rows() != 4) throw dim_error("mtrace_D: shape mismatch");
    const cplx lambda = scalar_residue(cur, "mtrace_D");
    const cplx wl = xs[0].omega();
    const cplx mr = mu_right.empty() ? xs[0].mu : mu_right[0];
    const cplx wr = mr - 1.0 / mr;
    return lambda / (wl * wr);
}

cplx mtrace_via_trace_tuple(const Matrix& f, const std::vector<ExtChar>& xs) {
    if (xs.empty()) throw dim_error("mtrace: no factors");
    const std::size_t n = xs.size();
    const Rep v1 = simple_module(xs[0]);
    const Rep pv = tensor_rep({p0_module(), v1});
    // Solve for the equivariant lift tau : V1 -> P0 (x) V1 with
    // (pi (x) id) tau = id, pi the projection onto the x-line of P0.
    const Rep us[3] = {v1, v1, v1};
    const Matrix* small[3] = {&v1.K, &v1.E, &v1.F};
    const Matrix* big[3] = {&pv.K, &pv.E, &pv.F};
    (void)us;
    Matrix A(3 * 16 + 4, 16), b(3 * 16 + 4, 1);
    for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t p = 0; p < 8; ++p)
            for (std::size_t q = 0; q < 2; ++q) {
                const std::size_t row = e * 16 + p * 2 + q;
                for (std::size_t s = 0; s < 2; ++s) A(row, p * 2 + s) += (*small[e])(s, q);
                for (std::size_t r = 0; r < 8; ++r) A(row, r * 2 + q) -= (*big[e])(p, r);
            }
    // normalization: rows of tau in the x-block equal the identity
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
            A(48 + 2 * j + k, j * 2 + k) = 1.0;
            b(48 + 2 * j + k, 0) = (j == k) ? 1.0 : 0.0;
        }
    const Matrix sol = lstsq(A, b);  // lift space may be >1-dim; any solution works
    Matrix tau(8, 2);
    for (std::size_t k = 0; k < 16; ++k) tau(k / 2, k % 2) = sol(k, 0);
    if (max_abs_diff(A * sol, b) > 1e-8 * (1.0 + frobenius(tau)))
        throw math_error("trace tuple: lift solve failed");

    std::size_t rest = 1;
    for (std::size_t i = 1; i < n; ++i) rest *= 2;
    Matrix g = kron(tau, Matrix::identity(rest)) * f;  // V1 (x) W -> P0 (x) V1 (x) W
    for (std::size_t i = n; i-- > 0;) g = ptr_last(g, 2, simple_module(xs[i]).Kinv());
    // g is now a vector 1 -> P0; it must lie on the socle line z (index 3)
    if (g.rows() != 4 || g.cols() != 1) throw dim_error("trace tuple: shape mismatch");
    const cplx beta = g(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(g(i, 0)) > 1e-7 * (1.0 + std::abs(beta)))
            throw math_error("trace tuple: residue not on the socle line");
    // Socle basis calibrated so the identity on a simple module evaluates to
    // 1/omega: tr^r of any normalized lift is (1/2 omega) z.
    return beta * 2.0;
}

cplx str_exterior_oracle(const Matrix& A) {
    const std::size_t N = A.rows();
    if (A.cols() != N) throw dim_error("str_exterior_oracle: square matrix required");
    if (N > 12) throw dim_error("str_exterior_oracle: N too large");
    cplx total = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << N); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < N; ++i)
            if (mask & (std::size_t{1} << i)) idx.push_back(i);
        Matrix sub(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = A(idx[r], idx[c]);
        total += (idx.size() % 2 == 0 ? 1.0 : -1.0) * det(sub);
    }
    return total;
}

PreparedLink prepare_link(const LinkSpec& link) {
    BraidWord w = link.braid();
    std::vector<SL2Elem> colors = link.sl2_colors();
    if (static_cast<int>(colors.size()) != w.strands)
        throw dim_error("link: colors length != strands");
    const double tol = link.tol;

    const auto evolved = act_colors_sl2(w, colors);
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (max_abs_diff(evolved[i].m, colors[i].m) > std::max(1e-6, tol))
            throw math_error("closure violation: colors not fixed by the braid word");
    for (const auto& g : colors)
        if (std::abs(g.tr() - cplx(2.0)) <= std::max(1e-9, tol))
            throw math_error("singular meridian");

    PreparedLink out;
    out.stabilizations = 0;
    if (std::abs(total_holonomy(colors).tr() - cplx(2.0)) <= std::max(1e-9, tol)) {
        if (!link.stabilize_auto) throw math_error("singular total holonomy (stabilize off)");
        auto st = stabilize_nonsingular(w, colors, tol);
        w = st.word;
        colors = st.colors;
        out.stabilizations = st.stabilizations;
    }

    const auto comps = closure_components(w);
    std::vector<int> comp_of(static_cast<std::size_t>(w.strands), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int s : comps[c]) comp_of[static_cast<std::size_t>(s - 1)] = static_cast<int>(c);
    if (!link.mu.empty() && link.mu.size() != comps.size())
        throw dim_error("link: mu length != number of components");

    std::string last_error = "inadmissible coloring";
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (attempt > 0 && !link.gauge_auto)
            throw math_error("inadmissible coloring (gauge search disabled): " + last_error);
        std::vector<SL2Elem> gc = colors;
        if (attempt > 0)
            gc = gauge_transform(colors, random_sl2(link.seed * 1000003UL +
                                                    static_cast<unsigned long>(attempt)));
        try {
            const auto star = factorize_tuple(gc, 1e-12);
            std::vector<cplx> cmu(comps.size());
            for (std::size_t c = 0; c < comps.size(); ++c) {
                const std::size_t lead = static_cast<std::size_t>(comps[c][0] - 1);
                cmu[c] = link.mu.empty() ? default_mu(star[lead]) : link.mu[c];
            }
            std::vector<ExtChar> xs;
            for (std::size_t i = 0; i < star.size(); ++i)
                xs.emplace_back(star[i], cmu[comp_of[i]]);
            act_colors_star(w, xs);  // whole word must stay admissible
            out.word = w;
            out.colors = gc;
            out.xs = xs;
            out.component_mu = cmu;
            out.gauged = attempt > 0;
            return out;
        } catch (const math_error& e) {
            last_error = e.what();
            continue;
        }
    }
    throw math_error("inadmissible after bounded gauge search: " + last_error);
}

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 2.0;

PhasedValue phased(const cplx& v) {
    double ph = std::fmod(std::arg(v), kQuarterTurn);
    if (ph < 0) ph += kQuarterTurn;
    return {std::abs(v), ph};
}

}  // namespace

InvariantReport compute_invariants(const LinkSpec& link, const std::string& which) {
    const bool all = which == "all";
    InvariantReport rep;
    const PreparedLink p = prepare_link(link);
    rep.stabilizations = p.stabilizations;
    rep.gauged = p.gauged;
    rep.mu = p.component_mu;
    if (all || which == "torsion") {
        rep.torsion = torsion(p.word, p.colors, /*auto_stabilize=*/true, link.tol).value;
        rep.has_torsion = true;
    }
    if (all || which == "T" || which == "K") {
        rep.T = mtrace_D(functor_T(p.word, p.xs), p.xs);
        rep.has_T = true;
    }
    if (all || which == "F" || which == "K") {
        rep.F = phased(mtrace_C(functor_F(p.word, p.xs), p.xs));
        // mirror trace: dual factors, pivot K on the dual leg
        {
            Matrix cur = functor_Fbar(p.word, p.xs);
            for (std::size_t i = p.xs.size(); i-- > 1;)
                cur = ptr_last(cur, 2, dual_module(simple_module(p.xs[i])).K);
            rep.Fbar = phased(scalar_residue(cur, "mtrace_Cbar") / p.xs[0].omega());
        }
        rep.has_F = true;
    }
    if (all || which == "K") {
        const double denom = rep.F.modulus * rep.Fbar.modulus;
        if (denom < 1e-300) throw math_error("K undefined: F vanishes");
        rep.K.modulus = std::abs(rep.T) / denom;
        double ph = std::fmod(std::arg(rep.T) - rep.F.phase - rep.Fbar.phase, kQuarterTurn);
        if (ph < 0) ph += kQuarterTurn;
        rep.K.phase = ph;
        rep.has_K = true;
    }
    return rep;
}

cplx invariant_T(const LinkSpec& link) { return compute_invariants(link, "T").T; }
cplx invariant_torsion(const LinkSpec& link) { return compute_invariants(link, "torsion").torsion; }
PhasedValue invariant_F(const LinkSpec& link) { return compute_invariants(link, "F").F; }
PhasedValue invariant_K(const LinkSpec& link) { return compute_invariants(link, "K").K; }

TheoremReport verify_theorem(const LinkSpec& link, int trials, unsigned long seed) {
    TheoremReport rep;
    rep.trials = trials;
    const PreparedLink base = prepare_link(link);
    const std::size_t ncomp = base.component_mu.size();
    auto one_trial = [&](int t) -> std::pair<double, bool> {
        LinkSpec v = link;
        v.colors = gauge_transform(link.sl2_colors(), random_sl2(seed + 7919UL * static_cast<unsigned long>(t) + 1));
        v.star_colors.clear();
        v.seed = seed + static_cast<unsigned long>(t);
        v.mu.clear();
        for (std::size_t c = 0; c < ncomp; ++c) {
            const cplx m = base.component_mu[c];
            v.mu.push_back((t >> c) & 1 ? -m : m);
        }
        const cplx T = invariant_T(v);
        const cplx tau = invariant_torsion(v);
        const double rel = std::abs(std::abs(T) - std::abs(tau)) / std::abs(tau);
        const cplx ratio = T / tau;
        const bool sign_ok = std::min(std::abs(ratio - cplx(1.0)), std::abs(ratio + cplx(1.0))) <
                             1e-5 * (1.0 + std::abs(ratio));
        return {rel, sign_ok};
    };
    std::vector<std::future<std::pair<double, bool>>> futs;
    for (int t = 0; t < trials; ++t)
        futs.push_back(std::async(std::launch::async, one_trial, t));
    for (auto& f : futs) {
        auto [rel, ok] = f.get();
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, rel);
        rep.signs_consistent = rep.signs_consistent && ok;
    }
    return rep;
}

}  // namespace holotor
