#include "holotor/invariants.hpp"

#include <doctest.h>

#include "testsupport.hpp"

using namespace holotor;

namespace {

LinkSpec diag_link(int strands, std::vector<int> word, std::vector<cplx> ts) {
    LinkSpec s;
    s.strands = strands;
    s.word = std::move(word);
    for (int i = 0; i < strands; ++i) s.colors.push_back(ht::SL2Elem::diag(ts[i]));
    return s;
}

bool close(cplx a, cplx b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

// f commuting with the diagonal action: polynomial in the coproduct Casimir.
Matrix equivariant_endo(const std::vector<ExtChar>& xs, std::mt19937_64& rng) {
    std::vector<Rep> reps;
    for (const auto& x : xs) reps.push_back(simple_module(x));
    const Matrix Om = tensor_rep(reps).Omega();
    Matrix f = Matrix::identity(Om.rows()) * rand_cplx(rng);
    Matrix pw = Matrix::identity(Om.rows());
    for (int k = 0; k < 3; ++k) {
        pw = pw * Om;
        f = f + pw * rand_cplx(rng);
    }
    return f;
}

}  // namespace

TEST_CASE("partial trace basics") {
    std::mt19937_64 rng(41);
    const ExtChar x = rand_ext(rng);
    const Rep r = simple_module(x);

    // quantum dimension of a simple is zero: ptr of the identity vanishes
    const Matrix p = ptr_right(Matrix::identity(4), {2, 2}, r.Kinv());
    CHECK(frobenius(p) < 1e-12);

    // ptr compatibility: tracing one leg of kron(f, g) scales f by tr(g K^-1)
    Matrix f(2, 2), g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            f(i, j) = rand_cplx(rng);
            g(i, j) = rand_cplx(rng);
        }
    const cplx scale = (g * r.Kinv()).trace();
    CHECK(max_abs_diff(ptr_right(kron(f, g), {2, 2}, r.Kinv()), f * scale) < 1e-12);
}

TEST_CASE("sphericity: left and right quantum traces agree on equivariant maps") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        auto [x1, x2] = rand_crossing(rng);
        const std::vector<ExtChar> xs{x1, x2};
        const Matrix f = equivariant_endo(xs, rng);
        const cplx right = mtrace_C(f, xs);
        // left trace: contract the first factor against the inverse pivot K
        const Rep r1 = simple_module(x1);
        Matrix lt(2, 2);
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t a = 0; a < 2; ++a) {
                cplx s = 0.0;
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k)
                        s += f(k * 2 + b, j * 2 + a) * r1.K(j, k);
                lt(b, a) = s;
            }
        const cplx lam = lt.trace() / 2.0;
        CHECK(max_abs_diff(lt, Matrix::identity(2) * lam) < 1e-7 * (1.0 + frobenius(f)));
        CHECK(close(lam / x2.omega(), right, 1e-7));
    }
}

TEST_CASE("modified trace pins: renormalized dimensions") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const ExtChar x = rand_ext(rng);
        const cplx w = x.omega();
        CHECK(close(mtrace_C(Matrix::identity(2), {x}), 1.0 / w));
        CHECK(close(mtrace_D(Matrix::identity(4), {x}), 1.0 / (w * w)));
        // mixed fractional eigenvalues on the two legs flip the sign
        CHECK(close(mtrace_D(Matrix::identity(4), {x}, {-x.mu}), -1.0 / (w * w)));
    }
    // frozen rational pin: mu = 2 gives omega = 3/2
    const ExtChar two(factorize(SL2Elem::diag(4.0)), 2.0);
    CHECK(close(mtrace_D(Matrix::identity(4), {two}), cplx(4.0 / 9.0)));
}

TEST_CASE("trace tuple agrees with the pivot computation") {
    std::mt19937_64 rng(44);
    int done = 0;
    while (done < 30) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<ExtChar> xs = rand_tuple(rng, n);
        const Matrix f = equivariant_endo(xs, rng);
        cplx a, b;
        try {
            a = mtrace_C(f, xs);
            b = mtrace_via_trace_tuple(f, xs);
        } catch (const math_error&) {
            continue;  // resample degenerate draws
        }
        CHECK(close(b, a, 1e-6));
        ++done;
    }
}

TEST_CASE("modified trace cyclicity") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<ExtChar> xs = rand_tuple(rng, 2);
        const Matrix f = equivariant_endo(xs, rng);
        const Matrix g = equivariant_endo(xs, rng);
        CHECK(close(mtrace_C(f * g, xs), mtrace_C(g * f, xs), 1e-7));
    }
}

TEST_CASE("supertrace oracle equals det(1 - A)") {
    std::mt19937_64 rng(46);
    for (std::size_t N = 2; N <= 6; N += 2) {
        Matrix A(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) A(i, j) = rand_cplx(rng);
        CHECK(close(str_exterior_oracle(A), det(Matrix::identity(N) - A), 1e-10));
    }
    CHECK_THROWS_AS(str_exterior_oracle(Matrix(2, 3)), dim_error);
}

TEST_CASE("golden links: T = -tau") {
    // unknot on one strand, diagonal holonomy t = 4
    {
        const LinkSpec s = diag_link(1, {}, {4.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.torsion, cplx(-4.0 / 9.0)));
        CHECK(close(rep.T, cplx(4.0 / 9.0)));
        CHECK(rep.K.modulus == doctest::Approx(1.0));
    }
    // trefoil sigma_1^3, abelian coloring t = 4
    {
        const LinkSpec s = diag_link(2, {1, 1, 1}, {4.0, 4.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.torsion, cplx(-4225.0 / 900.0)));
        CHECK(close(rep.T, cplx(4225.0 / 900.0)));
    }
    // Hopf link sigma_1^2, distinct diagonal components
    {
        const LinkSpec s = diag_link(2, {1, 1}, {3.0, 5.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, -rep.torsion, 1e-9));
        CHECK(rep.mu.size() == 2);
    }
    // figure-eight knot, abelian coloring with complex eigenvalue
    {
        const LinkSpec s = diag_link(3, {1, -2, 1, -2},
                                     {cplx(2.0, 0.5), cplx(2.0, 0.5), cplx(2.0, 0.5)});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, -rep.torsion, 1e-8));
    }
    // trefoil with an irreducible coloring
    {
        const cplx sv = 1.7;
        Matrix a(2, 2), b(2, 2);
        a(0, 0) = sv;
        a(0, 1) = 1.0;
        a(1, 1) = 1.0 / sv;
        b(0, 0) = sv;
        b(1, 0) = 1.0 - sv * sv - 1.0 / (sv * sv);
        b(1, 1) = 1.0 / sv;
        LinkSpec s;
        s.strands = 2;
        s.word = {1, 1, 1};
        s.colors.emplace_back(std::move(a));
        s.colors.emplace_back(std::move(b));
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, -rep.torsion, 1e-8));
    }
}

TEST_CASE("gauge invariance of all reported invariants") {
    const LinkSpec base = diag_link(2, {1, 1, 1}, {4.0, 4.0});
    const InvariantReport ref = compute_invariants(base);
    for (int k = 0; k < 5; ++k) {
        LinkSpec s = base;
        s.colors = gauge_transform(base.colors, random_sl2(100 + 13 * k));
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.torsion, ref.torsion, 1e-8));
        CHECK(close(rep.T, ref.T, 1e-8));
        CHECK(rep.F.modulus == doctest::Approx(ref.F.modulus).epsilon(1e-7));
        CHECK(rep.K.modulus == doctest::Approx(ref.K.modulus).epsilon(1e-7));
    }
}

TEST_CASE("Markov moves: stabilization and full twists preserve T and tau") {
    const LinkSpec tref = diag_link(2, {1, 1, 1}, {4.0, 4.0});
    const InvariantReport ref = compute_invariants(tref);
    // positive Markov stabilization on a third strand
    {
        const LinkSpec s = diag_link(3, {1, 1, 1, 2}, {4.0, 4.0, 4.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, ref.T, 1e-8));
        CHECK(close(rep.torsion, ref.torsion, 1e-8));
    }
    // negative stabilization
    {
        const LinkSpec s = diag_link(3, {1, 1, 1, -2}, {4.0, 4.0, 4.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, ref.T, 1e-8));
        CHECK(close(rep.torsion, ref.torsion, 1e-8));
    }
    // conjugation (a full cancelling pair around the word)
    {
        const LinkSpec s = diag_link(2, {1, 1, 1, 1, -1}, {4.0, 4.0});
        const InvariantReport rep = compute_invariants(s);
        CHECK(close(rep.T, ref.T, 1e-9));
    }
}

TEST_CASE("theorem verification driver") {
    const LinkSpec tref = diag_link(2, {1, 1, 1}, {4.0, 4.0});
    const TheoremReport rep = verify_theorem(tref, 6, 17);
    CHECK(rep.trials == 6);
    CHECK(rep.max_rel_deviation < 1e-9);
    CHECK(rep.signs_consistent);
}

TEST_CASE("preconditions are reported") {
    // trace-2 meridian
    {
        Matrix a(2, 2);
        a(0, 0) = 1.0;
        a(0, 1) = 1.0;
        a(1, 1) = 1.0;
        LinkSpec s;
        s.strands = 1;
        s.colors.emplace_back(std::move(a));
        CHECK_THROWS_WITH_AS(prepare_link(s), doctest::Contains("singular meridian"), math_error);
    }
    // broken closure: colors not fixed by the word
    {
        const LinkSpec s = diag_link(2, {1, 1, 1}, {3.0, 5.0});
        CHECK_THROWS_WITH_AS(prepare_link(s), doctest::Contains("closure"), math_error);
    }
    // singular total holonomy, stabilization disabled
    {
        LinkSpec s = diag_link(2, {1, 1}, {3.0, 1.0 / 3.0});
        s.stabilize_auto = false;
        CHECK_THROWS_AS(prepare_link(s), math_error);
        s.stabilize_auto = true;  // auto mode fixes it up
        const PreparedLink p = prepare_link(s);
        CHECK(p.stabilizations > 0);
        CHECK(close(invariant_T(s), -invariant_torsion(s), 1e-8));
    }
}
