#include "doctest.h"
#include "testsupport.hpp"

using namespace holotor;

namespace {

constexpr cplx I{0.0, 1.0};

double offdiag_max(const Matrix& m) {
    double o = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) o = std::max(o, std::abs(m(i, j)));
    return o;
}

// checks m == s * identity
void check_scalar(const Matrix& m, cplx s, double tol = 1e-10) {
    CHECK(offdiag_max(m) < tol);
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(std::abs(m(i, i) - s) < tol);
}

Matrix anti(const Matrix& a, const Matrix& b) { return a * b + b * a; }
Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("sqrt_kappa principal branch") {
    CHECK(std::abs(sqrt_kappa(StarChar(4, 0, 0)) - cplx(2.0)) < 1e-14);
    CHECK(std::abs(sqrt_kappa(StarChar(-4, 0, 0)) - cplx(0.0, 2.0)) < 1e-14);
    CHECK(std::abs(sqrt_kappa(StarChar(cplx(0, 1), 0, 0)) -
                   std::polar(1.0, 3.14159265358979 / 4)) < 1e-10);
}

TEST_CASE("simple module golden cases") {
    // phi = 0, epsilon = 1: F = [[0, -2i omega],[0,0]], K = diag(mu, -mu)
    const StarChar chi(4, 1, 0);
    const ExtChar x(chi, 2.0);
    auto r = simple_module(x);
    CHECK(std::abs(r.K(0, 0) - cplx(2.0)) < 1e-12);
    CHECK(std::abs(r.K(1, 1) + cplx(2.0)) < 1e-12);
    CHECK(std::abs(r.F(0, 1) - cplx(0.0, -3.0)) < 1e-12);
    CHECK(std::abs(r.F(0, 0)) + std::abs(r.F(1, 0)) + std::abs(r.F(1, 1)) < 1e-14);
    CHECK(r.relation_residual() < 1e-12);

    // kappa=4, epsilon=phi=0, mu=2: K = diag(2,-2), Casimir 1.5 I
    auto r2 = simple_module(ExtChar(StarChar(4, 0, 0), 2.0));
    CHECK(std::abs(r2.K(0, 0) - cplx(2.0)) < 1e-12);
    check_scalar(r2.Omega(), 1.5, 1e-12);

    // singular character rejected
    CHECK_THROWS_AS(simple_module(ExtChar(StarChar(1, 0, 0), 1.0)), math_error);
}

TEST_CASE("simple module relations, Casimir, central characters") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 50; ++t) {
        const ExtChar x = rand_ext(rng);
        auto r = simple_module(x);
        CHECK(r.relation_residual() < 1e-10);
        check_scalar(r.Omega(), x.omega(), 1e-9);
        check_scalar(r.K * r.K, x.chi.kappa, 1e-9);
        check_scalar(r.E * r.E, x.chi.epsilon, 1e-9);
        check_scalar(r.F * r.F, x.chi.phi / x.chi.kappa, 1e-9);
    }
    // degenerate branches
    for (const StarChar& chi :
         {StarChar(4, 0, 2), StarChar(4, 2, 0), StarChar(cplx(2, 1), 0, 0)}) {
        const ExtChar x(chi, default_mu(chi));
        auto r = simple_module(x);
        CHECK(r.relation_residual() < 1e-10);
        check_scalar(r.Omega(), x.omega(), 1e-9);
        check_scalar(r.K * r.K, chi.kappa, 1e-9);
        check_scalar(r.E * r.E, chi.epsilon, 1e-9);
        check_scalar(r.F * r.F, chi.phi / chi.kappa, 1e-9);
    }
}

TEST_CASE("dual module") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 20; ++t) {
        const ExtChar x = rand_ext(rng);
        auto r = simple_module(x);
        auto d = dual_module(r);
        CHECK(d.relation_residual() < 1e-9);
        // dual has the inverse central character
        const StarChar inv = x.chi.inv();
        check_scalar(d.K * d.K, inv.kappa, 1e-9);
        check_scalar(d.E * d.E, inv.epsilon, 1e-9);
        check_scalar(d.F * d.F, inv.phi / inv.kappa, 1e-9);
        // double dual = conjugation by the pivot K^{-1}
        auto dd = dual_module(d);
        const Matrix p = r.Kinv(), pinv = r.K;
        CHECK(max_abs_diff(dd.K, p * r.K * pinv) < 1e-9);
        CHECK(max_abs_diff(dd.E, p * r.E * pinv) < 1e-9);
        CHECK(max_abs_diff(dd.F, p * r.F * pinv) < 1e-9);
    }
}

TEST_CASE("tensor products and coproducts") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 15; ++t) {
        const ExtChar x1 = rand_ext(rng), x2 = rand_ext(rng);
        auto r1 = simple_module(x1), r2 = simple_module(x2);
        for (auto variant : {Coproduct::Delta, Coproduct::DeltaOp}) {
            auto tr = tensor_rep({r1, r2}, variant);
            CHECK(tr.relation_residual() < 1e-9);
            CHECK(max_abs_diff(tr.K, kron(r1.K, r2.K)) == 0.0);
            const StarChar prod =
                variant == Coproduct::Delta ? x1.chi * x2.chi : x2.chi * x1.chi;
            check_scalar(tr.K * tr.K, prod.kappa, 1e-9);
            check_scalar(tr.E * tr.E, prod.epsilon, 1e-9);
            check_scalar(tr.F * tr.F, prod.phi / prod.kappa, 1e-9);
        }
        // three factors associatively via iterated coproduct
        const ExtChar x3 = rand_ext(rng);
        auto tr3 = tensor_rep({r1, r2, simple_module(x3)});
        CHECK(tr3.relation_residual() < 1e-9);
        const StarChar p3 = x1.chi * x2.chi * x3.chi;
        check_scalar(tr3.E * tr3.E, p3.epsilon, 1e-8);
    }
}

TEST_CASE("Casimir eigenvalue multiplicities on tensor squares") {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 10; ++t) {
        const ExtChar x1 = rand_ext(rng), x2 = rand_ext(rng);
        auto tr = tensor_rep({simple_module(x1), simple_module(x2)});
        const StarChar prod = x1.chi * x2.chi;
        const cplx mu = default_mu(prod);
        const cplx w = mu - 1.0 / mu;
        auto ev = eigenvalues(tr.Omega());
        int plus = 0, minus = 0;
        for (auto l : ev) {
            if (std::abs(l - w) < 1e-7 * (1.0 + std::abs(w))) ++plus;
            if (std::abs(l + w) < 1e-7 * (1.0 + std::abs(w))) ++minus;
        }
        CHECK(plus == 2);
        CHECK(minus == 2);
    }
}

TEST_CASE("projective modules P0, Pi, P1") {
    auto p0 = p0_module();
    CHECK(p0.relation_residual() < 1e-14);
    CHECK(std::abs(p0.K(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(p0.K(1, 1) + cplx(1.0)) < 1e-15);
    auto pi = parity_module();
    CHECK(std::abs(pi.K(0, 0) + cplx(1.0)) < 1e-15);
    CHECK(std::abs(pi.E(0, 0)) + std::abs(pi.F(0, 0)) == 0.0);
    auto p1 = p1_module();
    CHECK(p1.relation_residual() < 1e-14);
    CHECK(max_abs_diff(p1.K, -p0.K) == 0.0);
}

TEST_CASE("P0 isomorphism") {
    std::mt19937_64 rng(55);
    auto check_iso = [](const ExtChar& x) {
        const Matrix f = p0_iso(x);
        auto v = simple_module(x);
        auto vv = tensor_rep({v, dual_module(v)});
        auto p0 = p0_module();
        const Matrix us_p0[3] = {p0.K, p0.E, p0.F};
        const Matrix us_vv[3] = {vv.K, vv.E, vv.F};
        const double scale = 1.0 + frobenius(f);
        for (int u = 0; u < 3; ++u)
            CHECK(max_abs_diff(f * us_p0[u], us_vv[u] * f) < 1e-9 * scale);
        CHECK(std::abs(det(f)) > 1e-8);
        return f;
    };
    for (int t = 0; t < 15; ++t) check_iso(rand_ext(rng));
    // f(z) proportional to |0><0| + |1><1|
    const Matrix f = check_iso(ExtChar(StarChar(4, 1, 0), 2.0));
    CHECK(std::abs(f(0, 3) - f(3, 3)) < 1e-12);
    CHECK(std::abs(f(1, 3)) + std::abs(f(2, 3)) < 1e-12);
    // epsilon = 0 branch goes through the solver
    const StarChar e0(4, 0, 2);
    check_iso(ExtChar(e0, default_mu(e0)));
    const StarChar e00(cplx(2, 1), 0, 0);
    check_iso(ExtChar(e00, default_mu(e00)));
}

TEST_CASE("V(chi,mu) (x) V(chi,-mu)* is P1") {
    std::mt19937_64 rng(56);
    for (int t = 0; t < 5; ++t) {
        const ExtChar x = rand_ext(rng);
        auto v = simple_module(x);
        auto w = simple_module(ExtChar(x.chi, -x.mu));
        auto vv = tensor_rep({v, dual_module(w)});
        auto p1 = p1_module();
        // solve for an invertible intertwiner f: P1 -> V (x) W*
        Matrix sys(3 * 16, 16);
        const Matrix us_p1[3] = {p1.K, p1.E, p1.F};
        const Matrix us_vv[3] = {vv.K, vv.E, vv.F};
        for (int u = 0; u < 3; ++u)
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = 0; q < 4; ++q) {
                    const std::size_t row = static_cast<std::size_t>(u) * 16 + p * 4 + q;
                    for (std::size_t r = 0; r < 4; ++r) {
                        sys(row, p * 4 + r) += us_p1[u](r, q);
                        sys(row, r * 4 + q) -= us_vv[u](p, r);
                    }
                }
        auto ns = nullspace(sys, 1e-8);
        REQUIRE(!ns.basis.empty());
        bool invertible = false;
        std::vector<std::pair<cplx, cplx>> combos = {{1, 0}};
        if (ns.basis.size() >= 2)
            combos.insert(combos.end(), {{0, 1}, {1, 1}, {1, -1}, {1, I}, {1, -I}});
        for (auto [c1, c2] : combos) {
            Matrix f(4, 4);
            for (std::size_t k = 0; k < 16; ++k) {
                cplx val = c1 * ns.basis[0](k, 0);
                if (ns.basis.size() >= 2) val += c2 * ns.basis[1](k, 0);
                f(k / 4, k % 4) = val;
            }
            if (std::abs(det(f)) > 1e-8) invertible = true;
        }
        CHECK(invertible);
    }
}

TEST_CASE("Clifford family anticommutators") {
    std::mt19937_64 rng(57);
    for (int n : {2, 3}) {
        auto xs = rand_tuple(rng, n);
        auto fam = clifford_family(xs);
        std::vector<Rep> reps;
        for (auto& x : xs) reps.push_back(simple_module(x));
        for (int j = 0; j < n; ++j) {
            // {alpha_j^1, alpha_j^2} = 2 K_1^2...K_{j-1}^2 (1 - K_j^2) / omega_j^2
            Matrix rhs = Matrix::identity(1);
            for (int s = 0; s < j; ++s) rhs = kron(rhs, reps[s].K * reps[s].K);
            rhs = kron(rhs, Matrix::identity(2) - reps[j].K * reps[j].K);
            for (int s = j + 1; s < n; ++s) rhs = kron(rhs, Matrix::identity(2));
            const cplx wj = xs[j].omega();
            rhs = rhs * (2.0 / (wj * wj));
            CHECK(max_abs_diff(anti(fam.alpha[j][0], fam.alpha[j][1]), rhs) < 1e-9);
            // diagonal cases: 2 K-string E_j^2 / w^2 and 2 K-string K_j^2 F_j^2 / w^2
            Matrix r11 = Matrix::identity(1), r22 = Matrix::identity(1);
            for (int s = 0; s < j; ++s) {
                r11 = kron(r11, reps[s].K * reps[s].K);
                r22 = kron(r22, reps[s].K * reps[s].K);
            }
            r11 = kron(r11, reps[j].E * reps[j].E);
            r22 = kron(r22, reps[j].K * reps[j].K * reps[j].F * reps[j].F);
            for (int s = j + 1; s < n; ++s) {
                r11 = kron(r11, Matrix::identity(2));
                r22 = kron(r22, Matrix::identity(2));
            }
            CHECK(max_abs_diff(anti(fam.alpha[j][0], fam.alpha[j][0]), r11 * (2.0 / (wj * wj))) <
                  1e-9);
            CHECK(max_abs_diff(anti(fam.alpha[j][1], fam.alpha[j][1]), r22 * (2.0 / (wj * wj))) <
                  1e-9);
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                for (int nu = 0; nu < 2; ++nu)
                    for (int la = 0; la < 2; ++la)
                        CHECK(frobenius(anti(fam.alpha[j][nu], fam.alpha[k][la])) < 1e-9);
            }
        }
    }
}

TEST_CASE("beta supercommutes with the diagonal action") {
    std::mt19937_64 rng(58);
    for (int n : {2, 3}) {
        auto xs = rand_tuple(rng, n);
        auto fam = clifford_family(xs);
        std::vector<Rep> reps;
        for (auto& x : xs) reps.push_back(simple_module(x));
        auto t = tensor_rep(reps);
        const Matrix dO = t.Omega();
        for (auto& b : fam.beta)
            for (int nu = 0; nu < 2; ++nu) {
                CHECK(frobenius(anti(t.K, b[nu])) < 1e-8);
                CHECK(frobenius(comm(t.E, b[nu])) < 1e-8);
                CHECK(frobenius(comm(t.Ftilde(), b[nu])) < 1e-8);
                CHECK(frobenius(anti(dO, b[nu])) < 1e-8);
            }
    }
}

TEST_CASE("mirrored family supercommutes with the op action on duals") {
    std::mt19937_64 rng(59);
    for (int n : {2, 3}) {
        auto xs = rand_tuple(rng, n);
        auto fam = mirrored_clifford_family(xs);
        std::vector<Rep> duals;
        for (auto& x : xs) duals.push_back(dual_module(simple_module(x)));
        auto t = tensor_rep(duals, Coproduct::DeltaOp);
        for (auto& b : fam.beta)
            for (int nu = 0; nu < 2; ++nu) {
                CHECK(frobenius(anti(t.K, b[nu])) < 1e-8);
                CHECK(frobenius(comm(t.E, b[nu])) < 1e-8);
                CHECK(frobenius(comm(t.Ftilde(), b[nu])) < 1e-8);
            }
    }
}

TEST_CASE("doubled theta family") {
    std::mt19937_64 rng(60);
    for (int n : {2, 3}) {
        auto xs = rand_tuple(rng, n);
        auto fam = doubled_theta(xs);
        // gamma anticommutators vanish identically (exterior-algebra degeneration)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int nu = 0; nu < 2; ++nu)
                    for (int la = 0; la < 2; ++la) {
                        if (j == k && nu == la) continue;
                        CHECK(frobenius(anti(fam.alpha[j][nu], fam.alpha[k][la])) < 1e-8);
                    }
        for (int j = 0; j < n; ++j)
            for (int nu = 0; nu < 2; ++nu)
                CHECK(frobenius(fam.alpha[j][nu] * fam.alpha[j][nu]) < 1e-8);
        // gamma^1 v0 and gamma^2 v0 are linearly independent, v0 = (x) (1,0,0,1)
        const std::size_t dim = fam.alpha[0][0].rows();
        Matrix z(4, 1);
        z(0, 0) = 1.0;
        z(3, 0) = 1.0;
        Matrix v0 = Matrix::identity(1);
        for (int s = 0; s < n; ++s) v0 = kron(v0, z);
        for (int k = 0; k < n; ++k) {
            const Matrix w1 = fam.alpha[k][0] * v0, w2 = fam.alpha[k][1] * v0;
            // Gram determinant bounded away from zero after normalization
            cplx g11 = 0, g12 = 0, g22 = 0;
            for (std::size_t idx = 0; idx < dim; ++idx) {
                g11 += std::conj(w1(idx, 0)) * w1(idx, 0);
                g12 += std::conj(w1(idx, 0)) * w2(idx, 0);
                g22 += std::conj(w2(idx, 0)) * w2(idx, 0);
            }
            const double n1 = std::sqrt(std::abs(g11)), n2 = std::sqrt(std::abs(g22));
            CHECK(n1 > 1e-8);
            CHECK(n2 > 1e-8);
            CHECK(std::abs(g12) / (n1 * n2) < 1.0 - 1e-6);
        }
    }
}
