#include "holotor/uqi.hpp"

#include <cmath>

namespace holotor {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kDegenerate = 1e-10;  // threshold for the semicyclic cases

Matrix factorwise(const std::vector<Matrix>& factors) {
    Matrix r = Matrix::identity(1);
    for (const auto& f : factors) r = kron(r, f);
    return r;
}

}  // namespace

double Rep::relation_residual() const {
    const Matrix ki = Kinv();
    double res = 0.0;
    res = std::max(res, max_abs_diff(K * E, -(E * K)));
    res = std::max(res, max_abs_diff(K * F, -(F * K)));
    res = std::max(res, max_abs_diff(E * F - F * E, (K - ki) * cplx(0.0, 2.0)));
    return res;
}

cplx sqrt_kappa(const StarChar& chi) {
    cplx r = std::sqrt(chi.kappa);
    // principal branch: argument in (-pi/2, pi/2]
    if (r.real() < 0 || (r.real() == 0 && r.imag() < 0)) r = -r;
    return r;
}

Rep simple_module(const ExtChar& x) {
    if (!x.nonsingular()) throw math_error("no simple module (singular character)");
    const StarChar& chi = x.chi;
    const cplx w = x.omega();
    const double scale = 1.0 + std::abs(chi.kappa);
    Rep r;
    r.dim = 2;
    r.K = Matrix(2, 2);
    r.E = Matrix(2, 2);
    r.F = Matrix(2, 2);
    const cplx alpha = sqrt_kappa(chi);
    if (std::abs(chi.epsilon) > kDegenerate * scale && std::abs(chi.phi) > kDegenerate * scale) {
        // cyclic case
        r.K(0, 0) = alpha;
        r.K(1, 1) = -alpha;
        r.E(0, 1) = chi.epsilon;
        r.E(1, 0) = 1.0;
        r.F(0, 1) = -I * (w + alpha - 1.0 / alpha);
        r.F(1, 0) = -I * (w - alpha + 1.0 / alpha) / chi.epsilon;
    } else if (std::abs(chi.phi) <= kDegenerate * scale) {
        // semicyclic, F nilpotent: K eigenvalue nu with nu - 1/nu = omega
        const cplx nu = std::abs((alpha - 1.0 / alpha) - w) <= std::abs((-alpha + 1.0 / alpha) - w)
                            ? alpha
                            : -alpha;
        r.K(0, 0) = nu;
        r.K(1, 1) = -nu;
        r.E(0, 1) = chi.epsilon;
        r.E(1, 0) = 1.0;
        r.F(0, 1) = -2.0 * I * w;
    } else {
        // semicyclic, E nilpotent: K eigenvalue nu with nu - 1/nu = -omega
        const cplx nu = std::abs((alpha - 1.0 / alpha) + w) <= std::abs((-alpha + 1.0 / alpha) + w)
                            ? alpha
                            : -alpha;
        r.K(0, 0) = nu;
        r.K(1, 1) = -nu;
        r.E(0, 1) = -2.0 * I * w;
        r.F(0, 1) = chi.phi / chi.kappa;
        r.F(1, 0) = 1.0;
    }
    return r;
}

Rep dual_module(const Rep& r) {
    Rep d;
    d.dim = r.dim;
    const Matrix ki = r.Kinv();
    d.K = ki.transpose();
    d.E = (-(r.E * ki)).transpose();
    d.F = (-(r.K * r.F)).transpose();
    return d;
}

Rep tensor_rep(const std::vector<Rep>& reps, Coproduct variant) {
    const std::size_t n = reps.size();
    Rep t;
    std::vector<Matrix> ks;
    t.dim = 1;
    for (const auto& r : reps) {
        ks.push_back(r.K);
        t.dim *= r.dim;
    }
    t.K = factorwise(ks);
    t.E = Matrix::zero(t.dim, t.dim);
    t.F = Matrix::zero(t.dim, t.dim);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Matrix> fe, ff;
        for (std::size_t s = 0; s < n; ++s) {
            if (s == j) {
                fe.push_back(reps[s].E);
                ff.push_back(reps[s].F);
            } else if (variant == Coproduct::Delta) {
                // Delta E = 1 (x) E + E (x) K; Delta F = K^{-1} (x) F + F (x) 1
                fe.push_back(s < j ? Matrix::identity(reps[s].dim) : reps[s].K);
                ff.push_back(s < j ? reps[s].Kinv() : Matrix::identity(reps[s].dim));
            } else {
                fe.push_back(s < j ? reps[s].K : Matrix::identity(reps[s].dim));
                ff.push_back(s < j ? Matrix::identity(reps[s].dim) : reps[s].Kinv());
            }
        }
        t.E = t.E + factorwise(fe);
        t.F = t.F + factorwise(ff);
    }
    return t;
}

Rep p0_module() {
    Rep r;
    r.dim = 4;
    r.K = Matrix(4, 4);
    r.E = Matrix(4, 4);
    r.F = Matrix(4, 4);
    r.K(0, 0) = 1.0;
    r.K(1, 1) = -1.0;
    r.K(2, 2) = -1.0;
    r.K(3, 3) = 1.0;
    r.E(1, 0) = 1.0;  // x -> y1
    r.E(3, 2) = 1.0;  // y2 -> z
    r.F(2, 0) = -I;   // x -> -i y2
    r.F(3, 1) = -I;   // y1 -> -i z
    return r;
}

Rep parity_module() {
    Rep r;
    r.dim = 1;
    r.K = Matrix(1, 1);
    r.E = Matrix(1, 1);
    r.F = Matrix(1, 1);
    r.K(0, 0) = -1.0;
    return r;
}

Rep p1_module() { return tensor_rep({parity_module(), p0_module()}); }

Matrix p0_iso(const ExtChar& x) {
    const Rep v = simple_module(x);
    const Rep vvdual = tensor_rep({v, dual_module(v)});
    const Rep p0 = p0_module();
    const cplx w = x.omega();
    const cplx alpha = sqrt_kappa(x.chi);
    const cplx eps = x.chi.epsilon;
    const double scale = 1.0 + std::abs(x.chi.kappa);
    if (std::abs(eps) > kDegenerate * scale) {
        // explicit solution, columns f(x), f(y1), f(y2), f(z) in basis |j><k|
        Matrix f(4, 4);
        f(0, 0) = 1.0;
        f(3, 0) = -1.0;
        f(1, 1) = 2.0 * eps / alpha;
        f(2, 1) = 2.0 / alpha;
        f(1, 2) = -2.0 * (w + alpha - 1.0 / alpha);
        f(2, 2) = 2.0 * (w - alpha + 1.0 / alpha) / eps;
        f(0, 3) = 4.0 * w / alpha;
        f(3, 3) = 4.0 * w / alpha;
        return f;
    }
    // epsilon = 0: solve the intertwiner system f pi_{P0}(u) = pi_{VV*}(u) f.
    // Hom(P0, V (x) V*) is 2-dimensional; pick an invertible element.
    Matrix sys(3 * 16, 16);
    const Matrix us_p0[3] = {p0.K, p0.E, p0.F};
    const Matrix us_vv[3] = {vvdual.K, vvdual.E, vvdual.F};
    for (int u = 0; u < 3; ++u)
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = 0; q < 4; ++q) {
                const std::size_t row = static_cast<std::size_t>(u) * 16 + p * 4 + q;
                for (std::size_t r = 0; r < 4; ++r) {
                    sys(row, p * 4 + r) += us_p0[u](r, q);
                    sys(row, r * 4 + q) -= us_vv[u](p, r);
                }
            }
    const auto ns = nullspace(sys, 1e-9);
    if (ns.basis.empty()) throw math_error("p0_iso: no intertwiner found");
    Matrix best;
    double best_det = -1.0;
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
        const double d = std::abs(det(f));
        if (d > best_det) {
            best_det = d;
            best = f;
        }
    }
    if (best_det < 1e-8) throw math_error("p0_iso: intertwiner space contains no isomorphism");
    return best;
}

CliffordFamily clifford_family(const std::vector<ExtChar>& xs) {
    const std::size_t n = xs.size();
    std::vector<Rep> reps;
    for (const auto& x : xs) reps.push_back(simple_module(x));
    CliffordFamily fam;
    fam.n = static_cast<int>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx winv = 1.0 / xs[j].omega();
        std::array<Matrix, 2> a;
        for (int nu = 0; nu < 2; ++nu) {
            std::vector<Matrix> fs;
            for (std::size_t s = 0; s < n; ++s) {
                if (s < j)
                    fs.push_back(reps[s].K);
                else if (s == j)
                    fs.push_back((nu == 0 ? -reps[s].E : reps[s].Ftilde()) * winv);
                else
                    fs.push_back(Matrix::identity(reps[s].dim));
            }
            a[static_cast<std::size_t>(nu)] = factorwise(fs);
        }
        fam.alpha.push_back(std::move(a));
    }
    for (std::size_t j = 0; j + 1 < n; ++j)
        fam.beta.push_back({fam.alpha[j][0] - fam.alpha[j + 1][0],
                            fam.alpha[j][1] - fam.alpha[j + 1][1]});
    return fam;
}

CliffordFamily mirrored_clifford_family(const std::vector<ExtChar>& xs) {
    const std::size_t n = xs.size();
    std::vector<Rep> duals;
    for (const auto& x : xs) duals.push_back(dual_module(simple_module(x)));
    CliffordFamily fam;
    fam.n = static_cast<int>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx winv = 1.0 / xs[j].omega();
        std::array<Matrix, 2> a;
        for (int nu = 0; nu < 2; ++nu) {
            std::vector<Matrix> fs;
            for (std::size_t s = 0; s < n; ++s) {
                if (s < j)
                    fs.push_back(Matrix::identity(duals[s].dim));
                else if (s == j)
                    fs.push_back((nu == 0 ? -duals[s].E : duals[s].Ftilde()) * winv);
                else
                    fs.push_back(duals[s].K);
            }
            a[static_cast<std::size_t>(nu)] = factorwise(fs);
        }
        fam.alpha.push_back(std::move(a));
    }
    for (std::size_t j = 0; j + 1 < n; ++j)
        fam.beta.push_back({fam.alpha[j][0] - fam.alpha[j + 1][0],
                            fam.alpha[j][1] - fam.alpha[j + 1][1]});
    return fam;
}

CliffordFamily doubled_theta(const std::vector<ExtChar>& xs) {
    const std::size_t n = xs.size();
    std::vector<Rep> reps, duals;
    for (const auto& x : xs) {
        reps.push_back(simple_module(x));
        duals.push_back(dual_module(reps.back()));
    }
    CliffordFamily fam;
    fam.n = static_cast<int>(n);
    const Matrix I2 = Matrix::identity(2), I4 = Matrix::identity(4);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx winv = 1.0 / xs[j].omega();
        std::array<Matrix, 2> g;
        for (int nu = 0; nu < 2; ++nu) {
            std::vector<Matrix> t1, t2;  // alpha_j (x) 1  and  DeltaK (x) abar_j
            for (std::size_t s = 0; s < n; ++s) {
                const Matrix gen = (nu == 0 ? -reps[s].E : reps[s].Ftilde()) * winv;
                const Matrix dgen = (nu == 0 ? -duals[s].E : duals[s].Ftilde()) * winv;
                if (s < j) {
                    t1.push_back(kron(reps[s].K, I2));
                    t2.push_back(kron(reps[s].K, I2));
                } else if (s == j) {
                    t1.push_back(kron(gen, I2));
                    t2.push_back(kron(reps[s].K, dgen));
                } else {
                    t1.push_back(I4);
                    t2.push_back(kron(reps[s].K, duals[s].K));
                }
            }
            g[static_cast<std::size_t>(nu)] = factorwise(t1) + factorwise(t2);
        }
        fam.alpha.push_back(std::move(g));
    }
    for (std::size_t j = 0; j + 1 < n; ++j)
        fam.beta.push_back({fam.alpha[j][0] - fam.alpha[j + 1][0],
                            fam.alpha[j][1] - fam.alpha[j + 1][1]});
    return fam;
}

}  // namespace holotor
