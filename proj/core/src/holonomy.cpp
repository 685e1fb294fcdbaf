#include "holotor/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace holotor {

Matrix StarChar::a_plus() const {
    Matrix m(2, 2);
    m(0, 0) = kappa;
    m(1, 0) = phi;
    m(1, 1) = 1.0;
    return m;
}

Matrix StarChar::a_minus() const {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = epsilon;
    m(1, 1) = kappa;
    return m;
}

StarChar StarChar::operator*(const StarChar& o) const {
    // Transported from (a^+, a^-) componentwise products.
    return StarChar(kappa * o.kappa, epsilon * o.kappa + o.epsilon, o.kappa * phi + o.phi);
}

StarChar StarChar::inv() const {
    return StarChar(1.0 / kappa, -epsilon / kappa, -phi / kappa);
}

cplx StarChar::trace_psi() const { return kappa + (1.0 - epsilon * phi) / kappa; }

SL2Elem psi(const StarChar& a) {
    Matrix m(2, 2);
    m(0, 0) = a.kappa;
    m(0, 1) = -a.epsilon;
    m(1, 0) = a.phi;
    m(1, 1) = (1.0 - a.epsilon * a.phi) / a.kappa;
    return SL2Elem(std::move(m));
}

StarChar factorize(const SL2Elem& h, double tol) {
    if (std::abs(h.m(0, 0)) <= tol) throw math_error("inadmissible element (zero 1,1 entry)");
    return StarChar(h.m(0, 0), -h.m(0, 1), h.m(1, 0));
}

std::vector<SL2Elem> defactorize_tuple(const std::vector<StarChar>& a) {
    std::vector<SL2Elem> g;
    Matrix p = Matrix::identity(2);  // a_1^+ ... a_{i-1}^+
    for (const auto& ai : a) {
        g.push_back(SL2Elem(p * psi(ai).m * inverse(p)));
        p = p * ai.a_plus();
    }
    return g;
}

std::vector<StarChar> factorize_tuple(const std::vector<SL2Elem>& g, double tol) {
    std::vector<StarChar> out;
    SL2Elem part;  // g_i ... g_1
    StarChar prev;  // cumulative character a_1 ... a_{i-1}
    for (const auto& gi : g) {
        part = gi * part;
        if (std::abs(part.m(0, 0)) <= tol) throw math_error("inadmissible tuple");
        const StarChar cum = factorize(part, tol);
        // Peel with the SL2* group law: cum = prev * a_i.
        out.push_back(prev.inv() * cum);
        prev = cum;
    }
    return out;
}

bool is_admissible(const std::vector<SL2Elem>& g, double tol) {
    SL2Elem part;
    for (const auto& gi : g) {
        part = gi * part;
        if (std::abs(part.m(0, 0)) <= tol) return false;
    }
    return true;
}

std::pair<StarChar, StarChar> biquandle_B(const StarChar& a1, const StarChar& a2) {
    const cplx k1 = a1.kappa, e1 = a1.epsilon, f1 = a1.phi;
    const cplx k2 = a2.kappa, e2 = a2.epsilon, f2 = a2.phi;
    const cplx d = e1 * f2 + k2;
    if (std::abs(d) < 1e-12) throw math_error("inadmissible crossing (denominator vanishes)");
    const cplx k4 = d;
    const cplx f4 = k1 * f2;
    const cplx e4 = (e1 * k2 * k2 + e2 * k2 + (e1 * e1 * k2 + e1 * e2) * f2 - e1) / (k1 * k2);
    const cplx k3 = k1 * k2 / d;
    const cplx e3 = e1 / d;
    const cplx f3 = (k2 * k2 * f1 + e1 * f2 * f2 + (e1 * k2 * f1 - (k1 * k1 - 1.0) * k2) * f2) / d;
    return {StarChar(k4, e4, f4), StarChar(k3, e3, f3)};
}

std::pair<StarChar, StarChar> biquandle_B_inv(const StarChar& a4, const StarChar& a3) {
    const cplx k4 = a4.kappa, e4 = a4.epsilon, f4 = a4.phi;
    const cplx k3 = a3.kappa, e3 = a3.epsilon, f3 = a3.phi;
    const cplx d = k3 + e3 * f4;  // equals kappa_1
    if (std::abs(d) < 1e-12) throw math_error("inadmissible crossing (denominator vanishes)");
    const cplx k1 = d;
    const cplx k2 = k3 * k4 / d;
    const cplx e1 = e3 * k4;
    const cplx f2 = f4 / d;
    const cplx e2 = (e4 * k1 * k2 - e1 * k2 * k2 - e1 * e1 * k2 * f2 + e1) / k4;
    const cplx f1 = (f3 * k4 - e1 * f2 * f2 + (k1 * k1 - 1.0) * k2 * f2) / (k2 * k4);
    return {StarChar(k1, e1, f1), StarChar(k2, e2, f2)};
}

std::array<cplx, 4> fractional_eigenvalues(const StarChar& chi) {
    const auto [l1, l2] = eig2(psi(chi).m);
    (void)l2;
    const cplx mu = std::sqrt(l1);
    return {mu, -mu, 1.0 / mu, -1.0 / mu};
}

cplx default_mu(const StarChar& chi) {
    const auto cands = fractional_eigenvalues(chi);
    cplx best = cands[0];
    auto better = [](cplx a, cplx b) {
        const double eps = 1e-12;
        if (std::abs(a) > std::abs(b) + eps) return true;
        if (std::abs(a) < std::abs(b) - eps) return false;
        if (a.real() > b.real() + eps) return true;
        if (a.real() < b.real() - eps) return false;
        return a.imag() > b.imag();
    };
    for (const cplx& c : cands)
        if (better(c, best)) best = c;
    return best;
}

ExtChar::ExtChar(StarChar c, cplx m, double tol) : chi(std::move(c)), mu(m) {
    if (std::abs(mu) < 1e-14) throw math_error("ExtChar: mu = 0");
    const cplx w = mu - 1.0 / mu;
    if (std::abs(w * w - chi.casimir_sq()) > tol * (1.0 + std::abs(chi.casimir_sq())))
        throw math_error("ExtChar: mu is not a fractional eigenvalue of chi");
}

std::vector<ExtChar> act_colors_star(const BraidWord& word, std::vector<ExtChar> a) {
    if (static_cast<int>(a.size()) != word.strands)
        throw dim_error("act_colors_star: colors length != strands");
    for (std::size_t pos = 0; pos < word.letters.size(); ++pos) {
        const int letter = word.letters[pos];
        const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
        try {
            const cplx mu1 = a[i].mu, mu2 = a[i + 1].mu;
            if (letter > 0) {
                auto [c4, c3] = biquandle_B(a[i].chi, a[i + 1].chi);
                a[i] = ExtChar(c4, mu2);
                a[i + 1] = ExtChar(c3, mu1);
            } else {
                auto [c1, c2] = biquandle_B_inv(a[i].chi, a[i + 1].chi);
                a[i] = ExtChar(c1, mu2);
                a[i + 1] = ExtChar(c2, mu1);
            }
        } catch (const math_error& e) {
            throw math_error("letter " + std::to_string(pos + 1) + ": " + e.what());
        }
    }
    return a;
}

std::vector<SL2Elem> gauge_transform(const std::vector<SL2Elem>& g, const SL2Elem& c) {
    std::vector<SL2Elem> out;
    const SL2Elem ci = c.inv();
    for (const auto& gi : g) out.push_back(c * gi * ci);
    return out;
}

SL2Elem random_sl2(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int tries = 0; tries < 64; ++tries) {
        Matrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = cplx(u(rng), u(rng));
        const cplx d = det(m);
        if (std::abs(d) < 1e-3) continue;
        return SL2Elem(m * (1.0 / std::sqrt(d)));
    }
    throw math_error("random_sl2: degenerate draw stream");
}

SL2Elem find_admissible_gauge(const std::vector<SL2Elem>& g, unsigned long seed, double tol) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const SL2Elem c = random_sl2(rng());
        if (is_admissible(gauge_transform(g, c), 10.0 * tol)) return c;
    }
    throw math_error("no admissible gauge found");
}

}  // namespace holotor
