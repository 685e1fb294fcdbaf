#include "holotor/braiding.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace holotor {

namespace {

const cplx I(0.0, 1.0);

// c X = Y c for each (X, Y) pair; unknown c is d x d, flattened row-major.
Matrix intertwiner_system(const std::vector<std::pair<Matrix, Matrix>>& eqs, std::size_t d) {
    Matrix sys(eqs.size() * d * d, d * d);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const Matrix& X = eqs[e].first;
        const Matrix& Y = eqs[e].second;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                const std::size_t row = (e * d + p) * d + q;
                for (std::size_t s = 0; s < d; ++s) sys(row, p * d + s) += X(s, q);
                for (std::size_t r = 0; r < d; ++r) sys(row, r * d + q) -= Y(p, r);
            }
    }
    return sys;
}

Matrix unflatten(const Matrix& col, std::size_t d) {
    Matrix m(d, d);
    for (std::size_t k = 0; k < d * d; ++k) m(k / d, k % d) = col(k, 0);
    return m;
}

// Principal fourth root of det: scale so det = 1, argument of the divisor in
// (-pi/4, pi/4].
Matrix det_normalize(const Matrix& c) {
    const cplx d = det(c);
    if (std::abs(d) < 1e-13) throw math_error("braiding cell is singular");
    return c * std::exp(-std::log(d) / 4.0);
}

double intertwining_residual(const Matrix& c, const std::vector<std::pair<Matrix, Matrix>>& eqs) {
    double worst = 0.0;
    for (const auto& [X, Y] : eqs)
        worst = std::max(worst, max_abs_diff(c * X, Y * c) /
                                    (1.0 + frobenius(c) * std::max(frobenius(X), frobenius(Y))));
    return worst;
}

std::vector<std::pair<Matrix, Matrix>> generator_equations(const ExtChar& x1, const ExtChar& x2,
                                                           const RhatImages& im) {
    const Rep r1 = simple_module(x1), r2 = simple_module(x2);
    const Matrix I2 = Matrix::identity(2);
    return {{kron(r1.K, I2), im.K1}, {kron(I2, r2.K), im.K2}, {kron(r1.E, I2), im.E1},
            {kron(I2, r2.E), im.E2}, {kron(r1.F, I2), im.F1}, {kron(I2, r2.F), im.F2}};
}

// Cell cache.  Keys hash the eight complex coordinates of the crossing to
// 1e-9-rounded integers; purely an optimization (long words revisit cells).
using CellKey = std::array<long long, 17>;

CellKey make_key(int tag, const ExtChar& x1, const ExtChar& x2) {
    CellKey k{};
    k[0] = tag;
    const cplx vals[] = {x1.chi.kappa, x1.chi.epsilon, x1.chi.phi, x1.mu,
                         x2.chi.kappa, x2.chi.epsilon, x2.chi.phi, x2.mu};
    for (int i = 0; i < 8; ++i) {
        k[1 + 2 * i] = std::llround(vals[i].real() * 1e9);
        k[2 + 2 * i] = std::llround(vals[i].imag() * 1e9);
    }
    return k;
}

std::mutex cell_mutex;
std::map<CellKey, BraidingCell> cell_cache;
std::map<CellKey, DoubledCell> doubled_cache;

}  // namespace

RhatImages rhat_images(const ExtChar& x1, const ExtChar& x2) {
    if (!x1.nonsingular() || !x2.nonsingular())
        throw math_error("rhat_images: singular source character");
    auto [c4, c3] = biquandle_B(x1.chi, x2.chi);
    RhatImages out;
    out.tgt1 = ExtChar(c4, x2.mu);  // mu's travel with their strands
    out.tgt2 = ExtChar(c3, x1.mu);
    if (!out.tgt1.nonsingular() || !out.tgt2.nonsingular())
        throw math_error("rhat_images: singular target character");
    const Rep r4 = simple_module(out.tgt1), r3 = simple_module(out.tgt2);
    const Matrix I2 = Matrix::identity(2);

    out.E1 = kron(r4.K, r3.E);
    out.F2 = kron(r4.F, r3.Kinv());
    out.K1 = kron(I2, r3.K) - I * kron(r4.K * r4.F, r3.E);
    const cplx dK1 = det(out.K1);
    if (std::abs(dK1) < 1e-10) throw math_error("crossing at localization locus");
    const Matrix K1inv = inverse(out.K1);
    out.K2 = K1inv * kron(r4.K, r3.K);
    out.E2 = (kron(I2, r3.E) + kron(r4.E, r3.K)) - out.E1 * out.K2;
    out.F1 = (kron(r4.Kinv(), r3.F) + kron(r4.F, I2)) - K1inv * out.F2;
    return out;
}

BraidingCell solve_braiding(const ExtChar& x1, const ExtChar& x2) {
    const CellKey key = make_key(0, x1, x2);
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        auto it = cell_cache.find(key);
        if (it != cell_cache.end()) return it->second;
    }
    const RhatImages im = rhat_images(x1, x2);
    const auto eqs = generator_equations(x1, x2, im);
    const auto ns = nullspace(intertwiner_system(eqs, 4), 1e-9);
    if (ns.basis.size() != 1) {
        std::string sv = "singular values:";
        for (double s : ns.singular_values) sv += " " + std::to_string(s);
        throw math_error("braiding not unique/found (nullspace dim " +
                         std::to_string(ns.basis.size()) + "); " + sv);
    }
    BraidingCell cell;
    cell.src1 = x1;
    cell.src2 = x2;
    cell.tgt1 = im.tgt1;
    cell.tgt2 = im.tgt2;
    cell.c = det_normalize(unflatten(ns.basis[0], 4));
    cell.residual = intertwining_residual(cell.c, eqs);
    const auto& sv = ns.singular_values;
    cell.gap = sv[sv.size() - 2] / std::max(sv.back(), 1e-300);
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        cell_cache.emplace(key, cell);
    }
    return cell;
}

Matrix inverse_char_iso(const ExtChar& x) {
    const Rep d = dual_module(simple_module(x));
    const Rep s = simple_module(ExtChar(x.chi.inv(), x.mu));
    const std::vector<std::pair<Matrix, Matrix>> eqs = {{d.K, s.K}, {d.E, s.E}, {d.F, s.F}};
    const auto ns = nullspace(intertwiner_system(eqs, 2), 1e-9);
    if (ns.basis.size() != 1)
        throw math_error("inverse_char_iso: intertwiner space dimension " +
                         std::to_string(ns.basis.size()));
    Matrix f = unflatten(ns.basis[0], 2);
    if (std::abs(det(f)) < 1e-10) throw math_error("inverse_char_iso: not invertible");
    return f;
}

namespace {

Matrix flip2() {
    Matrix t(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) t(2 * b + a, 2 * a + b) = 1.0;
    return t;
}

}  // namespace

BraidingCell mirror_braiding(const ExtChar& x1, const ExtChar& x2) {
    const CellKey key = make_key(1, x1, x2);
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        auto it = cell_cache.find(key);
        if (it != cell_cache.end()) return it->second;
    }
    auto [c4, c3] = biquandle_B(x1.chi, x2.chi);
    const ExtChar t1(c4, x2.mu), t2(c3, x1.mu);
    // Forward solve on the inverse-character crossing (chi3^-1, chi4^-1).
    const BraidingCell fwd = solve_braiding(ExtChar(t2.chi.inv(), x1.mu),
                                            ExtChar(t1.chi.inv(), x2.mu));
    const Matrix f1 = inverse_char_iso(x1), f2 = inverse_char_iso(x2);
    const Matrix f4 = inverse_char_iso(t1), f3 = inverse_char_iso(t2);
    const Matrix tau = flip2();
    Matrix cbar = kron(inverse(f4), inverse(f3)) * tau * inverse(fwd.c) * tau * kron(f1, f2);

    BraidingCell cell;
    cell.src1 = x1;
    cell.src2 = x2;
    cell.tgt1 = t1;
    cell.tgt2 = t2;
    cell.c = det_normalize(cbar);
    // Residual: cbar must intertwine the Delta^op actions on the dual tensors.
    const Rep d1 = dual_module(simple_module(x1)), d2 = dual_module(simple_module(x2));
    const Rep d4 = dual_module(simple_module(t1)), d3 = dual_module(simple_module(t2));
    const Rep src = tensor_rep({d1, d2}, Coproduct::DeltaOp);
    const Rep tgt = tensor_rep({d4, d3}, Coproduct::DeltaOp);
    const std::vector<std::pair<Matrix, Matrix>> eqs = {
        {src.K, tgt.K}, {src.E, tgt.E}, {src.F, tgt.F}};
    cell.residual = intertwining_residual(cell.c, eqs);
    cell.gap = fwd.gap;
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        cell_cache.emplace(key, cell);
    }
    return cell;
}

Matrix v0(const std::vector<ExtChar>& xs) {
    for (const auto& x : xs)
        if (!x.nonsingular()) throw math_error("v0: singular character");
    Matrix z(4, 1);
    z(0, 0) = 1.0;
    z(3, 0) = 1.0;
    Matrix out = Matrix::identity(1);
    for (std::size_t j = 0; j < xs.size(); ++j) out = kron(out, z);
    return out;
}

Matrix interleave_perm() {
    // grouped (a1,a2,b1,b2) -> interleaved (a1,b1,a2,b2)
    Matrix p(16, 16);
    for (std::size_t a1 = 0; a1 < 2; ++a1)
        for (std::size_t a2 = 0; a2 < 2; ++a2)
            for (std::size_t b1 = 0; b1 < 2; ++b1)
                for (std::size_t b2 = 0; b2 < 2; ++b2)
                    p(((a1 * 2 + b1) * 2 + a2) * 2 + b2, ((a1 * 2 + a2) * 2 + b1) * 2 + b2) = 1.0;
    return p;
}

DoubledCell doubled_braiding(const ExtChar& x1, const ExtChar& x2) {
    const CellKey key = make_key(2, x1, x2);
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        auto it = doubled_cache.find(key);
        if (it != doubled_cache.end()) return it->second;
    }
    const BraidingCell c = solve_braiding(x1, x2);
    const BraidingCell cb = mirror_braiding(x1, x2);
    const Matrix P = interleave_perm();
    Matrix C = P * kron(c.c, cb.c) * P.transpose();

    const Matrix vs = v0({x1, x2}), vt = v0({c.tgt1, c.tgt2});
    const Matrix img = C * vs;
    // alpha from the overlap with the target pattern
    cplx alpha = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        alpha += std::conj(vt(i, 0)) * img(i, 0);
        norm += std::conj(vt(i, 0)) * vt(i, 0);
    }
    alpha /= norm;
    if (std::abs(alpha) < 1e-12) throw math_error("doubled_braiding: normalization failure");
    C = C * (1.0 / alpha);

    DoubledCell out;
    out.src1 = x1;
    out.src2 = x2;
    out.tgt1 = c.tgt1;
    out.tgt2 = c.tgt2;
    out.C = C;
    out.residual = max_abs_diff(C * vs, vt) / frobenius(vt);
    {
        std::lock_guard<std::mutex> lk(cell_mutex);
        doubled_cache.emplace(key, out);
    }
    return out;
}

namespace {

Matrix embed_cell(const Matrix& cell, int n, int m, std::size_t factor_dim) {
    std::size_t left = 1, right = 1;
    for (int i = 1; i < m; ++i) left *= factor_dim;
    for (int i = m + 1; i < n; ++i) right *= factor_dim;
    return kron(kron(Matrix::identity(left), cell), Matrix::identity(right));
}

// Shared walk for the three functors: CellFn(x1, x2) -> cell matrix of the
// forward crossing, embedded at the letter's position; negative letters invert
// the forward cell whose target colors match the current ones.
template <typename CellFn>
Matrix functor_walk(const BraidWord& word, const std::vector<ExtChar>& xs, CellFn cellmat,
                    std::size_t factor_dim) {
    const int n = word.strands;
    if (static_cast<int>(xs.size()) != n) throw dim_error("functor: colors length != strands");
    std::size_t total_dim = 1;
    for (int i = 0; i < n; ++i) total_dim *= factor_dim;
    Matrix total = Matrix::identity(total_dim);
    std::vector<ExtChar> cur = xs;
    for (std::size_t pos = 0; pos < word.letters.size(); ++pos) {
        const int letter = word.letters[pos];
        const int m = std::abs(letter);
        try {
            if (letter > 0) {
                const Matrix cm = cellmat(cur[static_cast<std::size_t>(m - 1)],
                                          cur[static_cast<std::size_t>(m)]);
                total = embed_cell(cm, n, m, factor_dim) * total;
                cur = act_colors_star(BraidWord(n, {letter}), cur);
            } else {
                // source colors of the forward crossing targeting `cur`
                cur = act_colors_star(BraidWord(n, {letter}), cur);
                const Matrix cm = cellmat(cur[static_cast<std::size_t>(m - 1)],
                                          cur[static_cast<std::size_t>(m)]);
                total = embed_cell(inverse(cm), n, m, factor_dim) * total;
            }
        } catch (const math_error& e) {
            throw math_error("letter " + std::to_string(pos + 1) + " (sigma_" +
                             std::to_string(letter) + "): " + e.what());
        }
    }
    return total;
}

}  // namespace

Matrix functor_F(const BraidWord& word, const std::vector<ExtChar>& xs) {
    return functor_walk(
        word, xs, [](const ExtChar& a, const ExtChar& b) { return solve_braiding(a, b).c; }, 2);
}

Matrix functor_Fbar(const BraidWord& word, const std::vector<ExtChar>& xs) {
    return functor_walk(
        word, xs, [](const ExtChar& a, const ExtChar& b) { return mirror_braiding(a, b).c; }, 2);
}

Matrix functor_T(const BraidWord& word, const std::vector<ExtChar>& xs) {
    return functor_walk(
        word, xs, [](const ExtChar& a, const ExtChar& b) { return doubled_braiding(a, b).C; }, 4);
}

}  // namespace holotor
