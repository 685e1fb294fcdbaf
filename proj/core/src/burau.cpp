#include "holotor/burau.hpp"

#include <cmath>
#include <string>

namespace holotor {

namespace {

// Writes the 2x2 block `b` of a generator matrix into `full` at block slot
// (r, c) relative to the letter's strand index m; slots outside the valid
// range [0, n-2] are silently dropped (edge truncation of the 3x3 pattern).
void put_block(Matrix& full, int n, int m, int r, int c, const Matrix& b) {
    const int slot_r = m - 2 + r, slot_c = m - 2 + c;
    if (slot_r < 0 || slot_r > n - 2 || slot_c < 0 || slot_c > n - 2) return;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            full(static_cast<std::size_t>(2 * slot_r) + i, static_cast<std::size_t>(2 * slot_c) + j) =
                b(i, j);
}

Matrix generator_block_boundary(int n, int m, const Matrix& R) {
    Matrix g = Matrix::identity(static_cast<std::size_t>(2 * (n - 1)));
    const Matrix I2 = Matrix::identity(2);
    // rows y_{m-1}, y_m, y_{m+1}: [I 0 0; I -R R; 0 0 I]
    put_block(g, n, m, 1, 0, I2);
    put_block(g, n, m, 1, 1, -R);
    put_block(g, n, m, 1, 2, R);
    return g;
}

Matrix generator_block_reduced(int n, int m, const Matrix& S) {
    Matrix g = Matrix::identity(static_cast<std::size_t>(2 * (n - 1)));
    const Matrix I2 = Matrix::identity(2);
    // [I I 0; 0 -S 0; 0 S I]
    put_block(g, n, m, 0, 1, I2);
    put_block(g, n, m, 1, 1, -S);
    put_block(g, n, m, 2, 1, S);
    return g;
}

// Shared driver: walks the word evolving colors, asking `block` for the
// generator matrix of the forward crossing with the given target colors, and
// inverting it for negative letters.  `reverse_accumulate` multiplies new
// blocks on the left, for the variant that composes as an anti-representation.
template <typename BlockFn>
BurauMatrix burau_walk(const BraidWord& word, const std::vector<SL2Elem>& colors, BlockFn block,
                       bool reverse_accumulate = false) {
    const int n = word.strands;
    if (n < 2) throw dim_error("burau: need at least 2 strands");
    if (static_cast<int>(colors.size()) != n) throw dim_error("burau: colors length != strands");
    BurauMatrix out;
    out.source_colors = colors;
    out.m = Matrix::identity(static_cast<std::size_t>(2 * (n - 1)));
    std::vector<SL2Elem> cur = colors;
    for (int letter : word.letters) {
        const int m = std::abs(letter);
        BraidWord single(n, {m});
        if (letter > 0) {
            cur = act_colors_sl2(single, cur);
            const Matrix b = block(n, m, cur);
            out.m = reverse_accumulate ? b * out.m : out.m * b;
        } else {
            // Forward crossing sigma_m has target = current colors.
            const Matrix fwd = inverse(block(n, m, cur));
            out.m = reverse_accumulate ? fwd * out.m : out.m * fwd;
            BraidWord inv_single(n, {-m});
            cur = act_colors_sl2(inv_single, cur);
        }
    }
    out.target_colors = cur;
    return out;
}

}  // namespace

BurauMatrix burau_boundary(const BraidWord& word, const std::vector<SL2Elem>& colors) {
    // Anti-representation: blocks compose right-to-left.
    return burau_walk(
        word, colors,
        [](int n, int m, const std::vector<SL2Elem>& tgt) {
            // rho(y_m y_{m+1}^{-1}) at target colors collapses to g_{m+1}^{-1}.
            const Matrix R = inverse(tgt[static_cast<std::size_t>(m)].m);
            return generator_block_boundary(n, m, R);
        },
        true);
}

BurauMatrix burau_reduced(const BraidWord& word, const std::vector<SL2Elem>& colors) {
    return burau_walk(word, colors, [](int n, int m, const std::vector<SL2Elem>& tgt) {
        // Dual (inverse-transpose) coefficients of the target color g_{m+1}.
        const Matrix S = inverse(tgt[static_cast<std::size_t>(m)].m).transpose();
        return generator_block_reduced(n, m, S);
    });
}

namespace {

Matrix nice_block(int n, int m, const StarChar& bi, const StarChar& bi1) {
    Matrix g = Matrix::identity(static_cast<std::size_t>(2 * (n - 1)));
    const cplx k1 = bi.kappa, f1 = bi.phi;
    const cplx k2 = bi1.kappa, e2 = bi1.epsilon;
    Matrix b01(2, 2), b11(2, 2), b21(2, 2);
    b01(0, 0) = 1.0 / k1;
    b01(0, 1) = -f1 / k1;
    b01(1, 1) = 1.0;
    b11(0, 0) = -1.0 / k1;
    b11(0, 1) = f1 / k1;
    b11(1, 0) = -e2;
    b11(1, 1) = -k2;
    b21(0, 0) = 1.0;
    b21(1, 0) = e2;
    b21(1, 1) = k2;
    put_block(g, n, m, 0, 1, b01);
    put_block(g, n, m, 1, 1, b11);
    put_block(g, n, m, 2, 1, b21);
    return g;
}

}  // namespace

BurauNice burau_nice(const BraidWord& word, const std::vector<ExtChar>& star) {
    const int n = word.strands;
    if (n < 2) throw dim_error("burau_nice: need at least 2 strands");
    if (static_cast<int>(star.size()) != n) throw dim_error("burau_nice: colors length != strands");
    BurauNice out;
    out.source = star;
    out.m = Matrix::identity(static_cast<std::size_t>(2 * (n - 1)));
    std::vector<ExtChar> cur = star;
    for (int letter : word.letters) {
        const int m = std::abs(letter);
        BraidWord single(n, {letter});
        if (letter > 0) {
            cur = act_colors_star(single, cur);
            out.m = out.m * nice_block(n, m, cur[static_cast<std::size_t>(m - 1)].chi,
                                       cur[static_cast<std::size_t>(m)].chi);
        } else {
            const Matrix fwd = nice_block(n, m, cur[static_cast<std::size_t>(m - 1)].chi,
                                          cur[static_cast<std::size_t>(m)].chi);
            out.m = out.m * inverse(fwd);
            cur = act_colors_star(single, cur);
        }
    }
    out.target = cur;
    return out;
}

Matrix nice_basis_change(const std::vector<StarChar>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2) throw dim_error("nice_basis_change: need at least 2 characters");
    Matrix q = Matrix::zero(static_cast<std::size_t>(2 * (n - 1)), static_cast<std::size_t>(2 * (n - 1)));
    Matrix p = Matrix::identity(2);  // running product of transposed a^+ factors
    for (int i = 1; i <= n - 1; ++i) {
        p = a[static_cast<std::size_t>(i - 1)].a_plus().transpose() * p;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                q(static_cast<std::size_t>(2 * (i - 1)) + r, static_cast<std::size_t>(2 * (i - 1)) + c) =
                    p(r, c);
    }
    return q;
}

SL2Elem total_holonomy(const std::vector<SL2Elem>& colors) {
    SL2Elem h;
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) h = h * *it;
    return h;
}

TorsionResult torsion(const BraidWord& word, const std::vector<SL2Elem>& colors,
                      bool auto_stabilize, double tol) {
    if (static_cast<int>(colors.size()) != word.strands)
        throw dim_error("torsion: colors length != strands");
    const auto evolved = act_colors_sl2(word, colors);
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (max_abs_diff(evolved[i].m, colors[i].m) > std::max(1e-6, tol))
            throw math_error("not a colored closure (colors not fixed by the word)");

    BraidWord w = word;
    std::vector<SL2Elem> cs = colors;
    int stabs = 0;
    const SL2Elem h0 = total_holonomy(cs);
    if (std::abs(h0.tr() - cplx(2.0)) <= tol) {
        if (!auto_stabilize) throw math_error("singular total holonomy");
        auto st = stabilize_nonsingular(w, cs, tol);
        w = st.word;
        cs = st.colors;
        stabs = st.stabilizations;
    }
    const SL2Elem h = total_holonomy(cs);
    cplx num = 1.0;  // n = 1: empty Burau, determinant 1
    if (w.strands >= 2) {
        const BurauMatrix b = burau_reduced(w, cs);
        num = det(Matrix::identity(b.m.rows()) - b.m);
    }
    const cplx den = det(Matrix::identity(2) - h.inv().m);
    if (std::abs(den) < 1e-14) throw math_error("singular total holonomy");
    return {num / den, stabs};
}

}  // namespace holotor
