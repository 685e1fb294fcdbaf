#include "holotor/braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace holotor {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw dim_error("BraidWord: need at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) > n - 1)
            throw dim_error("BraidWord: letter " + std::to_string(l) + " out of range for n=" +
                            std::to_string(n));
}

FreeWord free_reduce(FreeWord w) {
    FreeWord out;
    for (auto& s : w) {
        if (!out.empty() && out.back().first == s.first && out.back().second == -s.second)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return free_reduce(std::move(w));
}

FreeWord free_inv(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

namespace {

// Image of x_j under a single letter, as a word in the x's.
FreeWord letter_image(int letter, int j) {
    const int i = std::abs(letter);
    const FreeWord xi = {{i, 1}}, xi1 = {{i + 1, 1}};
    if (letter > 0) {
        if (j == i) return free_mul(free_mul(free_inv(xi), xi1), xi);  // x_i^{-1} x_{i+1} x_i
        if (j == i + 1) return xi;
    } else {
        if (j == i) return xi1;
        if (j == i + 1) return free_mul(free_mul(xi1, xi), free_inv(xi1));  // x_{i+1} x_i x_{i+1}^{-1}
    }
    return {{j, 1}};
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
    FreeWord out;
    for (auto& [g, e] : w) {
        const FreeWord& im = images[static_cast<std::size_t>(g - 1)];
        out = free_mul(out, e > 0 ? im : free_inv(im));
    }
    return out;
}

}  // namespace

std::vector<FreeWord> act_free(const BraidWord& word) {
    const int n = word.strands;
    std::vector<FreeWord> images(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = {{j, 1}};
    // Letter-by-letter, matching the color action: the new image of x_j is the
    // letter's pattern for x_j with the previous images substituted in.
    for (int letter : word.letters) {
        std::vector<FreeWord> next(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            next[static_cast<std::size_t>(j - 1)] = substitute(letter_image(letter, j), images);
        images = std::move(next);
    }
    return images;
}

SL2Elem evaluate_free(const FreeWord& w, const std::vector<SL2Elem>& colors) {
    SL2Elem r;
    for (auto& [g, e] : w) {
        const SL2Elem& c = colors.at(static_cast<std::size_t>(g - 1));
        r = r * (e > 0 ? c : c.inv());
    }
    return r;
}

std::vector<SL2Elem> act_colors_sl2(const BraidWord& word, std::vector<SL2Elem> colors) {
    if (static_cast<int>(colors.size()) != word.strands)
        throw dim_error("act_colors_sl2: colors length != strands");
    for (int letter : word.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
        SL2Elem a = colors[i], b = colors[i + 1];
        if (letter > 0) {
            colors[i] = a.inv() * b * a;
            colors[i + 1] = a;
        } else {
            colors[i] = b;
            colors[i + 1] = b * a * b.inv();
        }
    }
    return colors;
}

std::vector<int> underlying_permutation(const BraidWord& word) {
    std::vector<int> perm(static_cast<std::size_t>(word.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : word.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    // perm as computed maps top positions back to bottom; invert so that
    // result[p] = position where bottom strand p arrives.
    std::vector<int> out(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) out[static_cast<std::size_t>(perm[p])] = static_cast<int>(p);
    return out;
}

std::vector<std::vector<int>> closure_components(const BraidWord& word) {
    const auto perm = underlying_permutation(word);
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::vector<int>> comps;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        std::size_t p = s;
        while (!seen[p]) {
            seen[p] = true;
            cyc.push_back(static_cast<int>(p) + 1);
            p = static_cast<std::size_t>(perm[p]);
        }
        std::sort(cyc.begin(), cyc.end());
        comps.push_back(std::move(cyc));
    }
    return comps;
}

int writhe(const BraidWord& word) {
    int w = 0;
    for (int l : word.letters) w += l > 0 ? 1 : -1;
    return w;
}

Stabilized stabilize_nonsingular(const BraidWord& word, std::vector<SL2Elem> colors, double tol) {
    for (const auto& c : colors)
        if (std::abs(c.tr() - cplx(2.0)) <= tol) throw math_error("singular meridian");
    Stabilized st{word, std::move(colors), 0};
    for (int attempt = 0; attempt < 3; ++attempt) {
        SL2Elem h;
        for (auto it = st.colors.rbegin(); it != st.colors.rend(); ++it) h = h * *it;
        if (std::abs(h.tr() - cplx(2.0)) > tol) return st;
        // tr(g_n^2 h) + tr(h) = tr(g_n) tr(g_n h): with tr(g_n) != 2 at most two
        // appended kinks make the total holonomy nonsingular.
        const int n = st.word.strands;
        BraidWord w2(n + 1, st.word.letters);
        w2.letters.push_back(n);
        st.word = std::move(w2);
        st.colors.push_back(st.colors.back());
        ++st.stabilizations;
    }
    throw math_error("stabilization failed to desingularize total holonomy");
}

}  // namespace holotor
