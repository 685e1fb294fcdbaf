#pragma once

#include <vector>

#include "holotor/sl2.hpp"

namespace holotor {

// Braid word on n strands.  Letters are signed generator indices:
// +i for sigma_i, -i for its inverse, 1 <= i <= n-1.  Braids compose
// left-to-right (the first letter acts first).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);
};

// Word in the free group F_n, stored reduced.
// Each element is (generator index in [1,n], exponent +-1).
using FreeWord = std::vector<std::pair<int, int>>;

FreeWord free_reduce(FreeWord w);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& w);

// (x_1 . beta, ..., x_n . beta) as reduced free words.
std::vector<FreeWord> act_free(const BraidWord& word);

// Evaluate a free word at colors: rho(x_i) = colors[i-1], rho(uv) = rho(u)rho(v).
SL2Elem evaluate_free(const FreeWord& w, const std::vector<SL2Elem>& colors);

// The Wirtinger rule (g_i, g_{i+1}) -> (g_i^{-1} g_{i+1} g_i, g_i) per positive
// letter; negative letters apply the inverse rule.
std::vector<SL2Elem> act_colors_sl2(const BraidWord& word, std::vector<SL2Elem> colors);

// Underlying permutation: bottom position p connects to top position perm[p].
std::vector<int> underlying_permutation(const BraidWord& word);

// Cycles of the underlying permutation = link components of the closure,
// ordered by least strand index, 1-based strand labels.
std::vector<std::vector<int>> closure_components(const BraidWord& word);

int writhe(const BraidWord& word);

struct Stabilized {
    BraidWord word;
    std::vector<SL2Elem> colors;
    int stabilizations = 0;
};

// Markov-stabilizes (append sigma_n with duplicated last color, at most twice)
// until the total holonomy g_n...g_1 has trace != 2.  Requires every meridian
// color to have trace != 2.
Stabilized stabilize_nonsingular(const BraidWord& word, std::vector<SL2Elem> colors,
                                 double tol = 1e-9);

}  // namespace holotor
