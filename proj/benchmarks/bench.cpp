#include <benchmark/benchmark.h>

#include <random>

#include "holotor/braiding.hpp"
#include "holotor/burau.hpp"
#include "holotor/invariants.hpp"

using namespace holotor;

namespace {

cplx rand_c(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

ExtChar rand_ext(std::mt19937_64& rng) {
    for (;;) {
        const cplx k = rand_c(rng) * 1.5, e = rand_c(rng), f = rand_c(rng);
        if (std::abs(k) < 0.3 || std::abs(e) < 0.1 || std::abs(f) < 0.1) continue;
        StarChar chi(k, e, f);
        if (std::abs(chi.casimir_sq()) < 0.05) continue;
        return ExtChar(chi, default_mu(chi));
    }
}

std::pair<ExtChar, ExtChar> rand_crossing(std::mt19937_64& rng) {
    const BraidWord w(2, {1});
    for (;;) {
        std::vector<ExtChar> xs{rand_ext(rng), rand_ext(rng)};
        try {
            act_colors_star(w, xs);
            return {xs[0], xs[1]};
        } catch (const math_error&) {
        }
    }
}

LinkSpec trefoil() {
    LinkSpec s;
    s.strands = 2;
    s.word = {1, 1, 1};
    for (int i = 0; i < 2; ++i) s.colors.push_back(SL2Elem::diag(4.0));
    return s;
}

void bm_braiding_solve(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<std::pair<ExtChar, ExtChar>> xs;
    for (int i = 0; i < 64; ++i) xs.push_back(rand_crossing(rng));
    std::size_t i = 0;
    // fresh characters each iteration so the cell cache never hits
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_braiding(xs[i % 64].first, xs[i % 64].second));
        ++i;
        if (i % 64 == 0) {
            state.PauseTiming();
            xs.clear();
            for (int k = 0; k < 64; ++k) xs.push_back(rand_crossing(rng));
            state.ResumeTiming();
        }
    }
}
BENCHMARK(bm_braiding_solve);

void bm_torsion_trefoil(benchmark::State& state) {
    const LinkSpec s = trefoil();
    const BraidWord w = s.braid();
    const auto colors = s.sl2_colors();
    for (auto _ : state) benchmark::DoNotOptimize(torsion(w, colors));
}
BENCHMARK(bm_torsion_trefoil);

void bm_functor_T(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    std::vector<int> word;
    for (int k = 0; k < 8; ++k) word.push_back(1 + (k % (n - 1)));
    const BraidWord w(n, word);
    std::vector<ExtChar> xs;
    for (;;) {
        xs.clear();
        for (int i = 0; i < n; ++i) xs.push_back(rand_ext(rng));
        try {
            act_colors_star(w, xs);
            break;
        } catch (const math_error&) {
        }
    }
    for (auto _ : state) benchmark::DoNotOptimize(functor_T(w, xs));
}
BENCHMARK(bm_functor_T)->Arg(2)->Arg(3)->Arg(4);

void bm_kron_det(benchmark::State& state) {
    std::mt19937_64 rng(3);
    Matrix a(8, 8), b(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            a(i, j) = rand_c(rng);
            b(i, j) = rand_c(rng);
        }
    for (auto _ : state) benchmark::DoNotOptimize(det(kron(a, b)));
}
BENCHMARK(bm_kron_det);

void bm_invariants_pipeline(benchmark::State& state) {
    const LinkSpec s = trefoil();
    for (auto _ : state) benchmark::DoNotOptimize(compute_invariants(s, "T"));
}
BENCHMARK(bm_invariants_pipeline);

}  // namespace

BENCHMARK_MAIN();
