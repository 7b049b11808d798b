#include <benchmark/benchmark.h>

#include "homcat/tree.hpp"

using namespace homcat;

static void BM_NormalFormWorkedExample(benchmark::State& state) {
    auto t = parse_tree("((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))");
    for (auto _ : state) {
        auto nf = normal_form(t);
        benchmark::DoNotOptimize(nf.tree);
    }
}
BENCHMARK(BM_NormalFormWorkedExample);

static void BM_NormalFormRandom(benchmark::State& state) {
    uint64_t seed = 0xbe9c;
    std::vector<SLTree> trees;
    for (int i = 0; i < 64; ++i) trees.push_back(random_tree(seed, static_cast<int>(state.range(0)), -3, 3, 2));
    size_t i = 0;
    for (auto _ : state) {
        auto nf = normal_form(trees[i++ & 63]);
        benchmark::DoNotOptimize(nf.tree);
    }
}
BENCHMARK(BM_NormalFormRandom)->Arg(12)->Arg(24)->Arg(48);

static void BM_ParseFormat(benchmark::State& state) {
    uint64_t seed = 91;
    auto t = random_tree(seed, 32, -5, 5, 3);
    auto s = format_tree(t);
    for (auto _ : state) {
        auto u = parse_tree(s);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_ParseFormat);

static void BM_FgMultiply(benchmark::State& state) {
    uint64_t seed = 1234;
    auto a = normal_form(random_tree(seed, 16, -3, 3, 2)).tree;
    auto b = normal_form(random_tree(seed, 16, -3, 3, 2)).tree;
    for (auto _ : state) {
        auto c = fg_multiply(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FgMultiply);

BENCHMARK_MAIN();
