#include <benchmark/benchmark.h>

#include <algorithm>

#include "homcat/group.hpp"
#include "homcat/ring.hpp"
#include "homcat/structure.hpp"

using namespace homcat;

namespace {

Table zadd(int n) {
    Table t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return t;
}

FiniteHomGroup zn5(int n) {
    Table e(n);
    for (int x = 0; x < n; ++x) e[x] = ((n - 1) * x) % n;
    return twist_group(zadd(n), e);
}

}  // namespace

static void BM_CheckHomGroup(benchmark::State& state) {
    auto G = zn5(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = check_hom_group(G);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckHomGroup)->Arg(6)->Arg(12)->Arg(24)->Complexity();

static void BM_NormalLattice(benchmark::State& state) {
    auto G = zn5(12);
    for (auto _ : state) {
        auto lat = normal_lattice(G);
        benchmark::DoNotOptimize(lat);
    }
}
BENCHMARK(BM_NormalLattice);

static void BM_CheckHomRingF2S3(benchmark::State& state) {
    // 64-element twisted group ring, the largest exhaustive triple scan
    Table mul(36), conj(6);
    {
        int perms[6][3];
        int p[3] = {0, 1, 2};
        for (int i = 0; i < 6; ++i) {
            std::copy(p, p + 3, perms[i]);
            std::next_permutation(p, p + 3);
        }
        auto idx = [&](const int* q) {
            for (int i = 0; i < 6; ++i)
                if (std::equal(q, q + 3, perms[i])) return i;
            return -1;
        };
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                int c[3];
                for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
                mul[static_cast<size_t>(a) * 6 + b] = idx(c);
            }
        for (int g = 0; g < 6; ++g)
            conj[g] = mul[static_cast<size_t>(mul[2 * 6 + g]) * 6 + 2];
    }
    auto R = twisted_group_ring(mul, conj, 2);
    for (auto _ : state) {
        auto rep = check_hom_ring(R.ring);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CheckHomRingF2S3);

