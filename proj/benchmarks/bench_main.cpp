#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "nr/blaschke.hpp"
#include "nr/bidisk.hpp"
#include "nr/convex_polygon.hpp"
#include "nr/hermitian_eigen.hpp"
#include "nr/numerical_range.hpp"
#include "nr/polynomial.hpp"

namespace {

using namespace nr;

// splitmix64 so the workloads are identical from run to run
struct Gen {
    std::uint64_t state = 0xbe9c4;
    double next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    cx box() { return {2.0 * next() - 1.0, 2.0 * next() - 1.0}; }
};

CMatrix random_hermitian(int n) {
    Gen g;
    CMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = 2.0 * g.next() - 1.0;
        for (int j = i + 1; j < n; ++j) {
            h(i, j) = g.box();
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

void bm_hermitian_eigs(benchmark::State& state) {
    const CMatrix h = random_hermitian(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigs(h));
}
BENCHMARK(bm_hermitian_eigs)->Arg(4)->Arg(16)->Arg(64);

void bm_poly_roots(benchmark::State& state) {
    Gen g;
    std::vector<cx> coeffs;
    for (int k = 0; k <= state.range(0); ++k) coeffs.push_back(g.box());
    const Polynomial p{std::move(coeffs)};
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(bm_poly_roots)->Arg(6)->Arg(24);

void bm_convex_hull(benchmark::State& state) {
    Gen g;
    std::vector<cx> pts;
    for (int k = 0; k < state.range(0); ++k) pts.push_back(g.box());
    for (auto _ : state) benchmark::DoNotOptimize(ConvexPolygon::hull(pts));
}
BENCHMARK(bm_convex_hull)->Arg(1000)->Arg(10000);

void bm_numerical_range(benchmark::State& state) {
    Gen g;
    CMatrix a(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = g.box();
    for (auto _ : state) benchmark::DoNotOptimize(numerical_range(a, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_numerical_range)->Arg(180)->Arg(720);

void bm_numrange_via_dilations(benchmark::State& state) {
    const std::vector<cx> zeros{cx(0.3), cx(0.0, 0.4), cx(-0.2, 0.1)};
    for (auto _ : state)
        benchmark::DoNotOptimize(numrange_via_dilations(zeros, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_numrange_via_dilations)->Arg(90)->Arg(360);

void bm_bidisk_slice_hull(benchmark::State& state) {
    const RationalInnerFunction t1 = linear_rif(2.0, 1.0);
    const RationalInnerFunction theta = t1 * t1;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            bidisk_numrange(theta, static_cast<int>(state.range(0)), 180));
}
BENCHMARK(bm_bidisk_slice_hull)->Arg(90);

} // namespace

BENCHMARK_MAIN();
