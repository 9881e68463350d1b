#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <utility>

#include "cobord/omega.hpp"
#include "cobord/verify.hpp"

using namespace cobord;

namespace {

const FGLContext& shared_ctx(long p, int D) {
    static std::map<std::pair<long, int>, std::unique_ptr<FGLContext>> cache;
    auto& slot = cache[{p, D}];
    if (!slot) slot = std::make_unique<FGLContext>(p, D);
    return *slot;
}

void BM_ContextBuild(benchmark::State& state) {
    long p = state.range(0);
    int D = static_cast<int>(state.range(1));
    for (auto _ : state) {
        FGLContext ctx(p, D);
        benchmark::DoNotOptimize(ctx.p_series_coeff(1));
    }
}
BENCHMARK(BM_ContextBuild)->Args({3, 4})->Args({3, 6})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_NormalFormProduct(benchmark::State& state) {
    const OmegaRing ring(shared_ctx(3, 8));
    auto a = ring.d_elt(0, 1, 2);
    auto b = ring.d_elt(1, 0, 2);
    for (auto _ : state) {
        // fresh ring each pass so the memo does not absorb the work
        OmegaRing r(shared_ctx(3, 8));
        benchmark::DoNotOptimize(r.multiply(a, b));
    }
}
BENCHMARK(BM_NormalFormProduct)->Unit(benchmark::kMicrosecond);

void BM_Gamma(benchmark::State& state) {
    const OmegaRing ring(shared_ctx(3, 8));
    auto x = ring.multiply(ring.d_elt(0, 1, 2), ring.d_elt(1, 0, 2));
    for (auto _ : state) benchmark::DoNotOptimize(ring.gamma(x));
}
BENCHMARK(BM_Gamma)->Unit(benchmark::kMicrosecond);

void BM_VerifyMuSuite(benchmark::State& state) {
    const FGLContext& ctx = shared_ctx(3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(verify_mu_presentation(ctx));
}
BENCHMARK(BM_VerifyMuSuite)->Unit(benchmark::kMillisecond);

void BM_KosniowskiCatalog(benchmark::State& state) {
    const FGLContext& ctx = shared_ctx(5, 6);
    for (auto _ : state) benchmark::DoNotOptimize(kosniowski_catalog(ctx));
}
BENCHMARK(BM_KosniowskiCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
