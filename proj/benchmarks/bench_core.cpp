#include <benchmark/benchmark.h>

#include "ssk3/census.hpp"
#include "ssk3/lattice.hpp"
#include "ssk3/splitcode.hpp"

using namespace ssk3;

namespace {

constexpr const char* kGdk = "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4";

void BM_FieldMul(benchmark::State& state) {
    FieldCtx F = FieldCtx::standard(static_cast<int>(state.range(0)));
    FFElem a = F.from_bits(0x5a5a5 & F.size_minus_one()), b = F.from_bits(0x3c3c3 & F.size_minus_one());
    for (auto _ : state) {
        a = F.mul(a, b) + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(20)->Arg(40);

void BM_FieldInv(benchmark::State& state) {
    FieldCtx F = FieldCtx::standard(static_cast<int>(state.range(0)));
    FFElem a = F.from_bits(0x5a5a5 & F.size_minus_one());
    for (auto _ : state) {
        a = F.inv(a) + F.one();
        if (a == F.zero()) a = F.one();
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldInv)->Arg(8)->Arg(20);

void BM_ZLocus(benchmark::State& state) {
    HomPoly3 g = HomPoly3::parse(kGdk);
    for (auto _ : state) benchmark::DoNotOptimize(compute_zlocus(g));
}
BENCHMARK(BM_ZLocus)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
    HomPoly3 g = HomPoly3::parse(kGdk);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(g));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_Lattice(benchmark::State& state) {
    Analysis a = analyze(HomPoly3::parse(kGdk));
    for (auto _ : state) {
        auto lat = lattice_from_code(a.code);
        benchmark::DoNotOptimize(disc_and_signature(lat));
    }
}
BENCHMARK(BM_Lattice)->Unit(benchmark::kMillisecond);

void BM_CensusLevels(benchmark::State& state) {
    CensusParams p;
    p.max_dim = static_cast<int>(state.range(0));
    p.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_census(p).total());
}
BENCHMARK(BM_CensusLevels)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
