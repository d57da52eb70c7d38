#include "greenpoly/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace greenpoly;

namespace {

std::shared_ptr<const WeylGroupData> group(int which) {
    static auto a6 = WeylGroupData::build({Family::A, 6});
    static auto b5 = WeylGroupData::build({Family::B, 5});
    return which == 0 ? a6 : b5;
}

// values of a graded virtual character, so every Gram entry is integral
std::vector<IntPoly> weights(const WeylGroupData& g) {
    std::vector<IntPoly> coords;
    for (int i = 0; i < g.num_irreps(); ++i) coords.push_back(IntPoly::one_minus(i % 5 + 1) * IntPoly::monomial(1, i % 7));
    return class_values(g, coords, Exec::Serial);
}

void gram(benchmark::State& st, Exec exec) {
    auto g = group(int(st.range(0)));
    auto w = weights(*g);
    for (auto _ : st) benchmark::DoNotOptimize(class_weighted_gram(*g, w, exec));
    st.SetLabel(g->type().name());
}

void values(benchmark::State& st, Exec exec) {
    auto g = group(int(st.range(0)));
    std::vector<IntPoly> coords;
    for (int i = 0; i < g->num_irreps(); ++i) coords.push_back(IntPoly::one_minus(i % 5 + 1));
    for (auto _ : st) benchmark::DoNotOptimize(class_values(*g, coords, exec));
    st.SetLabel(g->type().name());
}

}  // namespace

BENCHMARK_CAPTURE(gram, serial, Exec::Serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(gram, parallel, Exec::Parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(values, serial, Exec::Serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(values, parallel, Exec::Parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
