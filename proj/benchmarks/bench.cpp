#include <benchmark/benchmark.h>

#include "fracto/fractions/composition.hpp"
#include "fracto/groupoid/iso_comma.hpp"
#include "fracto/laws/laws.hpp"

using namespace fracto;

namespace {

void BM_IsoComma(benchmark::State& state)
{
    InstanceGenerator gen(3);
    auto c = gen.groupoid();
    auto f = gen.essential_equivalence_into(c, std::size_t(state.range(0)));
    auto g = gen.essential_equivalence_into(c, std::size_t(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(iso_comma(f, g));
}
BENCHMARK(BM_IsoComma)->Arg(2)->Arg(4)->Arg(6);

void BM_Canonicalize(benchmark::State& state)
{
    InstanceGenerator gen(5);
    auto w = WClass::all_essential_equivalences();
    auto s = gen.span(gen.groupoid(), gen.groupoid(), w);
    auto d = gen.diagram_from(s, w);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize(d));
}
BENCHMARK(BM_Canonicalize);

void BM_SpanCompose(benchmark::State& state)
{
    InstanceGenerator gen(9);
    auto w = WClass::all_essential_equivalences();
    auto b = gen.groupoid();
    auto s1 = gen.span(gen.groupoid(), b, w);
    auto s2 = gen.span(b, gen.groupoid(), w);
    ChoiceData ch(w, state.range(0) ? SquareChoice::literal : SquareChoice::compact);
    for (auto _ : state)
        benchmark::DoNotOptimize(span_compose(s1, s2, ch));
}
BENCHMARK(BM_SpanCompose)->Arg(0)->Arg(1);

void BM_Pentagon(benchmark::State& state)
{
    auto w = WClass::all_essential_equivalences();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pentagon(w, 1, std::size_t(state.range(0))));
}
BENCHMARK(BM_Pentagon)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Laws(benchmark::State& state)
{
    auto w = state.range(0) ? WClass::essential_coverings() : WClass::all_essential_equivalences();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_all(w, 1, 20));
}
BENCHMARK(BM_Laws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}

BENCHMARK_MAIN();
