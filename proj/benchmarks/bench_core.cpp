#include "ratbase/automaton.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/spans.hpp"
#include "ratbase/transducer.hpp"

#include <benchmark/benchmark.h>

using namespace ratbase;

namespace {

RationalBase base_from_range(const benchmark::State& state) {
    switch (state.range(0)) {
        case 0: return RationalBase(Int(3), Int(2));
        case 1: return RationalBase(Int(4), Int(3));
        default: return RationalBase(Int(10), Int(3));
    }
}

void BM_Represent(benchmark::State& state) {
    RationalBase base = base_from_range(state);
    Int n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(represent(base, n));
        n += 997;
    }
}
BENCHMARK(BM_Represent)->Arg(0)->Arg(1)->Arg(2);

void BM_EvaluateRoundtrip(benchmark::State& state) {
    RationalBase base = base_from_range(state);
    DigitWord word = represent(base, Int(123456789));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(base, word));
}
BENCHMARK(BM_EvaluateRoundtrip)->Arg(0)->Arg(1)->Arg(2);

void BM_MinimalWordPrefix(benchmark::State& state) {
    RationalBase base(Int(3), Int(2));
    std::size_t k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_word(base, State(1)).take(k));
    state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_MinimalWordPrefix)->Arg(64)->Arg(256)->Arg(1024);

void BM_TransducerApply(benchmark::State& state) {
    RationalBase base(Int(7), Int(3));
    SuccessorTransducer transducer(base);
    std::size_t k = static_cast<std::size_t>(state.range(0));
    DigitWord input = minimal_word(base, State(5)).take(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(transducer.apply(State(0), input));
    state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_TransducerApply)->Arg(64)->Arg(256)->Arg(1024);

void BM_SpanEnclosure(benchmark::State& state) {
    RationalBase base(Int(4), Int(3));
    std::size_t k = static_cast<std::size_t>(state.range(0));
    Int n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(span(base, n, k));
        n += 31;
    }
}
BENCHMARK(BM_SpanEnclosure)->Arg(16)->Arg(48);

void BM_SpanMidpoint(benchmark::State& state) {
    RationalBase base(Int(4), Int(3));
    std::size_t k = static_cast<std::size_t>(state.range(0));
    Int n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(span_midpoint(base, n, k));
        n += 31;
    }
}
BENCHMARK(BM_SpanMidpoint)->Arg(16)->Arg(48);

void BM_ReachableInterval(benchmark::State& state) {
    RationalBase base(Int(7), Int(3));
    auto tree = LazyAutomaton::tree(base);
    unsigned depth = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tree.reachable_interval(State(0), depth));
}
BENCHMARK(BM_ReachableInterval)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
