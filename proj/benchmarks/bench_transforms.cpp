// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

#include <benchmark/benchmark.h>

#include <antilim/kernel.hpp>

using namespace antilim;

static void BM_guard_divide(benchmark::State& state)
{
	SafeguardPolicy<double> pol;
	double a = 1.0;
	for (auto _ : state)
	{
		a += 1e-3;
		benchmark::DoNotOptimize(guard_divide(a, a - 1.0, pol));
	}
}
BENCHMARK(BM_guard_divide);

static void BM_pochhammer(benchmark::State& state)
{
	const long m = state.range(0);
	for (auto _ : state)
		benchmark::DoNotOptimize(pochhammer(0.5, m));
}
BENCHMARK(BM_pochhammer)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
