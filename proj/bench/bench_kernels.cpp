// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "atoric/kernels.hpp"

namespace {

using namespace atoric;
using kernels::Backend;

kernels::EvalPlan make_plan(std::size_t columns, std::size_t rows) {
    std::vector<UPoly> factors;
    for (long c : {-2, -1, 0, 1, 2}) factors.push_back(UPoly::x() + UPoly::constant(Rational(c)));
    std::mt19937_64 rng(7);
    std::vector<std::vector<unsigned>> exps(columns, std::vector<unsigned>(factors.size()));
    for (auto& col : exps)
        for (auto& e : col) e = static_cast<unsigned>(rng() % 60);
    std::vector<Integer> points;
    for (std::size_t r = 0; r < rows; ++r) points.emplace_back(static_cast<long>(r) + 3);
    return kernels::EvalPlan(std::move(factors), std::move(exps), std::move(points));
}

std::vector<std::size_t> all_rows(std::size_t n) {
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return rows;
}

void BM_EvaluationRowsMod(benchmark::State& state) {
    const auto backend = static_cast<Backend>(state.range(0));
    const auto plan = make_plan(300, 300);
    const auto rows = all_rows(plan.rows());
    const modular::Word p = modular::large_primes(1)[0];
    for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluation_rows_mod(backend, plan, rows, p));
}

void BM_Residuals(benchmark::State& state) {
    const auto backend = static_cast<Backend>(state.range(0));
    const auto plan = make_plan(120, 120);
    const auto rows = all_rows(plan.rows());
    std::vector<Integer> coeffs;
    for (std::size_t v = 0; v < plan.columns(); ++v) coeffs.emplace_back(static_cast<long>(v * 37 % 101) - 50);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::residuals(backend, plan, rows, coeffs));
}

void BM_ScanLatticePoints(benchmark::State& state) {
    const auto backend = static_cast<Backend>(state.range(0));
    const std::vector<kernels::Point2> triangle = {
        kernels::Point2{Integer(0), Integer(0)}, kernels::Point2{Integer(1500), Integer(0)},
        kernels::Point2{Integer(0), Integer(1500)}};
    kernels::AffineLift lift{{0, 0, 1500}, {1, 0, -1}, {0, 1, -1}};
    for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_lattice_points(backend, triangle, lift));
}

}  // namespace

BENCHMARK(BM_EvaluationRowsMod)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residuals)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanLatticePoints)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
