#include <benchmark/benchmark.h>

#include "subgrowth/asymptotics.hpp"
#include "subgrowth/catalog.hpp"
#include "subgrowth/orbits.hpp"

using namespace subgrowth;

static void BM_DirichletMul(benchmark::State& state) {
  std::size_t n = state.range(0);
  auto ones = dirichlet::IntSeq::ones(n);
  auto shifted = dirichlet::factor_coeffs({1, 1}, n);
  for (auto _ : state) {
    auto r = dirichlet::dirichlet_mul(ones, shifted);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DirichletMul)->Arg(10000)->Arg(100000);

static void BM_Coeffs(benchmark::State& state) {
  auto cat = groups::Catalog::builtin();
  const auto& heis = cat.get("heis");
  for (auto _ : state) {
    auto c = groups::coeffs(heis, state.range(0));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Coeffs)->Arg(10000)->Arg(100000);

static void BM_OrbitTables(benchmark::State& state) {
  auto cat = groups::Catalog::builtin();
  auto coeff = groups::coeffs(cat.get("Z2"), state.range(0));
  for (auto _ : state) {
    auto rows = orbits::orbit_tables(coeff, state.range(0));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_OrbitTables)->Arg(50)->Arg(100)->Arg(200);

static void BM_WEval(benchmark::State& state) {
  auto cat = groups::Catalog::builtin();
  auto coeff = groups::coeffs(cat.get("Z2"), 100000);
  asymptotics::WFunctions w(coeff, 2.0);
  double u = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(w.eval(0, u, 1e-9));
}
BENCHMARK(BM_WEval);

static void BM_W0Inverse(benchmark::State& state) {
  auto cat = groups::Catalog::builtin();
  auto coeff = groups::coeffs(cat.get("Z2"), 100000);
  asymptotics::WFunctions w(coeff, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(w.w0_inverse(5000.0, 1e-10));
}
BENCHMARK(BM_W0Inverse);

static void BM_SaddleIntegral(benchmark::State& state) {
  auto cat = groups::Catalog::builtin();
  auto coeff = groups::coeffs(cat.get("Z2"), 4000);
  asymptotics::WFunctions w(coeff, 2.0);
  for (auto _ : state) {
    auto p = asymptotics::saddle_params(w, state.range(0), 1.0, 1e-8);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SaddleIntegral)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
