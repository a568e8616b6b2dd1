#include <benchmark/benchmark.h>

#include "wmn/cover.hpp"
#include "wmn/jet_checks.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/sampling.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/verma.hpp"

using namespace wmn;

static void BM_Bracket(benchmark::State& state) {
  Algebra alg{Kind::Wmn, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Sampler rng(1);
  auto x = rng.field(alg, 4, 3), y = rng.field(alg, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_Bracket)->Args({1, 1})->Args({2, 2})->Args({3, 3});

static void BM_TensorAct(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  Algebra alg{Kind::Wmn, m, 1};
  std::vector<Scalar> lam{0};
  for (int i = 1; i <= m; ++i) lam.push_back(frac(1, i + 1));
  auto spec = make_tensor_spec(alg, natural_rep(m, 1), lam);
  Sampler rng(2);
  auto x = rng.field(alg, 4, 3);
  auto w = rng.tensor_vector(spec, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(act(spec, x, w));
}
BENCHMARK(BM_TensorAct)->Arg(1)->Arg(2)->Arg(3);

static void BM_SmashRelations(benchmark::State& state) {
  auto u = tensor_fiber(natural_rep(1, 1), {2, frac(1, 2)}, {.has_d0 = true});
  for (auto _ : state) benchmark::DoNotOptimize(check_smash_relations(u, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SmashRelations)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_FitJets(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  std::vector<Scalar> lam{2};
  for (int i = 1; i <= m; ++i) lam.push_back(frac(1, i + 1));
  auto u = tensor_fiber(natural_rep(m, 1), lam, {.has_d0 = true});
  for (auto _ : state) benchmark::DoNotOptimize(fit_jets(u));
}
BENCHMARK(BM_FitJets)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_JetsVsSmash(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jets_vs_smash(2, 1, true, 3, true));
}
BENCHMARK(BM_JetsVsSmash)->Unit(benchmark::kMillisecond);

static void BM_WindowReduce(benchmark::State& state) {
  auto spec = make_tensor_spec(Algebra{Kind::Wmn, 1, 1}, natural_rep(1, 1), {0, frac(1, 3)});
  int N = minimal_N_search(spec, 6, {1, 1, 1});
  auto tau = VectorField::basis(spec.alg, Monomial{{0, 2}, 0}, Generator::d(1));
  auto c = psi(tau, TensorVector::basis(1, 1, Monomial{{0, static_cast<int>(state.range(0))}, 1}, 0));
  for (auto _ : state) benchmark::DoNotOptimize(window_reduce(spec, c, N));
}
BENCHMARK(BM_WindowReduce)->Arg(4)->Arg(8)->Arg(16);

static void BM_VermaExact(benchmark::State& state) {
  auto hw = make_hw_spec(trivial_rep(0, 1), {1});
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radical_at(hw, depth, depth + 2));
}
BENCHMARK(BM_VermaExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
