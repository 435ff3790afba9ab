#include <benchmark/benchmark.h>

#include <random>

#include "fintop/collapse.hpp"
#include "fintop/finite_poset.hpp"
#include "fintop/gadgets.hpp"
#include "fintop/homology.hpp"
#include "fintop/integer_matrix.hpp"
#include "fintop/rigidify.hpp"

namespace {

fintop::SimplicialComplex cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::vector<std::string>> f;
  for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) f.push_back({v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % n)]});
  return fintop::SimplicialComplex::from_facets(v, f);
}

void BM_BarycentricSubdivision(benchmark::State& state) {
  auto K = fintop::SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
  for (auto _ : state) benchmark::DoNotOptimize(fintop::barycentric_subdivision(K));
}
BENCHMARK(BM_BarycentricSubdivision);

void BM_BandAutomorphisms(benchmark::State& state) {
  auto band = fintop::band_complex(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fintop::automorphism_group(band.complex));
}
BENCHMARK(BM_BandAutomorphisms)->Arg(3)->Arg(6);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  const int n = static_cast<int>(state.range(0));
  fintop::IntMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(fintop::smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(12)->Arg(24);

void BM_CollapseW(benchmark::State& state) {
  auto w = fintop::w_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fintop::collapse(w));
}
BENCHMARK(BM_CollapseW)->Arg(8);

void BM_FacePoset(benchmark::State& state) {
  auto K = fintop::barycentric_subdivision(
      fintop::SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}}));
  for (auto _ : state) benchmark::DoNotOptimize(fintop::face_poset(K));
}
BENCHMARK(BM_FacePoset);

void BM_OrderComplexH1(benchmark::State& state) {
  auto band = fintop::band_complex(static_cast<int>(state.range(0)), 3);
  auto X = fintop::face_poset(band.complex);
  for (auto _ : state) benchmark::DoNotOptimize(fintop::order_complex_h1(X));
}
BENCHMARK(BM_OrderComplexH1)->Arg(6)->Arg(12);

void BM_RigidifyCycle(benchmark::State& state) {
  auto K = cycle(static_cast<int>(state.range(0)));
  auto G = fintop::automorphism_group(K);
  auto P = fintop::covering_walk(K);
  for (auto _ : state) benchmark::DoNotOptimize(fintop::rigidify(K, G, P));
}
BENCHMARK(BM_RigidifyCycle)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
