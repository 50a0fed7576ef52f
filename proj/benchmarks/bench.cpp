#include <benchmark/benchmark.h>

#include "octic/certificate.hpp"

using namespace octic;

namespace {

std::vector<std::array<Fe, 3>> sample_points(const Ring& R3, Rng& rng, std::size_t n) {
  std::vector<std::array<Fe, 3>> pts;
  while (pts.size() < n) {
    std::array<Fe, 3> p{rng.field_element(R3.field), rng.field_element(R3.field), 1};
    bool dup = false;
    for (const auto& q : pts)
      if (q == p) dup = true;
    if (!dup) pts.push_back(p);
  }
  return pts;
}

Poly random_form(const Ring& R3, Rng& rng, int d) {
  std::vector<Term> terms;
  for (const Monomial& m : monomial_basis(R3, d)) terms.push_back({m, rng.field_element(R3.field)});
  return poly_from_terms(R3, std::move(terms));
}

void BM_RankKernel45(benchmark::State& state) {
  PrimeField F(10007);
  Rng rng(1);
  DenseMatrix M(36, 45);  // the octic system's shape: 12 nodes x 3 rows
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = rng.field_element(F);
  for (auto _ : state) benchmark::DoNotOptimize(rank_and_kernel(F, M));
}
BENCHMARK(BM_RankKernel45);

void BM_GroebnerTwoQuintics(benchmark::State& state) {
  Ring R3 = make_ring(10007, 3);
  Ring R2 = make_ring(10007, 2);
  Rng rng(2);
  Poly f1 = dehomogenize(R3, random_form(R3, rng, 5), R2, 2);
  Poly f2 = dehomogenize(R3, random_form(R3, rng, 5), R2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(R2, {f1, f2}));
}
BENCHMARK(BM_GroebnerTwoQuintics);

void BM_Charpoly32(benchmark::State& state) {
  PrimeField F(10007);
  Rng rng(3);
  DenseMatrix M(32, 32);
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j) M.at(i, j) = rng.field_element(F);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(F, M));
}
BENCHMARK(BM_Charpoly32);

void BM_LinearSystemNodes(benchmark::State& state) {
  Ring R3 = make_ring(10007, 3);
  Rng rng(4);
  auto pts = sample_points(R3, rng, 12);
  FatPointSystem S;
  for (const auto& p : pts) S.points.push_back({p, 2});
  for (auto _ : state) benchmark::DoNotOptimize(linear_system(R3, S, 8));
}
BENCHMARK(BM_LinearSystemNodes);

void BM_FullConstruction(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_construction(10007, seed, 10));
    ++seed;
  }
}
BENCHMARK(BM_FullConstruction)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
