/*
   Copyright 2026 The semirad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "semirad/arange.hpp"
#include "semirad/bounds.hpp"
#include "semirad/linalg.hpp"
#include "semirad/polyzero.hpp"
#include "semirad/semihilbert.hpp"

namespace {

using namespace semirad;

ComplexMatrix gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) m(i, k) = Complex(g(rng), g(rng));
  return m;
}

SemiOperator random_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = gaussian(n, rng);
  ComplexMatrix a = g.adjoint() * g / static_cast<double>(n);
  a.diagonal().array() += 0.1;
  return make_operator(make_context(a), gaussian(n, rng));
}

void BM_HermitianEig(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix g = gaussian(static_cast<std::size_t>(state.range(0)), rng);
  const ComplexMatrix h = g + g.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(linalg::hermitian_eig(h, kDefaultHermTol));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(6)->Arg(16)->Arg(64);

void BM_NumericalRadius(benchmark::State& state) {
  const SemiOperator op = random_instance(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a_numerical_radius(op));
}
BENCHMARK(BM_NumericalRadius)->Arg(2)->Arg(6)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BoundReport(benchmark::State& state) {
  const SemiOperator op = random_instance(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(op));
}
BENCHMARK(BM_BoundReport)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OptimizeWeights(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(state.range(0)));
  for (Complex& z : c) z = Complex(u(rng), u(rng));
  const PolynomialSpec p = PolynomialSpec::monic(c);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_weights(p));
}
BENCHMARK(BM_OptimizeWeights)->Arg(3)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
