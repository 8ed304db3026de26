#include <benchmark/benchmark.h>

#include "ricopoly/stieltjes.hpp"
#include "ricopoly/toda.hpp"
#include "ricopoly/zeros.hpp"

using namespace ricopoly;
using R = Rational;

namespace {

void BM_generate_family_rational(benchmark::State& state) {
  const auto seqs = CoefficientSequences<R>::ljacobi(R(-12), R(-10));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_family(seqs, n));
  }
}
BENCHMARK(BM_generate_family_rational)->Arg(8)->Arg(12);

void BM_generate_family_double(benchmark::State& state) {
  const auto seqs = CoefficientSequences<double>::ljacobi(-12.0, -10.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_family(seqs, n));
  }
}
BENCHMARK(BM_generate_family_double)->Arg(8)->Arg(12);

void BM_real_zeros_degree8(benchmark::State& state) {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto p = to_double_poly(generate_family(seqs, 8).back());
  for (auto _ : state) {
    benchmark::DoNotOptimize(real_zeros(p));
  }
}
BENCHMARK(BM_real_zeros_degree8);

void BM_convergent_rational(benchmark::State& state) {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto cf = ri_fraction(seqs);
  const R z(7, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convergent(cf, z, 12));
  }
}
BENCHMARK(BM_convergent_rational);

void BM_toda_frame(benchmark::State& state) {
  const DiscreteMeasure<double> m({1.0, 1.5, 2.0, 2.5, 3.0, 3.5}, {1, 1, 1, 1, 1, 1});
  const TodaParams<double> par{1.0, 0.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeffs_from_moments(m, par, 5));
  }
}
BENCHMARK(BM_toda_frame);

void BM_rk4_integrate(benchmark::State& state) {
  const DiscreteMeasure<double> m({1.0, 1.5, 2.0, 2.5, 3.0, 3.5}, {1, 1, 1, 1, 1, 1});
  const TodaParams<double> par{1.0, 0.0, 0.0};
  const auto start = coeffs_from_moments(m, par, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_flow(start, par, nullptr, 0.1, 200));
  }
}
BENCHMARK(BM_rk4_integrate);

}  // namespace

BENCHMARK_MAIN();
