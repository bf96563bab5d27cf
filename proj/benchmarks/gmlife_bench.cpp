#include <benchmark/benchmark.h>

#include "gmlife/life_values.hpp"
#include "gmlife/oracle.hpp"
#include "gmlife/special_fn.hpp"
#include "table.hpp"

namespace {

const gmlife::GmParams kRemark{0.001, 0.000012, 0.101314};
const gmlife::Rate kRemarkRate{0.026559};

void BM_UpperIncGamma(benchmark::State& state) {
  const double eta = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::upper_inc_gamma_general(eta, 0.37));
  }
}
BENCHMARK(BM_UpperIncGamma)->Arg(-20)->Arg(-2)->Arg(3)->Arg(12);

void BM_ExpScaledLargeArgument(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::exp_scaled_upper_inc_gamma(0.727984, 800.0));
  }
}
BENCHMARK(BM_ExpScaledLargeArgument);

void BM_Annuity(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::annuity(kRemark, kRemarkRate, x));
  }
}
BENCHMARK(BM_Annuity)->Arg(0)->Arg(65)->Arg(110);

void BM_AnnuityByQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::oracle::integrate_survival(kRemark, kRemarkRate, 65.0, 1e-10));
  }
}
BENCHMARK(BM_AnnuityByQuadrature);

void BM_CommutationRow(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::commutation_row(kRemark, kRemarkRate, 40.0, true));
  }
}
BENCHMARK(BM_CommutationRow);

void BM_BuildTable(benchmark::State& state) {
  gmlife::table::TableSpec spec;
  spec.params = kRemark;
  spec.delta = kRemarkRate;
  spec.x_max = 110.0;
  spec.double_rate = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmlife::table::build_table(spec));
  }
}
BENCHMARK(BM_BuildTable)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
