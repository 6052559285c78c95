// Parallel kernels vs their serial reference implementations. The pairs
// produce bit-identical results (asserted in the unit tests); these
// benchmarks measure what the OpenMP versions buy on a given machine.

#include <benchmark/benchmark.h>

#include "qweyl/epower.hpp"
#include "qweyl/families.hpp"
#include "qweyl/weyl.hpp"

namespace {

void BM_EntanglingPowerMc(benchmark::State& state) {
  const qweyl::Gate4 u = qweyl::cnot_gate();
  for (auto _ : state) {
    const qweyl::EpEstimate est =
        qweyl::entangling_power_mc(u, state.range(0), 7);
    benchmark::DoNotOptimize(est.mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EntanglingPowerMc)->Arg(1 << 14)->Arg(1 << 17);

void BM_EntanglingPowerMcSerial(benchmark::State& state) {
  const qweyl::Gate4 u = qweyl::cnot_gate();
  for (auto _ : state) {
    const qweyl::EpEstimate est =
        qweyl::entangling_power_mc_serial(u, state.range(0), 7);
    benchmark::DoNotOptimize(est.mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EntanglingPowerMcSerial)->Arg(1 << 14)->Arg(1 << 17);

void BM_PeVolume(benchmark::State& state) {
  for (auto _ : state) {
    const qweyl::PeVolumeEstimate est = qweyl::pe_volume(state.range(0), 7);
    benchmark::DoNotOptimize(est.fraction);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PeVolume)->Arg(1 << 16)->Arg(1 << 20);

void BM_PeVolumeSerial(benchmark::State& state) {
  for (auto _ : state) {
    const qweyl::PeVolumeEstimate est =
        qweyl::pe_volume_serial(state.range(0), 7);
    benchmark::DoNotOptimize(est.fraction);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PeVolumeSerial)->Arg(1 << 16)->Arg(1 << 20);

void BM_SampleChamber(benchmark::State& state) {
  for (auto _ : state) {
    const auto pts = qweyl::sample_chamber(state.range(0), 7);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleChamber)->Arg(1 << 16);

void BM_SampleChamberSerial(benchmark::State& state) {
  for (auto _ : state) {
    const auto pts = qweyl::sample_chamber_serial(state.range(0), 7);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleChamberSerial)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
