// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "odq/engine.hpp"
#include "odq/profiler.hpp"
#include "odq/spec_dsl.hpp"
#include "fixtures.hpp"

namespace {

const odq::Dataset& register_data() {
  static const odq::Dataset ds = [] {
    odq::fixtures::RegisterSeeds s;
    s.name_nulls = 1;
    s.type_text_nulls = 350;
    s.registered_nulls = 24;
    s.address_nulls = 92;
    s.address_id_nulls = 1130;
    s.address_overlap = 91;
    s.region_nulls = 70165;
    s.city_nulls = 24762;
    s.post_nulls = 5124;
    s.post_short = 1;
    s.atv_nulls = 1143;
    s.atv_short = 237;
    s.terminated_unclosed = 161;
    return odq::fixtures::register_dataset(100000, s);
  }();
  return ds;
}

const odq::DataObjectClass& register_object() {
  static const odq::QualitySpec spec =
      odq::parse_spec(odq::fixtures::read_file(odq::fixtures::spec_dir() / "register_lv.dq"));
  return spec.objects[0];
}

void BM_EvaluateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(odq::evaluate_dataset_serial(register_data(), register_object()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(register_data().record_count()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  odq::EvaluateOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odq::evaluate_dataset(register_data(), register_object(), o));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(register_data().record_count()));
}

void BM_ProfileSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(odq::profile_dataset_serial(register_data()));
}

void BM_ProfileParallel(benchmark::State& state) {
  odq::ProfileOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odq::profile_dataset(register_data(), o));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
