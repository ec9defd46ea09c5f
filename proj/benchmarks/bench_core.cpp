// Microbenchmarks for the hot paths of a sweep: snapshot construction,
// batched routing, metric evaluation, and the frame codec.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mlsn/ccsds.hpp"
#include "mlsn/config.hpp"
#include "mlsn/metrics.hpp"
#include "mlsn/orbits.hpp"
#include "mlsn/routing.hpp"
#include "mlsn/topology.hpp"

namespace {

struct Fixture {
  mlsn::SweepConfig cfg = mlsn::default_config();
  mlsn::Constellation constellation =
      mlsn::build_walker_constellation(cfg.walker, cfg.t_start_unix_s);
  mlsn::Scenario scenario = cfg.scenarios().front();

  mlsn::NetworkSnapshot snapshot(double offset_s = 0.0) const {
    return mlsn::build_snapshot(cfg.t_start_unix_s + offset_s, constellation, cfg.geo_slots,
                                cfg.gs, scenario, cfg.topology);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_BuildSnapshot(benchmark::State& state) {
  const auto& f = fixture();
  double offset = 0.0;
  for (auto _ : state) {
    auto snap = f.snapshot(offset);
    benchmark::DoNotOptimize(snap.edges.data());
    offset += 600.0;
  }
}
BENCHMARK(BM_BuildSnapshot);

void BM_LlmPathsEpoch(benchmark::State& state) {
  const auto snap = fixture().snapshot(10 * 600.0);
  for (auto _ : state) {
    auto paths = mlsn::compute_llm_paths(snap);
    benchmark::DoNotOptimize(paths.data());
  }
}
BENCHMARK(BM_LlmPathsEpoch);

void BM_GlmPathsEpoch(benchmark::State& state) {
  const auto snap = fixture().snapshot(10 * 600.0);
  for (auto _ : state) {
    auto paths = mlsn::compute_glm_paths(snap);
    benchmark::DoNotOptimize(paths.data());
  }
}
BENCHMARK(BM_GlmPathsEpoch);

void BM_EvaluateMissions(benchmark::State& state) {
  const auto& f = fixture();
  const auto snap = f.snapshot(10 * 600.0);
  const auto paths = mlsn::compute_llm_paths(snap);
  const mlsn::DelayConstants consts = f.cfg.delays;
  for (auto _ : state) {
    double acc = 0.0;
    for (std::size_t d = 0; d < paths.size(); ++d) {
      const auto r = mlsn::evaluate_mission(snap.epoch_unix_s, static_cast<int>(d), "S1",
                                            paths[d], f.cfg.frame_bytes, consts);
      if (r.ok()) acc += r.latency_s;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EvaluateMissions);

void BM_EncodeTcFrame(benchmark::State& state) {
  mlsn::TcFrameHeader h;
  h.spacecraft_id = 42;
  std::vector<std::uint8_t> payload(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(1);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
  h.frame_length_field =
      static_cast<std::uint16_t>(mlsn::TcFrameHeader::encoded_bytes + payload.size() + 2 - 1);
  for (auto _ : state) {
    auto frame = mlsn::encode_tc_frame(h, payload);
    benchmark::DoNotOptimize(frame.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(payload.size()));
}
BENCHMARK(BM_EncodeTcFrame)->Arg(64)->Arg(1017);

void BM_Crc16(benchmark::State& state) {
  std::vector<std::uint8_t> data(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(2);
  for (auto& b : data) b = static_cast<std::uint8_t>(rng());
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlsn::crc16_ccitt_false(data));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_Crc16)->Arg(1024)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
