#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mlsn/errors.hpp"
#include "mlsn/metrics.hpp"
#include "mlsn/topology.hpp"
#include "support.hpp"

using namespace mlsn;

namespace {

Hop make_hop(double distance_m, double rate_bps, double phi,
             LinkClass cls = LinkClass::LeoLeo) {
  Hop h;
  h.from = 0;
  h.to = 1;
  h.cls = cls;
  h.distance_m = distance_m;
  h.rate_bps = rate_bps;
  h.phi = phi;
  return h;
}

Path make_path(std::vector<Hop> hops) {
  Path p;
  p.status = PathStatus::Ok;
  p.hops = std::move(hops);
  for (const Hop& h : p.hops) p.total_length_m += h.distance_m;
  p.relay_hop_count = std::max(0, static_cast<int>(p.hops.size()) - 1);
  return p;
}

constexpr DelayConstants kNoDelay{0.0, 0.0, consts::default_signal_speed_mps};

}  // namespace

TEST(Latency, UnitComponentsExample) {
  // One hop sized so propagation and transmission are one second each.
  const auto path = make_path({make_hop(2.998e8, 8192.0, 1.0)});
  EXPECT_DOUBLE_EQ(path_latency(path, 1024.0, kNoDelay), 2.0);

  // Per-hop constants are charged once per hop.
  DelayConstants withk = kNoDelay;
  withk.processing_delay_s = 100e-6;
  withk.queuing_delay_s = 250e-6;
  EXPECT_DOUBLE_EQ(path_latency(path, 1024.0, withk), 2.0 + 350e-6);
  const auto two = make_path({make_hop(2.998e8, 8192.0, 1.0), make_hop(2.998e8, 8192.0, 1.0)});
  EXPECT_DOUBLE_EQ(path_latency(two, 1024.0, withk), 4.0 + 700e-6);
}

TEST(Latency, LBandDescentDeltaMatchesReportedMeans) {
  // The same hop under an L-band and an optical rate: the latency excess
  // depends only on the transmission term, reproducing the reported mean
  // gaps of 27.3 ms (M = 512) and 54.6 ms (M = 1024).
  const auto lband = make_path({make_hop(4.0e7, 150e3, 0.999, LinkClass::GeoLeo)});
  const auto fso = make_path({make_hop(4.0e7, 1.8e9, 0.999, LinkClass::GeoLeo)});
  const double d512 = path_latency(lband, 512.0, kNoDelay) - path_latency(fso, 512.0, kNoDelay);
  EXPECT_NEAR(d512, 27.30e-3, 0.01e-3);
  const double d1024 = path_latency(lband, 1024.0, kNoDelay) - path_latency(fso, 1024.0, kNoDelay);
  EXPECT_NEAR(d1024, 54.61e-3, 0.02e-3);
  // Doubling M doubles the gap; subtracting the shared propagation term
  // costs a few ulps, so this is near-equality rather than bitwise.
  EXPECT_NEAR(d1024, 2.0 * d512, 1e-15);
}

TEST(Latency, ValidationAndMonotonicity) {
  EXPECT_THROW(path_latency(Path{}, 1024.0, kNoDelay), ValidationError);
  const auto path = make_path({make_hop(1e6, 1e6, 0.99), make_hop(2e6, 324e6, 0.998)});
  EXPECT_THROW(path_latency(path, 0.0, kNoDelay), ValidationError);
  EXPECT_THROW(path_latency(path, -5.0, kNoDelay), ValidationError);
  double prev = 0.0;
  for (double m : {64.0, 128.0, 256.0, 512.0, 1024.0}) {
    const double d = path_latency(path, m, kNoDelay);
    EXPECT_GT(d, prev);
    prev = d;
  }
}

TEST(Reliability, SeriesProductExamples) {
  std::vector<Hop> isl;
  for (int i = 0; i < 8; ++i) isl.push_back(make_hop(1e6, 324e6, 0.998));
  const auto p8 = make_path(isl);
  EXPECT_NEAR(path_reliability(p8), 0.98412, 1e-5);
  EXPECT_DOUBLE_EQ(path_reliability(p8), std::pow(0.998, 8.0));

  const auto glm3 = make_path({make_hop(4e7, 324e6, 1.0, LinkClass::GsGeo),
                               make_hop(7e7, 324e6, 0.999, LinkClass::GeoGeo),
                               make_hop(4e7, 324e6, 0.999, LinkClass::GeoLeo)});
  EXPECT_DOUBLE_EQ(path_reliability(glm3), 0.999 * 0.999);
  EXPECT_DOUBLE_EQ(path_reliability(glm3), 0.998001);

  // A perfectly reliable hop leaves the product unchanged.
  auto longer = p8;
  longer.hops.push_back(make_hop(1e6, 324e6, 1.0, LinkClass::GsLeo));
  EXPECT_DOUBLE_EQ(path_reliability(longer), path_reliability(p8));

  // Appending any hop never increases series reliability.
  auto worse = p8;
  worse.hops.push_back(make_hop(1e6, 324e6, 0.97));
  EXPECT_LE(path_reliability(worse), path_reliability(p8));

  EXPECT_THROW(path_reliability(Path{}), ValidationError);
}

TEST(Reliability, ParallelFormOnPath) {
  const auto p = make_path({make_hop(1e6, 1e6, 0.9), make_hop(1e6, 1e6, 0.8)});
  EXPECT_DOUBLE_EQ(path_reliability(p, ReliabilityModel::ParallelForm), 1.0 - 0.1 * 0.2);
  EXPECT_DOUBLE_EQ(path_reliability(p, ReliabilityModel::Series), 0.72);

  EXPECT_EQ(reliability_model_from_string("series"), ReliabilityModel::Series);
  EXPECT_EQ(reliability_model_from_string("parallel"), ReliabilityModel::ParallelForm);
  EXPECT_EQ(to_string(ReliabilityModel::Series), "series");
  EXPECT_EQ(to_string(ReliabilityModel::ParallelForm), "parallel");
  EXPECT_THROW(reliability_model_from_string("mixed"), ValidationError);
}

TEST(Reliability, ParallelCombination) {
  const double vals[] = {0.98412, 0.998001};
  EXPECT_NEAR(parallel_reliability(vals), 0.9999683, 1e-7);
  EXPECT_GT(parallel_reliability(vals), 0.9999);

  const double one[] = {0.73};
  EXPECT_DOUBLE_EQ(parallel_reliability(one), 0.73);
  const double zeros[] = {0.0, 0.0};
  EXPECT_DOUBLE_EQ(parallel_reliability(zeros), 0.0);

  EXPECT_THROW(parallel_reliability({}), ValidationError);
  const double bad[] = {0.5, 1.5};
  EXPECT_THROW(parallel_reliability(bad), ValidationError);
  const double neg[] = {-0.1};
  EXPECT_THROW(parallel_reliability(neg), ValidationError);
}

TEST(Metrics, MatchRandomizedOracles) {
  std::mt19937 rng(20220101);
  std::uniform_int_distribution<int> hop_count(1, 20);
  std::uniform_real_distribution<double> dist(1e5, 8e7);
  std::uniform_real_distribution<double> phi(0.9, 1.0);
  std::uniform_real_distribution<double> mk(0.0, 1e-3);
  std::uniform_real_distribution<double> frame(16.0, 65542.0);
  const double rates[] = {150e3, 324e6, 1.8e9, 8192.0, 1e6};

  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Hop> hops;
    const int n = hop_count(rng);
    for (int i = 0; i < n; ++i)
      hops.push_back(make_hop(dist(rng), rates[rng() % 5], phi(rng)));
    const auto path = make_path(std::move(hops));
    DelayConstants c;
    c.queuing_delay_s = mk(rng);
    c.processing_delay_s = mk(rng);
    const double m = frame(rng);

    const double lat = path_latency(path, m, c);
    const double want_lat = testsupport::naive_latency(path, m, c);
    EXPECT_LT(std::abs(lat - want_lat) / want_lat, 1e-12);

    const double rel = path_reliability(path);
    const double want_rel = testsupport::naive_reliability(path);
    EXPECT_LT(std::abs(rel - want_rel) / want_rel, 1e-12);
  }
}

TEST(Metrics, ScenarioOrderingOnFixedPath) {
  // A representative GLM-shaped route touching every substituted class.
  struct Leg {
    double d;
    LinkClass cls;
  };
  const std::vector<Leg> legs = {{3.8e7, LinkClass::GsGeo},
                                 {7.2e7, LinkClass::GeoGeo},
                                 {3.6e7, LinkClass::GeoLeo}};
  const auto scens = builtin_scenarios(LinkRates{}, ScenarioParams{});
  auto latency_under = [&](const Scenario& s) {
    std::vector<Hop> hops;
    for (const auto& leg : legs)
      hops.push_back(make_hop(leg.d, s.rate_for(leg.cls), s.phi_for(leg.cls), leg.cls));
    return path_latency(make_path(std::move(hops)), s.frame_bytes,
                        {s.queuing_delay_s, s.processing_delay_s,
                         consts::default_signal_speed_mps});
  };
  const double s1 = latency_under(scens[0]);
  const double s2 = latency_under(scens[1]);
  const double s3 = latency_under(scens[2]);
  const double s4 = latency_under(scens[3]);
  EXPECT_LE(s2, s3);
  EXPECT_LE(s3, s1);
  EXPECT_GE(s4, s3);  // the path has a GEO_LEO hop
}

TEST(SppLatency, PlanCompositionAndExactIdentity) {
  const auto path = make_path({make_hop(2.4e7, 324e6, 0.999), make_hop(3e6, 1.8e9, 0.998)});
  DelayConstants c;
  c.processing_delay_s = 100e-6;

  // Single frame degenerates to the plain latency.
  EXPECT_EQ(spp_mission_latency(path, 1024.0, 1024.0, c), path_latency(path, 1024.0, c));

  // Full-frame case is an exact multiple, bit for bit. 128 x 512 B is the
  // largest packet that still fits the 65542 B ceiling; the 64 B frame run
  // exercises a large frame count.
  for (int n : {2, 7, 64, 128}) {
    EXPECT_EQ(spp_mission_latency(path, n * 512.0, 512.0, c),
              static_cast<double>(n) * path_latency(path, 512.0, c));
  }
  EXPECT_EQ(spp_mission_latency(path, 1000 * 64.0, 64.0, c),
            1000.0 * path_latency(path, 64.0, c));

  // Capacity packet: 65542 B in 1024 B frames = 64 full + one 6 B tail.
  const double total = spp_mission_latency(path, 65542.0, 1024.0, c);
  EXPECT_DOUBLE_EQ(total, 64.0 * path_latency(path, 1024.0, c) + path_latency(path, 6.0, c));

  // More frames cost more; bigger frames mean fewer frames and less total
  // time on transmission-light paths.
  EXPECT_GT(spp_mission_latency(path, 65542.0, 512.0, c), total);
}

TEST(Mission, EvaluateFillsMetricsOnlyWhenOk) {
  const auto path = make_path({make_hop(2.998e8, 8192.0, 0.99, LinkClass::GsLeo)});
  const auto r = evaluate_mission(1000.0, 7, "S1", path, 1024.0, kNoDelay,
                                  ReliabilityModel::Series, 2048.0);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.destination, 7);
  EXPECT_EQ(r.scheme, "LLM");
  EXPECT_EQ(r.scenario, "S1");
  EXPECT_DOUBLE_EQ(r.latency_s, 2.0);
  EXPECT_DOUBLE_EQ(r.reliability, 0.99);
  EXPECT_EQ(r.relay_hop_count, 0);
  EXPECT_DOUBLE_EQ(r.path_length_m, 2.998e8);
  EXPECT_DOUBLE_EQ(r.spp_total_latency_s, 2.0 * path_latency(path, 1024.0, kNoDelay));

  // SPP evaluation off.
  const auto r2 = evaluate_mission(1000.0, 7, "S1", path, 1024.0, kNoDelay);
  EXPECT_TRUE(std::isnan(r2.spp_total_latency_s));

  Path dead;
  dead.scheme = Scheme::Glm;
  dead.status = PathStatus::NoContact;
  const auto rf = evaluate_mission(1000.0, 3, "S2", dead, 1024.0, kNoDelay);
  EXPECT_FALSE(rf.ok());
  EXPECT_EQ(rf.status, PathStatus::NoContact);
  EXPECT_EQ(rf.scheme, "GLM");
  EXPECT_TRUE(std::isnan(rf.latency_s));
  EXPECT_TRUE(std::isnan(rf.reliability));
  EXPECT_TRUE(std::isnan(rf.path_length_m));
  EXPECT_EQ(rf.relay_hop_count, -1);
}

TEST(Mission, ComposeParallel) {
  const auto fast = make_path({make_hop(1e7, 324e6, 0.98, LinkClass::GsLeo)});
  const auto slow = make_path({make_hop(8e7, 324e6, 0.999, LinkClass::GsGeo)});
  auto llm = evaluate_mission(0.0, 1, "S1", fast, 1024.0, kNoDelay);
  auto glm = evaluate_mission(0.0, 1, "S1", slow, 1024.0, kNoDelay);
  glm.scheme = "GLM";

  const auto both = compose_parallel(llm, glm);
  EXPECT_EQ(both.scheme, "LLM-GLM");
  EXPECT_DOUBLE_EQ(both.latency_s, llm.latency_s);
  EXPECT_DOUBLE_EQ(both.reliability, 1.0 - (1.0 - 0.98) * (1.0 - 0.999));
  EXPECT_GT(both.reliability, 0.999);

  // One side failed: the survivor passes through untouched.
  Path dead;
  dead.status = PathStatus::NoContact;
  const auto failed = evaluate_mission(0.0, 1, "S1", dead, 1024.0, kNoDelay);
  const auto only_glm = compose_parallel(failed, glm);
  EXPECT_EQ(only_glm.scheme, "GLM");
  EXPECT_DOUBLE_EQ(only_glm.reliability, glm.reliability);
  const auto only_llm = compose_parallel(llm, failed);
  EXPECT_EQ(only_llm.scheme, "LLM");

  // Both failed: composite is failed too.
  const auto none = compose_parallel(failed, failed);
  EXPECT_FALSE(none.ok());
  EXPECT_EQ(none.scheme, "LLM-GLM");

  // Mismatched missions are rejected.
  auto other = glm;
  other.destination = 2;
  EXPECT_THROW(compose_parallel(llm, other), DomainError);
}
