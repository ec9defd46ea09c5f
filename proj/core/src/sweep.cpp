#include "mlsn/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include <json.hpp>

#include "mlsn/ephemeris.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/routing.hpp"
#include "mlsn/time.hpp"
#include "mlsn/visibility.hpp"

namespace mlsn {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

struct Layout {
  long epochs = 0;
  int destinations = 0;
  int scenario_count = 0;

  std::size_t index(long epoch, int dest, int scheme, int scenario) const {
    return static_cast<std::size_t>(
        ((epoch * destinations + dest) * 2 + scheme) * scenario_count + scenario);
  }
  std::size_t total() const {
    return static_cast<std::size_t>(epochs) * destinations * 2 * scenario_count;
  }
};

double safe_mean(double sum, long n) { return n > 0 ? sum / static_cast<double>(n) : nan_v; }

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::vector<MissionResult> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto scenario_list = config.scenarios();
  const Layout layout{config.epoch_count(), config.walker.total(),
                      static_cast<int>(scenario_list.size())};

  const Constellation constellation =
      build_walker_constellation(config.walker, config.t_start_unix_s);
  EphemerisTable ephemeris;
  const EphemerisTable* ephemeris_ptr = nullptr;
  if (!config.ephemeris_csv.empty()) {
    ephemeris = EphemerisTable::load_csv(config.ephemeris_csv);
    ephemeris_ptr = &ephemeris;
  }

  std::vector<MissionResult> results(layout.total());

  auto run_epoch = [&](long e) {
    const double t = config.t_start_unix_s + static_cast<double>(e) * config.sample_step_s;
    const NetworkSnapshot geometry = build_geometry(t, constellation, config.geo_slots, config.gs,
                                                    config.topology, ephemeris_ptr);
    for (int si = 0; si < layout.scenario_count; ++si) {
      NetworkSnapshot snap = geometry;
      annotate_scenario(snap, scenario_list[static_cast<std::size_t>(si)]);
      const auto llm = compute_llm_paths(snap);
      const auto glm = compute_glm_paths(snap);
      for (int d = 0; d < layout.destinations; ++d) {
        const std::string& name = scenario_list[static_cast<std::size_t>(si)].name;
        results[layout.index(e, d, 0, si)] = evaluate_mission(
            t, d, name, llm[static_cast<std::size_t>(d)], config.frame_bytes, config.delays,
            config.reliability_model, config.spp_length_bytes);
        results[layout.index(e, d, 1, si)] = evaluate_mission(
            t, d, name, glm[static_cast<std::size_t>(d)], config.frame_bytes, config.delays,
            config.reliability_model, config.spp_length_bytes);
      }
    }
  };

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(layout.epochs));

  if (n_threads <= 1) {
    for (long e = 0; e < layout.epochs; ++e) run_epoch(e);
    return results;
  }

  std::atomic<long> next_epoch{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i)
    pool.emplace_back([&] {
      for (long e = next_epoch.fetch_add(1); e < layout.epochs; e = next_epoch.fetch_add(1))
        run_epoch(e);
    });
  for (auto& th : pool) th.join();
  return results;
}

namespace {

struct Accumulator {
  long ok = 0;
  double latency = 0.0;
  double reliability = 0.0;
  double relay = 0.0;
  double length = 0.0;
  double spp = 0.0;
  long spp_n = 0;

  void add(const MissionResult& r) {
    ++ok;
    latency += r.latency_s;
    reliability += r.reliability;
    relay += r.relay_hop_count;
    length += r.path_length_m;
    if (!std::isnan(r.spp_total_latency_s)) {
      spp += r.spp_total_latency_s;
      ++spp_n;
    }
  }
};

void fill_means(const Accumulator& a, double& latency, double& reliability, double& relay,
                double& length, double& spp) {
  latency = safe_mean(a.latency, a.ok);
  reliability = safe_mean(a.reliability, a.ok);
  relay = safe_mean(a.relay, a.ok);
  length = safe_mean(a.length, a.ok);
  spp = safe_mean(a.spp, a.spp_n);
}

}  // namespace

SweepStats aggregate(std::span<const MissionResult> results, const SweepConfig& config) {
  const auto scenario_list = config.scenarios();
  const Layout layout{config.epoch_count(), config.walker.total(),
                      static_cast<int>(scenario_list.size())};
  if (results.size() != layout.total())
    throw DomainError("aggregate: result count does not match the config layout");

  SweepStats stats;
  stats.epochs = layout.epochs;
  stats.destinations = layout.destinations;

  for (long e = 0; e < layout.epochs; ++e)
    if (results[layout.index(e, 0, 0, 0)].status == PathStatus::NoContact)
      ++stats.no_contact_epochs;
  stats.no_contact_epoch_fraction =
      static_cast<double>(stats.no_contact_epochs) / static_cast<double>(stats.epochs);

  for (int si = 0; si < layout.scenario_count; ++si) {
    ScenarioStats sc;
    sc.scenario = scenario_list[static_cast<std::size_t>(si)].name;

    for (int scheme = 0; scheme < 2; ++scheme) {
      SchemeStats& out = scheme == 0 ? sc.llm : sc.glm;
      out.scheme = scheme == 0 ? "LLM" : "GLM";
      Accumulator overall;
      std::vector<Accumulator> per_dest(static_cast<std::size_t>(layout.destinations));
      for (long e = 0; e < layout.epochs; ++e) {
        for (int d = 0; d < layout.destinations; ++d) {
          const MissionResult& r = results[layout.index(e, d, scheme, si)];
          ++out.entries;
          if (r.status == PathStatus::NoContact) ++out.no_contact;
          if (r.status == PathStatus::Unreachable) ++out.unreachable;
          if (!r.ok()) continue;
          overall.add(r);
          per_dest[static_cast<std::size_t>(d)].add(r);
          if (out.min_relay_hops < 0 || r.relay_hop_count < out.min_relay_hops)
            out.min_relay_hops = r.relay_hop_count;
          if (r.relay_hop_count > out.max_relay_hops) out.max_relay_hops = r.relay_hop_count;
        }
      }
      out.ok = overall.ok;
      fill_means(overall, out.mean_latency_s, out.mean_reliability, out.mean_relay_hops,
                 out.mean_path_length_m, out.mean_spp_total_latency_s);
      out.per_destination.resize(static_cast<std::size_t>(layout.destinations));
      for (int d = 0; d < layout.destinations; ++d) {
        DestinationStats& ds = out.per_destination[static_cast<std::size_t>(d)];
        ds.destination = d;
        ds.ok = per_dest[static_cast<std::size_t>(d)].ok;
        fill_means(per_dest[static_cast<std::size_t>(d)], ds.mean_latency_s, ds.mean_reliability,
                   ds.mean_relay_hops, ds.mean_path_length_m, ds.mean_spp_total_latency_s);
      }
    }

    double comp_latency = 0.0, comp_rel = 0.0, comp_min_rel = 2.0;
    double ill = 0.0, igl = 0.0, ilp = 0.0, igp = 0.0;
    for (long e = 0; e < layout.epochs; ++e) {
      for (int d = 0; d < layout.destinations; ++d) {
        const MissionResult& l = results[layout.index(e, d, 0, si)];
        const MissionResult& g = results[layout.index(e, d, 1, si)];
        if (!l.ok() || !g.ok()) continue;
        ++sc.composite.both_ok;
        const MissionResult c = compose_parallel(l, g);
        comp_latency += c.latency_s;
        comp_rel += c.reliability;
        comp_min_rel = std::min(comp_min_rel, c.reliability);
        ill += l.latency_s;
        igl += g.latency_s;
        ilp += l.path_length_m;
        igp += g.path_length_m;
      }
    }
    sc.composite.mean_latency_s = safe_mean(comp_latency, sc.composite.both_ok);
    sc.composite.mean_reliability = safe_mean(comp_rel, sc.composite.both_ok);
    sc.composite.min_reliability = sc.composite.both_ok > 0 ? comp_min_rel : nan_v;
    sc.intersection.both_ok = sc.composite.both_ok;
    sc.intersection.llm_mean_latency_s = safe_mean(ill, sc.intersection.both_ok);
    sc.intersection.glm_mean_latency_s = safe_mean(igl, sc.intersection.both_ok);
    sc.intersection.llm_mean_path_length_m = safe_mean(ilp, sc.intersection.both_ok);
    sc.intersection.glm_mean_path_length_m = safe_mean(igp, sc.intersection.both_ok);

    sc.glm_llm_path_length_ratio = sc.glm.mean_path_length_m / sc.llm.mean_path_length_m;
    stats.scenarios.push_back(std::move(sc));
  }

  // Fig-8-style reliability sweep: LLM reliability re-derived from the hop
  // counts of the first scenario (hop structure is scenario-independent).
  for (double phi1 : config.phi1_sweep) {
    Phi1Point point;
    point.phi1 = phi1;
    double sum = 0.0;
    long n = 0;
    for (long e = 0; e < layout.epochs; ++e) {
      for (int d = 0; d < layout.destinations; ++d) {
        const MissionResult& r = results[layout.index(e, d, 0, 0)];
        if (!r.ok()) continue;
        const double hops = static_cast<double>(r.relay_hop_count);
        sum += config.reliability_model == ReliabilityModel::Series
                   ? config.phi_ground * std::pow(phi1, hops)
                   : 1.0 - (1.0 - config.phi_ground) * std::pow(1.0 - phi1, hops);
        ++n;
      }
    }
    point.llm_mean_reliability = safe_mean(sum, n);
    stats.phi1_sweep.push_back(point);
  }
  return stats;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  return out;
}

void write_results_csv(std::span<const MissionResult> results, const std::string& scenario,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "epoch_iso,destination,scheme,scenario,status,latency_s,reliability,relay_hops,"
         "path_length_m\n";
  for (const MissionResult& r : results) {
    if (r.scenario != scenario) continue;
    out << format_utc_iso(r.epoch_unix_s) << ",LEO-" << r.destination << ',' << r.scheme << ','
        << r.scenario << ',' << to_string(r.status) << ',' << format_double(r.latency_s) << ','
        << format_double(r.reliability) << ','
        << (r.ok() ? std::to_string(r.relay_hop_count) : std::string{}) << ','
        << format_double(r.path_length_m) << '\n';
  }
}

ordered_json scheme_json(const SchemeStats& s, bool with_spp) {
  ordered_json j;
  j["scheme"] = s.scheme;
  j["entries"] = s.entries;
  j["ok"] = s.ok;
  j["no_contact"] = s.no_contact;
  j["unreachable"] = s.unreachable;
  j["mean_latency_s"] = s.mean_latency_s;
  j["mean_reliability"] = s.mean_reliability;
  j["mean_relay_hops"] = s.mean_relay_hops;
  j["mean_path_length_m"] = s.mean_path_length_m;
  j["min_relay_hops"] = s.min_relay_hops;
  j["max_relay_hops"] = s.max_relay_hops;
  if (with_spp) j["mean_spp_total_latency_s"] = s.mean_spp_total_latency_s;
  ordered_json dests = ordered_json::array();
  for (const DestinationStats& d : s.per_destination) {
    ordered_json dj;
    dj["destination"] = d.destination;
    dj["ok"] = d.ok;
    dj["mean_latency_s"] = d.mean_latency_s;
    dj["mean_reliability"] = d.mean_reliability;
    dj["mean_relay_hops"] = d.mean_relay_hops;
    dj["mean_path_length_m"] = d.mean_path_length_m;
    if (with_spp) dj["mean_spp_total_latency_s"] = d.mean_spp_total_latency_s;
    dests.push_back(std::move(dj));
  }
  j["per_destination"] = std::move(dests);
  return j;
}

void write_stats_json(const SweepStats& stats, const SweepConfig& config,
                      const std::filesystem::path& path) {
  const bool with_spp = config.spp_length_bytes > 0.0;
  ordered_json j;
  j["epochs"] = stats.epochs;
  j["destinations"] = stats.destinations;
  j["entries_per_scheme_scenario"] = stats.epochs * stats.destinations;
  j["no_contact_epochs"] = stats.no_contact_epochs;
  j["no_contact_epoch_fraction"] = stats.no_contact_epoch_fraction;
  ordered_json scenarios = ordered_json::array();
  for (const ScenarioStats& sc : stats.scenarios) {
    ordered_json sj;
    sj["scenario"] = sc.scenario;
    sj["llm"] = scheme_json(sc.llm, with_spp);
    sj["glm"] = scheme_json(sc.glm, with_spp);
    sj["composite"] = {{"both_ok", sc.composite.both_ok},
                       {"mean_latency_s", sc.composite.mean_latency_s},
                       {"mean_reliability", sc.composite.mean_reliability},
                       {"min_reliability", sc.composite.min_reliability}};
    sj["intersection"] = {{"both_ok", sc.intersection.both_ok},
                          {"llm_mean_latency_s", sc.intersection.llm_mean_latency_s},
                          {"glm_mean_latency_s", sc.intersection.glm_mean_latency_s},
                          {"llm_mean_path_length_m", sc.intersection.llm_mean_path_length_m},
                          {"glm_mean_path_length_m", sc.intersection.glm_mean_path_length_m}};
    sj["glm_llm_path_length_ratio"] = sc.glm_llm_path_length_ratio;
    scenarios.push_back(std::move(sj));
  }
  j["scenarios"] = std::move(scenarios);
  ordered_json sweep = ordered_json::array();
  for (const Phi1Point& p : stats.phi1_sweep)
    sweep.push_back({{"phi1", p.phi1}, {"llm_mean_reliability", p.llm_mean_reliability}});
  j["phi1_sweep"] = std::move(sweep);

  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_by_destination(const ScenarioStats& sc, const std::string& column_stem,
                          double DestinationStats::*field, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "destination,llm_" << column_stem << ",glm_" << column_stem << "\n";
  for (std::size_t d = 0; d < sc.llm.per_destination.size(); ++d)
    out << d << ',' << format_double(sc.llm.per_destination[d].*field) << ','
        << format_double(sc.glm.per_destination[d].*field) << '\n';
}

void write_phi1_csv(const SweepStats& stats, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "phi1,llm_mean_reliability\n";
  for (const Phi1Point& p : stats.phi1_sweep)
    out << format_double(p.phi1) << ',' << format_double(p.llm_mean_reliability) << '\n';
}

void write_snapshot_edges(const SweepConfig& config, const Scenario& scenario,
                          const std::filesystem::path& path) {
  const Constellation constellation =
      build_walker_constellation(config.walker, config.t_start_unix_s);
  EphemerisTable ephemeris;
  const EphemerisTable* ephemeris_ptr = nullptr;
  if (!config.ephemeris_csv.empty()) {
    ephemeris = EphemerisTable::load_csv(config.ephemeris_csv);
    ephemeris_ptr = &ephemeris;
  }
  auto out = open_out(path);
  out << "epoch_iso,node_a,node_b,class,distance_m,rate_bps,phi\n";
  for (long e = 0; e < config.epoch_count(); ++e) {
    const double t = config.t_start_unix_s + static_cast<double>(e) * config.sample_step_s;
    const NetworkSnapshot snap = build_snapshot(t, constellation, config.geo_slots, config.gs,
                                                scenario, config.topology, ephemeris_ptr);
    for (const Edge& edge : snap.edges)
      out << format_utc_iso(t) << ',' << snap.nodes[static_cast<std::size_t>(edge.a)].id << ','
          << snap.nodes[static_cast<std::size_t>(edge.b)].id << ',' << to_string(edge.cls) << ','
          << format_double(edge.distance_m) << ',' << format_double(edge.rate_bps) << ','
          << format_double(edge.phi) << '\n';
  }
}

}  // namespace

void export_outputs(std::span<const MissionResult> results, const SweepStats& stats,
                    const SweepConfig& config, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  for (const ScenarioStats& sc : stats.scenarios) {
    write_results_csv(results, sc.scenario, dir / ("results_" + sc.scenario + ".csv"));
    write_by_destination(sc, "mean_latency_s", &DestinationStats::mean_latency_s,
                         dir / ("latency_by_destination_" + sc.scenario + ".csv"));
    if (config.spp_length_bytes > 0.0)
      write_by_destination(sc, "mean_spp_total_latency_s",
                           &DestinationStats::mean_spp_total_latency_s,
                           dir / ("spp_latency_by_destination_" + sc.scenario + ".csv"));
  }
  if (!stats.scenarios.empty()) {
    // Hop counts, path lengths, and reliabilities do not depend on link
    // rates, so one file each (taken from the first scenario) suffices.
    const ScenarioStats& first = stats.scenarios.front();
    write_by_destination(first, "mean_relay_hops", &DestinationStats::mean_relay_hops,
                         dir / "hops_by_destination.csv");
    write_by_destination(first, "mean_path_length_m", &DestinationStats::mean_path_length_m,
                         dir / "path_length_by_destination.csv");
    write_by_destination(first, "mean_reliability", &DestinationStats::mean_reliability,
                         dir / "reliability_by_destination.csv");
  }
  write_phi1_csv(stats, dir / "reliability_phi1_sweep.csv");
  write_stats_json(stats, config, dir / "stats.json");

  if (config.emit_snapshots)
    for (const Scenario& scenario : config.scenarios())
      write_snapshot_edges(config, scenario, dir / ("snapshot_edges_" + scenario.name + ".csv"));
}

void write_access_report_csv(const SweepConfig& config, const std::string& out_path) {
  const Constellation constellation =
      build_walker_constellation(config.walker, config.t_start_unix_s);
  const auto rows = access_report(constellation, config.gs, config.t_start_unix_s,
                                  config.t_end_unix_s, config.sample_step_s);
  const std::filesystem::path path(out_path);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto out = open_out(path);
  out << "sat_id,access_fraction,mean_elevation_when_visible\n";
  for (const AccessRow& r : rows)
    out << r.sat_id << ',' << format_double(r.access_fraction) << ','
        << format_double(r.mean_elevation_when_visible) << '\n';
}

}  // namespace mlsn
