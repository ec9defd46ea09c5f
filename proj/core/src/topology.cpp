#include "mlsn/topology.hpp"

#include <algorithm>
#include <cmath>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/visibility.hpp"

namespace mlsn {

std::string to_string(LinkClass cls) {
  switch (cls) {
    case LinkClass::GsLeo: return "GS_LEO";
    case LinkClass::GsGeo: return "GS_GEO";
    case LinkClass::LeoLeo: return "LEO_LEO";
    case LinkClass::GeoGeo: return "GEO_GEO";
    case LinkClass::GeoLeo: return "GEO_LEO";
  }
  return "?";
}

LinkClass link_class_from_string(const std::string& name) {
  if (name == "GS_LEO") return LinkClass::GsLeo;
  if (name == "GS_GEO") return LinkClass::GsGeo;
  if (name == "LEO_LEO") return LinkClass::LeoLeo;
  if (name == "GEO_GEO") return LinkClass::GeoGeo;
  if (name == "GEO_LEO") return LinkClass::GeoLeo;
  throw ValidationError("unknown link class '" + name + "'");
}

std::string to_string(LinkTechKind kind) {
  switch (kind) {
    case LinkTechKind::RfKa: return "RF_KA";
    case LinkTechKind::RfKu: return "RF_KU";
    case LinkTechKind::RfL: return "RF_L";
    case LinkTechKind::Fso: return "FSO";
  }
  return "?";
}

LinkTechKind link_tech_from_string(const std::string& name) {
  if (name == "RF_KA") return LinkTechKind::RfKa;
  if (name == "RF_KU") return LinkTechKind::RfKu;
  if (name == "RF_L") return LinkTechKind::RfL;
  if (name == "FSO") return LinkTechKind::Fso;
  throw ValidationError("unknown link technology '" + name + "'");
}

void LinkTech::validate() const {
  if (!(rate_bps > 0.0))
    throw ValidationError("link tech " + to_string(kind) + ": rate_bps must be positive");
}

double Scenario::rate_for(LinkClass cls) const {
  const auto it = tech.find(cls);
  if (it == tech.end())
    throw ValidationError("scenario '" + name + "': no technology for class " + to_string(cls));
  return it->second.rate_bps;
}

double Scenario::phi_for(LinkClass cls) const {
  switch (cls) {
    case LinkClass::GsLeo:
    case LinkClass::GsGeo: return phi_ground;
    case LinkClass::LeoLeo: return phi_leo_isl;
    case LinkClass::GeoGeo: return phi_geo_isl;
    case LinkClass::GeoLeo: return phi_geo_leo;
  }
  return 1.0;
}

void Scenario::validate() const {
  if (name.empty()) throw ValidationError("scenario: name must not be empty");
  for (LinkClass cls : {LinkClass::GsLeo, LinkClass::GsGeo, LinkClass::LeoLeo, LinkClass::GeoGeo,
                        LinkClass::GeoLeo}) {
    const auto it = tech.find(cls);
    if (it == tech.end())
      throw ValidationError("scenario '" + name + "': missing technology for " + to_string(cls));
    it->second.validate();
  }
  if (!(frame_bytes > 0.0) ||
      frame_bytes > static_cast<double>(consts::max_spp_packet_bytes))
    throw ValidationError("scenario '" + name + "': frame_bytes must be in (0, " +
                          std::to_string(consts::max_spp_packet_bytes) + "]");
  if (queuing_delay_s < 0.0)
    throw ValidationError("scenario '" + name + "': queuing_delay_s must be >= 0");
  if (processing_delay_s < 0.0)
    throw ValidationError("scenario '" + name + "': processing_delay_s must be >= 0");
  for (double phi : {phi_ground, phi_leo_isl, phi_geo_isl, phi_geo_leo})
    if (phi < 0.0 || phi > 1.0)
      throw ValidationError("scenario '" + name + "': link reliabilities must be in [0, 1]");
}

std::vector<Scenario> builtin_scenarios(const LinkRates& rates, const ScenarioParams& params) {
  const LinkTech ka{LinkTechKind::RfKa, rates.rf_ka_bps};
  const LinkTech l{LinkTechKind::RfL, rates.rf_l_bps};
  const LinkTech fso{LinkTechKind::Fso, rates.fso_bps};

  auto make = [&params](std::string name, LinkTech gs, LinkTech leo_isl, LinkTech geo_isl,
                        LinkTech geo_leo) {
    Scenario s;
    s.name = std::move(name);
    s.tech[LinkClass::GsLeo] = gs;
    s.tech[LinkClass::GsGeo] = gs;
    s.tech[LinkClass::LeoLeo] = leo_isl;
    s.tech[LinkClass::GeoGeo] = geo_isl;
    s.tech[LinkClass::GeoLeo] = geo_leo;
    s.frame_bytes = params.frame_bytes;
    s.queuing_delay_s = params.queuing_delay_s;
    s.processing_delay_s = params.processing_delay_s;
    s.phi_ground = params.phi_ground;
    s.phi_leo_isl = params.phi_leo_isl;
    s.phi_geo_isl = params.phi_geo_isl;
    s.phi_geo_leo = params.phi_geo_leo;
    return s;
  };

  return {
      make("S1", ka, ka, ka, ka),
      make("S2", fso, fso, fso, fso),
      make("S3", fso, ka, ka, ka),
      make("S4", fso, ka, ka, l),
  };
}

const Edge* NetworkSnapshot::find_edge(int node_a, int node_b) const {
  if (node_a > node_b) std::swap(node_a, node_b);
  for (const Edge& e : edges)
    if (e.a == node_a && e.b == node_b) return &e;
  return nullptr;
}

void NetworkSnapshot::rebuild_adjacency() {
  adjacency.assign(nodes.size(), {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    adjacency[static_cast<std::size_t>(e.a)].emplace_back(e.b, static_cast<int>(i));
    adjacency[static_cast<std::size_t>(e.b)].emplace_back(e.a, static_cast<int>(i));
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<std::pair<int, int>> plus_grid_neighbors(int plane, int slot, const WalkerSpec& spec) {
  if (plane < 0 || plane >= spec.num_planes || slot < 0 || slot >= spec.sats_per_plane)
    throw DomainError("plus_grid_neighbors: (plane, slot) out of range");
  std::vector<std::pair<int, int>> out;
  const int s = spec.sats_per_plane;
  out.emplace_back(plane, (slot + s - 1) % s);
  out.emplace_back(plane, (slot + 1) % s);
  if (plane > 0) out.emplace_back(plane - 1, slot);
  if (plane < spec.num_planes - 1) out.emplace_back(plane + 1, slot);
  return out;
}

NetworkSnapshot build_geometry(double epoch_unix_s, const Constellation& constellation,
                               std::span<const GeoSlot> geo_slots, const GroundStation& gs,
                               const TopologyOptions& options, const EphemerisTable* ephemeris) {
  NetworkSnapshot snap;
  snap.epoch_unix_s = epoch_unix_s;
  snap.leo_count = constellation.size();
  snap.geo_count = static_cast<int>(geo_slots.size());
  snap.nodes.reserve(1 + snap.leo_count + snap.geo_count);

  snap.nodes.push_back({NodeKind::Ground, "GS", ground_station_ecef(gs)});
  for (int i = 0; i < snap.leo_count; ++i) {
    Node n{NodeKind::Leo, "LEO-" + std::to_string(i), {}};
    n.pos = (ephemeris && ephemeris->has(n.id))
                ? ephemeris->position(n.id, epoch_unix_s)
                : propagate_to_ecef(constellation.elements[static_cast<std::size_t>(i)],
                                    epoch_unix_s);
    snap.nodes.push_back(std::move(n));
  }
  for (int j = 0; j < snap.geo_count; ++j) {
    Node n{NodeKind::Geo, "GEO-" + std::to_string(j), {}};
    n.pos = (ephemeris && ephemeris->has(n.id)) ? ephemeris->position(n.id, epoch_unix_s)
                                                : propagate_to_ecef(geo_slots[j], epoch_unix_s);
    snap.nodes.push_back(std::move(n));
  }

  auto add_edge = [&snap](int a, int b, LinkClass cls) {
    if (a > b) std::swap(a, b);
    Edge e;
    e.a = a;
    e.b = b;
    e.cls = cls;
    e.distance_m = distance(snap.nodes[static_cast<std::size_t>(a)].pos,
                            snap.nodes[static_cast<std::size_t>(b)].pos);
    snap.edges.push_back(e);
  };

  const EcefPosition& site = snap.nodes[0].pos;

  for (int i = 0; i < snap.leo_count; ++i)
    if (elevation_deg(site, snap.nodes[static_cast<std::size_t>(snap.leo_node(i))].pos) >=
        gs.min_elevation_deg)
      add_edge(snap.gs_node(), snap.leo_node(i), LinkClass::GsLeo);

  for (int j = 0; j < snap.geo_count; ++j)
    if (elevation_deg(site, snap.nodes[static_cast<std::size_t>(snap.geo_node(j))].pos) >=
        options.gs_geo_min_elevation_deg)
      add_edge(snap.gs_node(), snap.geo_node(j), LinkClass::GsGeo);

  // Intra-layer LEO mesh: +grid, undirected edges added once (a < b), only
  // when the chord clears the grazing shell.
  const WalkerSpec& spec = constellation.spec;
  std::vector<std::pair<int, int>> isl_pairs;
  for (int p = 0; p < spec.num_planes; ++p) {
    for (int s = 0; s < spec.sats_per_plane; ++s) {
      const int i = constellation.index_of(p, s);
      for (const auto& [np, ns] : plus_grid_neighbors(p, s, spec)) {
        const int j = constellation.index_of(np, ns);
        if (j > i) isl_pairs.emplace_back(i, j);
      }
    }
  }
  std::sort(isl_pairs.begin(), isl_pairs.end());
  isl_pairs.erase(std::unique(isl_pairs.begin(), isl_pairs.end()), isl_pairs.end());
  for (const auto& [i, j] : isl_pairs) {
    const auto& pa = snap.nodes[static_cast<std::size_t>(snap.leo_node(i))].pos;
    const auto& pb = snap.nodes[static_cast<std::size_t>(snap.leo_node(j))].pos;
    if (los_clear(pa, pb, options.grazing_altitude_m))
      add_edge(snap.leo_node(i), snap.leo_node(j), LinkClass::LeoLeo);
  }

  for (int j = 0; j < snap.geo_count; ++j)
    for (int k = j + 1; k < snap.geo_count; ++k)
      if (los_clear(snap.nodes[static_cast<std::size_t>(snap.geo_node(j))].pos,
                    snap.nodes[static_cast<std::size_t>(snap.geo_node(k))].pos,
                    options.grazing_altitude_m))
        add_edge(snap.geo_node(j), snap.geo_node(k), LinkClass::GeoGeo);

  for (int j = 0; j < snap.geo_count; ++j)
    for (int i = 0; i < snap.leo_count; ++i)
      if (los_clear(snap.nodes[static_cast<std::size_t>(snap.geo_node(j))].pos,
                    snap.nodes[static_cast<std::size_t>(snap.leo_node(i))].pos,
                    options.grazing_altitude_m))
        add_edge(snap.geo_node(j), snap.leo_node(i), LinkClass::GeoLeo);

  std::stable_sort(snap.edges.begin(), snap.edges.end(), [](const Edge& x, const Edge& y) {
    if (x.cls != y.cls) return static_cast<int>(x.cls) < static_cast<int>(y.cls);
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  snap.rebuild_adjacency();
  return snap;
}

void annotate_scenario(NetworkSnapshot& snapshot, const Scenario& scenario) {
  scenario.validate();
  snapshot.scenario = scenario.name;
  for (Edge& e : snapshot.edges) {
    e.rate_bps = scenario.rate_for(e.cls);
    e.phi = scenario.phi_for(e.cls);
  }
}

NetworkSnapshot build_snapshot(double epoch_unix_s, const Constellation& constellation,
                               std::span<const GeoSlot> geo_slots, const GroundStation& gs,
                               const Scenario& scenario, const TopologyOptions& options,
                               const EphemerisTable* ephemeris) {
  NetworkSnapshot snap =
      build_geometry(epoch_unix_s, constellation, geo_slots, gs, options, ephemeris);
  annotate_scenario(snap, scenario);
  return snap;
}

}  // namespace mlsn
