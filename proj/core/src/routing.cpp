#include "mlsn/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mlsn/errors.hpp"
#include "mlsn/visibility.hpp"

namespace mlsn {

std::string to_string(Scheme scheme) { return scheme == Scheme::Llm ? "LLM" : "GLM"; }

std::string to_string(PathStatus status) {
  switch (status) {
    case PathStatus::Ok: return "OK";
    case PathStatus::NoContact: return "NoContact";
    case PathStatus::Unreachable: return "Unreachable";
  }
  return "?";
}

std::optional<int> select_entry_satellite(const NetworkSnapshot& snapshot, NodeKind layer) {
  const EcefPosition& site = snapshot.nodes[static_cast<std::size_t>(snapshot.gs_node())].pos;
  std::optional<int> best;
  double best_elevation = -std::numeric_limits<double>::infinity();
  for (const auto& [nbr, edge] : snapshot.adjacency[static_cast<std::size_t>(snapshot.gs_node())]) {
    if (snapshot.nodes[static_cast<std::size_t>(nbr)].kind != layer) continue;
    const double el = elevation_deg(site, snapshot.nodes[static_cast<std::size_t>(nbr)].pos);
    if (el > best_elevation) {  // adjacency is index-sorted, so ties keep the lower index
      best_elevation = el;
      best = nbr;
    }
  }
  return best;
}

namespace {

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> pred_node;
  std::vector<int> pred_edge;
};

// Dijkstra over edges of one class. Deterministic: the heap orders by
// (distance, node index) and equal-distance relaxations prefer the
// lower-index predecessor.
ShortestPaths dijkstra(const NetworkSnapshot& snap, int source, LinkClass allowed) {
  const auto n = snap.nodes.size();
  ShortestPaths sp;
  sp.dist.assign(n, std::numeric_limits<double>::infinity());
  sp.pred_node.assign(n, -1);
  sp.pred_edge.assign(n, -1);
  sp.dist[static_cast<std::size_t>(source)] = 0.0;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > sp.dist[static_cast<std::size_t>(u)]) continue;
    for (const auto& [v, ei] : snap.adjacency[static_cast<std::size_t>(u)]) {
      const Edge& e = snap.edges[static_cast<std::size_t>(ei)];
      if (e.cls != allowed) continue;
      const double nd = d + e.distance_m;
      auto& dv = sp.dist[static_cast<std::size_t>(v)];
      if (nd < dv || (nd == dv && u < sp.pred_node[static_cast<std::size_t>(v)])) {
        dv = nd;
        sp.pred_node[static_cast<std::size_t>(v)] = u;
        sp.pred_edge[static_cast<std::size_t>(v)] = ei;
        heap.emplace(nd, v);
      }
    }
  }
  return sp;
}

Hop make_hop(const NetworkSnapshot& snap, int from, int to, int edge_index) {
  const Edge& e = snap.edges[static_cast<std::size_t>(edge_index)];
  return {from, to, e.cls, e.distance_m, e.rate_bps, e.phi};
}

Path finish(Path p) {
  p.status = PathStatus::Ok;
  p.total_length_m = 0.0;
  for (const Hop& h : p.hops) p.total_length_m += h.distance_m;
  p.relay_hop_count = std::max(0, static_cast<int>(p.hops.size()) - 1);
  return p;
}

Path failed(Scheme scheme, PathStatus status) {
  Path p;
  p.scheme = scheme;
  p.status = status;
  return p;
}

// Chain of hops source -> ... -> target read off the predecessor arrays.
std::vector<Hop> unwind(const NetworkSnapshot& snap, const ShortestPaths& sp, int source,
                        int target) {
  std::vector<Hop> hops;
  for (int v = target; v != source; v = sp.pred_node[static_cast<std::size_t>(v)])
    hops.push_back(make_hop(snap, sp.pred_node[static_cast<std::size_t>(v)], v,
                            sp.pred_edge[static_cast<std::size_t>(v)]));
  std::reverse(hops.begin(), hops.end());
  return hops;
}

void check_destination(const NetworkSnapshot& snap, int destination_leo) {
  if (destination_leo < 0 || destination_leo >= snap.leo_count)
    throw DomainError("destination LEO index " + std::to_string(destination_leo) +
                      " out of range [0, " + std::to_string(snap.leo_count) + ")");
}

}  // namespace

std::vector<Path> compute_llm_paths(const NetworkSnapshot& snap) {
  std::vector<Path> out(static_cast<std::size_t>(snap.leo_count));
  const auto entry = select_entry_satellite(snap, NodeKind::Leo);
  if (!entry) {
    for (auto& p : out) p = failed(Scheme::Llm, PathStatus::NoContact);
    return out;
  }
  const int gs = snap.gs_node();
  const ShortestPaths sp = dijkstra(snap, *entry, LinkClass::LeoLeo);

  // Edge index of every GS_LEO edge, keyed by LEO node; used both for the
  // direct-contact shortcut and the entry hop.
  std::vector<int> gs_edge(snap.nodes.size(), -1);
  for (const auto& [nbr, ei] : snap.adjacency[static_cast<std::size_t>(gs)])
    gs_edge[static_cast<std::size_t>(nbr)] = ei;

  for (int d = 0; d < snap.leo_count; ++d) {
    const int dest = snap.leo_node(d);
    Path p;
    p.scheme = Scheme::Llm;
    if (gs_edge[static_cast<std::size_t>(dest)] >= 0) {
      p.hops.push_back(make_hop(snap, gs, dest, gs_edge[static_cast<std::size_t>(dest)]));
      out[static_cast<std::size_t>(d)] = finish(std::move(p));
      continue;
    }
    if (!std::isfinite(sp.dist[static_cast<std::size_t>(dest)])) {
      out[static_cast<std::size_t>(d)] = failed(Scheme::Llm, PathStatus::Unreachable);
      continue;
    }
    p.hops.push_back(make_hop(snap, gs, *entry, gs_edge[static_cast<std::size_t>(*entry)]));
    auto isl_hops = unwind(snap, sp, *entry, dest);
    p.hops.insert(p.hops.end(), isl_hops.begin(), isl_hops.end());
    out[static_cast<std::size_t>(d)] = finish(std::move(p));
  }
  return out;
}

std::vector<Path> compute_glm_paths(const NetworkSnapshot& snap) {
  std::vector<Path> out(static_cast<std::size_t>(snap.leo_count));
  const auto source = select_entry_satellite(snap, NodeKind::Geo);
  if (!source) {
    for (auto& p : out) p = failed(Scheme::Glm, PathStatus::NoContact);
    return out;
  }
  const int gs = snap.gs_node();
  const ShortestPaths sp = dijkstra(snap, *source, LinkClass::GeoGeo);

  int feeder_edge = -1;
  for (const auto& [nbr, ei] : snap.adjacency[static_cast<std::size_t>(gs)])
    if (nbr == *source) feeder_edge = ei;

  for (int d = 0; d < snap.leo_count; ++d) {
    const int dest = snap.leo_node(d);

    // Serving GEO: shortest final descent among GEOs seeing the destination,
    // lowest index on ties; candidates the crosslink mesh cannot reach from
    // the source are skipped.
    int serving = -1;
    int descent_edge = -1;
    double best_descent = std::numeric_limits<double>::infinity();
    for (const auto& [nbr, ei] : snap.adjacency[static_cast<std::size_t>(dest)]) {
      if (snap.nodes[static_cast<std::size_t>(nbr)].kind != NodeKind::Geo) continue;
      if (!std::isfinite(sp.dist[static_cast<std::size_t>(nbr)])) continue;
      const Edge& e = snap.edges[static_cast<std::size_t>(ei)];
      if (e.distance_m < best_descent) {  // index-sorted adjacency keeps lowest index on ties
        best_descent = e.distance_m;
        serving = nbr;
        descent_edge = ei;
      }
    }
    if (serving < 0) {
      out[static_cast<std::size_t>(d)] = failed(Scheme::Glm, PathStatus::Unreachable);
      continue;
    }

    Path p;
    p.scheme = Scheme::Glm;
    p.hops.push_back(make_hop(snap, gs, *source, feeder_edge));
    auto crosslinks = unwind(snap, sp, *source, serving);
    p.hops.insert(p.hops.end(), crosslinks.begin(), crosslinks.end());
    p.hops.push_back(make_hop(snap, serving, dest, descent_edge));
    out[static_cast<std::size_t>(d)] = finish(std::move(p));
  }
  return out;
}

Path compute_llm_path(const NetworkSnapshot& snap, int destination_leo) {
  check_destination(snap, destination_leo);
  return compute_llm_paths(snap)[static_cast<std::size_t>(destination_leo)];
}

Path compute_glm_path(const NetworkSnapshot& snap, int destination_leo) {
  check_destination(snap, destination_leo);
  return compute_glm_paths(snap)[static_cast<std::size_t>(destination_leo)];
}

}  // namespace mlsn
