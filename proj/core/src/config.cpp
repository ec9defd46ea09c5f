#include "mlsn/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/time.hpp"

namespace mlsn {

using nlohmann::json;

namespace {

// --- minimal TOML-style reader -------------------------------------------
//
// Supported subset: [section] and [section.sub] headers, key = value pairs,
// '#' comments, quoted strings, booleans, numbers, and single-line arrays
// of scalars. That covers the whole documented schema; anything fancier
// should just use JSON input.

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string drop_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

json parse_scalar(const std::string& raw, const std::string& where) {
  const std::string v = strip(raw);
  if (v.empty()) throw ValidationError(where + ": empty value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"')
      throw ValidationError(where + ": unterminated string " + v);
    return v.substr(1, v.size() - 2);
  }
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ValidationError(where + ": cannot parse value '" + v + "'");
}

json parse_value(const std::string& raw, const std::string& where) {
  const std::string v = strip(raw);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw ValidationError(where + ": unterminated array " + v);
    json arr = json::array();
    std::string body = v.substr(1, v.size() - 2);
    std::string item;
    std::stringstream ss(body);
    while (std::getline(ss, item, ',')) {
      if (strip(item).empty() && ss.eof() && arr.empty()) break;  // []
      arr.push_back(parse_scalar(item, where));
    }
    return arr;
  }
  return parse_scalar(v, where);
}

json parse_toml_subset(const std::string& content, const std::string& origin) {
  json doc = json::object();
  json* section = &doc;
  std::string line;
  std::stringstream ss(content);
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(where + ": malformed section header");
      const std::string name = strip(line.substr(1, line.size() - 2));
      if (name.empty()) throw ValidationError(where + ": empty section name");
      section = &doc;
      std::stringstream parts(name);
      std::string part;
      while (std::getline(parts, part, '.')) section = &(*section)[strip(part)];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError(where + ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    if (key.empty()) throw ValidationError(where + ": empty key");
    (*section)[key] = parse_value(line.substr(eq + 1), where);
  }
  return doc;
}

void apply_override(json& doc, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw ValidationError("override '" + spec + "': expected KEY=VALUE");
  const std::string path = strip(spec.substr(0, eq));
  if (path.empty()) throw ValidationError("override '" + spec + "': empty key");
  json* node = &doc;
  std::stringstream parts(path);
  std::string part;
  while (std::getline(parts, part, '.')) node = &(*node)[strip(part)];
  *node = parse_value(spec.substr(eq + 1), "override " + path);
}

// --- document -> SweepConfig ----------------------------------------------

class Mapper {
 public:
  Mapper(const json& doc, std::string origin) : doc_(doc), origin_(std::move(origin)) {}

  double number(const std::string& path, double fallback) {
    const json* v = find(path);
    if (!v) return fallback;
    if (!v->is_number()) fail(path, "a number");
    return v->get<double>();
  }

  int integer(const std::string& path, int fallback) {
    const double d = number(path, fallback);
    if (d != std::floor(d)) fail(path, "an integer");
    return static_cast<int>(d);
  }

  bool boolean(const std::string& path, bool fallback) {
    const json* v = find(path);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(path, "a boolean");
    return v->get<bool>();
  }

  std::string text(const std::string& path, const std::string& fallback) {
    const json* v = find(path);
    if (!v) return fallback;
    if (!v->is_string()) fail(path, "a string");
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& path, std::vector<double> fallback) {
    const json* v = find(path);
    if (!v) return fallback;
    if (!v->is_array()) fail(path, "an array of numbers");
    std::vector<double> out;
    for (const auto& item : *v) {
      if (!item.is_number()) fail(path, "an array of numbers");
      out.push_back(item.get<double>());
    }
    return out;
  }

  std::vector<std::string> texts(const std::string& path, std::vector<std::string> fallback) {
    const json* v = find(path);
    if (!v) return fallback;
    if (!v->is_array()) fail(path, "an array of strings");
    std::vector<std::string> out;
    for (const auto& item : *v) {
      if (!item.is_string()) fail(path, "an array of strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  // Every leaf in the document must have been requested by one of the
  // accessors above; typos surface instead of being silently ignored.
  void reject_unknown_keys() const {
    std::vector<std::string> unknown;
    walk(doc_, "", unknown);
    if (!unknown.empty())
      throw ValidationError(origin_ + ": unknown config key '" + unknown.front() + "'");
  }

 private:
  const json* find(const std::string& path) {
    seen_.insert(path);
    const json* node = &doc_;
    std::stringstream parts(path);
    std::string part;
    while (std::getline(parts, part, '.')) {
      if (!node->is_object() || !node->contains(part)) return nullptr;
      node = &(*node)[part];
    }
    return node;
  }

  [[noreturn]] void fail(const std::string& path, const std::string& kind) const {
    throw ValidationError(origin_ + ": key '" + path + "' must be " + kind);
  }

  void walk(const json& node, const std::string& prefix, std::vector<std::string>& unknown) const {
    if (!node.is_object()) {
      if (!seen_.count(prefix)) unknown.push_back(prefix);
      return;
    }
    for (const auto& [key, child] : node.items()) {
      const std::string path = prefix.empty() ? key : prefix + "." + key;
      walk(child, path, unknown);
    }
  }

  const json& doc_;
  std::string origin_;
  std::set<std::string> seen_;
};

SweepConfig config_from_document(const json& doc, const std::string& origin) {
  SweepConfig def = default_config();
  SweepConfig c = def;
  Mapper m(doc, origin);

  const std::string t_start = m.text("mission.t_start", "");
  const std::string t_end = m.text("mission.t_end", "");
  if (!t_start.empty()) c.t_start_unix_s = parse_utc(t_start);
  if (!t_end.empty()) c.t_end_unix_s = parse_utc(t_end);
  c.sample_step_s = m.number("mission.sample_step_s", def.sample_step_s);

  c.walker.num_planes = m.integer("walker.num_planes", def.walker.num_planes);
  c.walker.sats_per_plane = m.integer("walker.sats_per_plane", def.walker.sats_per_plane);
  c.walker.inclination_deg = m.number("walker.inclination_deg", def.walker.inclination_deg);
  c.walker.altitude_m = m.number("walker.altitude_m", def.walker.altitude_m);
  c.walker.raan_spread_deg = m.number("walker.raan_spread_deg", def.walker.raan_spread_deg);
  c.walker.phasing_offset_deg =
      m.number("walker.phasing_offset_deg", def.walker.phasing_offset_deg);

  std::vector<double> def_lons;
  for (const auto& slot : def.geo_slots) def_lons.push_back(slot.longitude_deg);
  const auto lons = m.numbers("geo.slot_longitudes_deg", def_lons);
  c.geo_slots.clear();
  for (std::size_t j = 0; j < lons.size(); ++j)
    c.geo_slots.push_back({"GEO-" + std::to_string(j), lons[j]});

  c.gs.name = m.text("ground_station.name", def.gs.name);
  c.gs.latitude_deg = m.number("ground_station.latitude_deg", def.gs.latitude_deg);
  c.gs.longitude_deg = m.number("ground_station.longitude_deg", def.gs.longitude_deg);
  c.gs.altitude_m = m.number("ground_station.altitude_m", def.gs.altitude_m);
  c.gs.min_elevation_deg = m.number("ground_station.min_elevation_deg", def.gs.min_elevation_deg);
  c.topology.gs_geo_min_elevation_deg = m.number("ground_station.geo_min_elevation_deg",
                                                 def.topology.gs_geo_min_elevation_deg);

  c.rates.rf_ka_bps = m.number("links.rf_ka_bps", def.rates.rf_ka_bps);
  c.rates.rf_ku_bps = m.number("links.rf_ku_bps", def.rates.rf_ku_bps);
  c.rates.rf_l_bps = m.number("links.rf_l_bps", def.rates.rf_l_bps);
  c.rates.fso_bps = m.number("links.fso_bps", def.rates.fso_bps);
  c.topology.grazing_altitude_m =
      m.number("links.grazing_altitude_m", def.topology.grazing_altitude_m);

  c.frame_bytes = m.number("frames.frame_bytes", def.frame_bytes);
  c.spp_length_bytes = m.number("frames.spp_length_bytes", def.spp_length_bytes);

  c.delays.queuing_delay_s = m.number("delays.queuing_delay_s", def.delays.queuing_delay_s);
  c.delays.processing_delay_s =
      m.number("delays.processing_delay_s", def.delays.processing_delay_s);
  c.delays.signal_speed_mps = m.number("delays.signal_speed_mps", def.delays.signal_speed_mps);

  c.phi_leo_isl = m.number("reliability.phi_leo_isl", def.phi_leo_isl);
  c.phi_geo_isl = m.number("reliability.phi_geo_isl", def.phi_geo_isl);
  c.phi_geo_leo = m.number("reliability.phi_geo_leo", def.phi_geo_leo);
  c.phi_ground = m.number("reliability.phi_ground", def.phi_ground);
  c.reliability_model =
      reliability_model_from_string(m.text("reliability.model", to_string(def.reliability_model)));
  c.phi1_sweep = m.numbers("reliability.phi1_sweep", def.phi1_sweep);

  c.enabled_scenarios = m.texts("run.scenarios", def.enabled_scenarios);
  c.output_dir = m.text("run.output_dir", def.output_dir);
  c.threads = m.integer("run.threads", def.threads);
  c.emit_snapshots = m.boolean("run.emit_snapshots", def.emit_snapshots);
  c.ephemeris_csv = m.text("run.ephemeris_csv", def.ephemeris_csv);

  m.reject_unknown_keys();
  return c;
}

}  // namespace

ScenarioParams SweepConfig::scenario_params() const {
  ScenarioParams p;
  p.frame_bytes = frame_bytes;
  p.queuing_delay_s = delays.queuing_delay_s;
  p.processing_delay_s = delays.processing_delay_s;
  p.phi_ground = phi_ground;
  p.phi_leo_isl = phi_leo_isl;
  p.phi_geo_isl = phi_geo_isl;
  p.phi_geo_leo = phi_geo_leo;
  return p;
}

std::vector<Scenario> SweepConfig::scenarios() const {
  const auto all = builtin_scenarios(rates, scenario_params());
  std::vector<Scenario> out;
  for (const std::string& name : enabled_scenarios) {
    bool found = false;
    for (const Scenario& s : all)
      if (s.name == name) {
        out.push_back(s);
        found = true;
      }
    if (!found)
      throw ValidationError("run.scenarios: unknown scenario '" + name + "' (S1..S4 available)");
  }
  return out;
}

long SweepConfig::epoch_count() const {
  return static_cast<long>(std::floor((t_end_unix_s - t_start_unix_s) / sample_step_s + 1e-9)) + 1;
}

void SweepConfig::validate() const {
  if (t_end_unix_s < t_start_unix_s)
    throw ValidationError("mission.t_end must not precede mission.t_start");
  if (!(sample_step_s > 0.0)) throw ValidationError("mission.sample_step_s must be positive");
  walker.validate();
  if (geo_slots.empty()) throw ValidationError("geo.slot_longitudes_deg must not be empty");
  for (const auto& slot : geo_slots) slot.validate();
  gs.validate();
  if (topology.gs_geo_min_elevation_deg < 0.0 || topology.gs_geo_min_elevation_deg >= 90.0)
    throw ValidationError("ground_station.geo_min_elevation_deg must be in [0, 90)");
  for (double r : {rates.rf_ka_bps, rates.rf_ku_bps, rates.rf_l_bps, rates.fso_bps})
    if (!(r > 0.0)) throw ValidationError("links: all rates must be positive");
  if (topology.grazing_altitude_m < 0.0)
    throw ValidationError("links.grazing_altitude_m must be >= 0");
  if (!(frame_bytes > 0.0) || frame_bytes != std::floor(frame_bytes))
    throw ValidationError("frames.frame_bytes must be a positive integer");
  if (frame_bytes > static_cast<double>(consts::max_tc_frame_bytes))
    throw ValidationError("frames.frame_bytes " +
                          std::to_string(static_cast<long>(frame_bytes)) +
                          " exceeds the 1024 B transfer-frame maximum");
  if (spp_length_bytes < 0.0 || spp_length_bytes != std::floor(spp_length_bytes))
    throw ValidationError("frames.spp_length_bytes must be a non-negative integer");
  if (spp_length_bytes > static_cast<double>(consts::max_spp_packet_bytes))
    throw ValidationError("frames.spp_length_bytes exceeds the 65542 B space-packet maximum");
  if (delays.queuing_delay_s < 0.0) throw ValidationError("delays.queuing_delay_s must be >= 0");
  if (delays.processing_delay_s < 0.0)
    throw ValidationError("delays.processing_delay_s must be >= 0");
  if (!(delays.signal_speed_mps > 0.0))
    throw ValidationError("delays.signal_speed_mps must be positive");
  for (double phi : {phi_leo_isl, phi_geo_isl, phi_geo_leo, phi_ground})
    if (phi < 0.0 || phi > 1.0)
      throw ValidationError("reliability: phi values must be in [0, 1]");
  if (phi1_sweep.empty()) throw ValidationError("reliability.phi1_sweep must not be empty");
  for (double phi : phi1_sweep)
    if (phi < 0.0 || phi > 1.0)
      throw ValidationError("reliability.phi1_sweep values must be in [0, 1]");
  if (enabled_scenarios.empty()) throw ValidationError("run.scenarios must not be empty");
  std::set<std::string> unique(enabled_scenarios.begin(), enabled_scenarios.end());
  if (unique.size() != enabled_scenarios.size())
    throw ValidationError("run.scenarios must not contain duplicates");
  scenarios();  // rejects unknown names
  if (threads < 0) throw ValidationError("run.threads must be >= 0");
  if (output_dir.empty()) throw ValidationError("run.output_dir must not be empty");
}

SweepConfig default_config() {
  SweepConfig c;
  c.t_start_unix_s = parse_utc("2022-01-01 22:23:24");
  c.t_end_unix_s = parse_utc("2022-01-02 22:23:24");
  c.sample_step_s = 600.0;
  c.geo_slots = {{"GEO-0", 143.5}, {"GEO-1", 63.9}, {"GEO-2", -98.0}};
  c.gs = {"Iqaluit", 63.75, -68.52, 0.0, 30.0};
  return c;
}

SweepConfig load_config(const std::string& path, std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path, overrides);
}

SweepConfig parse_config(const std::string& content, const std::string& origin,
                         std::span<const std::string> overrides) {
  const auto first = content.find_first_not_of(" \t\r\n");
  json doc;
  if (first != std::string::npos && content[first] == '{') {
    try {
      doc = json::parse(content);
    } catch (const json::exception& e) {
      throw ValidationError(origin + ": " + e.what());
    }
  } else {
    doc = parse_toml_subset(content, origin);
  }
  for (const std::string& o : overrides) apply_override(doc, o);
  return config_from_document(doc, origin);
}

}  // namespace mlsn
