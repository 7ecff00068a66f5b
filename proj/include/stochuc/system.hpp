#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "stochuc/common.hpp"
#include "stochuc/csv.hpp"

namespace stochuc {

struct Bus {
  std::string id;
  std::string zone;  // optional, empty when absent
  bool slack = false;
};

struct Line {
  std::string id;
  int from_bus = -1;  // bus indices into PowerSystem::buses
  int to_bus = -1;
  double reactance = 0.0;   // per unit, > 0
  double flow_limit = 0.0;  // MW, > 0
};

struct FuelBlock {
  double width_mw = 0.0;        // block width above p_min
  double marginal_cost = 0.0;   // $/MWh
};

struct ThermalGenerator {
  std::string id;
  int bus = -1;
  double p_min = 0.0, p_max = 0.0;            // MW
  double ramp_up = 0.0, ramp_down = 0.0;      // MW/h
  double startup_ramp = 0.0, shutdown_ramp = 0.0;  // MW, >= p_min
  int min_up = 1, min_down = 1;               // hours
  double startup_cost = 0.0;                  // $
  double no_load_cost = 0.0;                  // $/h while committed (cost at p_min)
  std::vector<FuelBlock> fuel_curve;          // widths sum to p_max - p_min, costs nondecreasing
  bool quick_start = false;
  int initial_status = -1;   // >0: hours already on, <0: hours already off
  double initial_output = 0.0;  // MW, in [p_min, p_max] when initially on
};

struct WindFarm {
  std::string id;
  int bus = -1;
  double capacity = 0.0;  // MW
  double x_km = 0.0, y_km = 0.0;  // optional site coordinates for spatial correlation
  bool has_coords = false;
};

//! Hourly MW demand per bus over the horizon. Buses without a column are zero.
struct LoadSeries {
  int horizon = 0;
  std::vector<std::vector<double>> per_bus;  // [bus][hour], sized to all buses

  double bus_total(int t) const {
    double s = 0;
    for (const auto& b : per_bus) s += b[t];
    return s;
  }
};

struct PowerSystem {
  std::string name;
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<ThermalGenerator> generators;
  std::vector<WindFarm> wind_farms;
  int slack_bus = -1;

  int bus_index(const std::string& id) const {
    auto it = bus_lookup_.find(id);
    return it == bus_lookup_.end() ? -1 : it->second;
  }
  int farm_index(const std::string& id) const {
    for (std::size_t i = 0; i < wind_farms.size(); ++i)
      if (wind_farms[i].id == id) return static_cast<int>(i);
    return -1;
  }
  int generator_index(const std::string& id) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].id == id) return static_cast<int>(i);
    return -1;
  }

  void rebuild_lookup() {
    bus_lookup_.clear();
    for (std::size_t i = 0; i < buses.size(); ++i) bus_lookup_[buses[i].id] = static_cast<int>(i);
  }

private:
  std::unordered_map<std::string, int> bus_lookup_;
};

namespace detail {

inline void check_positive(double v, const std::string& what) {
  if (!(v > 0)) throw ValidationError(what + " must be > 0, got " + fmt_double(v));
}

}  // namespace detail

//! Structural validation; throws ValidationError naming the offending entity.
inline void validate_system(const PowerSystem& sys) {
  std::unordered_map<std::string, int> seen;
  int slack_count = 0;
  for (const auto& b : sys.buses) {
    if (seen.count(b.id)) throw ValidationError("duplicate bus id " + b.id);
    seen[b.id] = 1;
    if (b.slack) ++slack_count;
  }
  if (slack_count != 1)
    throw ValidationError("system must declare exactly one slack bus, found " +
                          std::to_string(slack_count));
  for (const auto& l : sys.lines) {
    if (l.from_bus < 0 || l.to_bus < 0 || l.from_bus >= (int)sys.buses.size() ||
        l.to_bus >= (int)sys.buses.size())
      throw ValidationError("line " + l.id + ": dangling bus reference");
    if (l.from_bus == l.to_bus) throw ValidationError("line " + l.id + ": from == to");
    detail::check_positive(l.reactance, "line " + l.id + " reactance");
    detail::check_positive(l.flow_limit, "line " + l.id + " flow_limit");
  }
  for (const auto& g : sys.generators) {
    const std::string tag = "gen " + g.id;
    if (g.bus < 0 || g.bus >= (int)sys.buses.size())
      throw ValidationError(tag + ": dangling bus reference");
    if (!(0 <= g.p_min && g.p_min <= g.p_max))
      throw ValidationError(tag + ": requires 0 <= p_min <= p_max");
    detail::check_positive(g.ramp_up, tag + " ramp_up");
    detail::check_positive(g.ramp_down, tag + " ramp_down");
    if (g.startup_ramp < g.p_min || g.shutdown_ramp < g.p_min)
      throw ValidationError(tag + ": startup/shutdown ramp must be >= p_min");
    if (g.min_up < 1 || g.min_down < 1)
      throw ValidationError(tag + ": min_up/min_down must be >= 1 hour");
    if (g.startup_cost < 0 || g.no_load_cost < 0)
      throw ValidationError(tag + ": negative cost");
    double width = 0;
    for (std::size_t k = 0; k < g.fuel_curve.size(); ++k) {
      if (g.fuel_curve[k].width_mw < 0)
        throw ValidationError(tag + ": negative fuel block width");
      if (k > 0 && g.fuel_curve[k].marginal_cost < g.fuel_curve[k - 1].marginal_cost - 1e-12)
        throw ValidationError("non-convex fuel curve for gen " + g.id);
      width += g.fuel_curve[k].width_mw;
    }
    if (std::abs(width - (g.p_max - g.p_min)) > 1e-6)
      throw ValidationError(tag + ": fuel block widths sum to " + fmt_double(width) +
                            ", expected p_max - p_min = " + fmt_double(g.p_max - g.p_min));
    if (g.initial_status == 0)
      throw ValidationError(tag + ": initial_status must be nonzero (signed hours)");
    if (g.initial_status > 0) {
      if (g.initial_output < g.p_min - 1e-9 || g.initial_output > g.p_max + 1e-9)
        throw ValidationError(tag + ": initial_output outside [p_min, p_max] while on");
    } else if (g.initial_output != 0) {
      throw ValidationError(tag + ": initial_output must be 0 while off");
    }
  }
  for (const auto& w : sys.wind_farms) {
    if (w.bus < 0 || w.bus >= (int)sys.buses.size())
      throw ValidationError("wind farm " + w.id + ": dangling bus reference");
    detail::check_positive(w.capacity, "wind farm " + w.id + " capacity");
  }
}

inline PowerSystem system_from_json(const nlohmann::json& j, const std::string& file) {
  PowerSystem sys;
  sys.name = j.value("name", "unnamed");
  if (!j.contains("buses")) throw ValidationError(file + ": no buses");
  for (const auto& jb : j.at("buses")) {
    Bus b;
    b.id = jb.at("id").get<std::string>();
    b.zone = jb.value("zone", "");
    b.slack = jb.value("slack", false);
    sys.buses.push_back(b);
  }
  sys.rebuild_lookup();
  for (std::size_t i = 0; i < sys.buses.size(); ++i)
    if (sys.buses[i].slack) sys.slack_bus = static_cast<int>(i);

  auto bus_ref = [&](const nlohmann::json& je, const char* key, const std::string& owner) {
    std::string id = je.at(key).get<std::string>();
    int idx = sys.bus_index(id);
    if (idx < 0) throw ValidationError(owner + ": dangling bus reference '" + id + "'");
    return idx;
  };

  for (const auto& jl : j.value("lines", nlohmann::json::array())) {
    Line l;
    l.id = jl.at("id").get<std::string>();
    l.from_bus = bus_ref(jl, "from", "line " + l.id);
    l.to_bus = bus_ref(jl, "to", "line " + l.id);
    l.reactance = jl.at("reactance").get<double>();
    l.flow_limit = jl.at("flow_limit_mw").get<double>();
    sys.lines.push_back(l);
  }
  for (const auto& jg : j.value("generators", nlohmann::json::array())) {
    ThermalGenerator g;
    g.id = jg.at("id").get<std::string>();
    g.bus = bus_ref(jg, "bus", "gen " + g.id);
    g.p_min = jg.at("p_min_mw").get<double>();
    g.p_max = jg.at("p_max_mw").get<double>();
    g.ramp_up = jg.at("ramp_up_mw_per_h").get<double>();
    g.ramp_down = jg.at("ramp_down_mw_per_h").get<double>();
    g.startup_ramp = jg.at("startup_ramp_mw").get<double>();
    g.shutdown_ramp = jg.at("shutdown_ramp_mw").get<double>();
    g.min_up = jg.at("min_up_h").get<int>();
    g.min_down = jg.at("min_down_h").get<int>();
    g.startup_cost = jg.at("startup_cost_usd").get<double>();
    g.no_load_cost = jg.at("no_load_cost_usd_per_h").get<double>();
    for (const auto& jb : jg.at("fuel_blocks"))
      g.fuel_curve.push_back({jb.at("width_mw").get<double>(),
                              jb.at("cost_usd_per_mwh").get<double>()});
    g.quick_start = jg.value("quick_start", false);
    g.initial_status = jg.at("initial_status_h").get<int>();
    g.initial_output = jg.value("initial_output_mw", 0.0);
    sys.generators.push_back(g);
  }
  for (const auto& jw : j.value("wind_farms", nlohmann::json::array())) {
    WindFarm w;
    w.id = jw.at("id").get<std::string>();
    w.bus = bus_ref(jw, "bus", "wind farm " + w.id);
    w.capacity = jw.at("capacity_mw").get<double>();
    if (jw.contains("x_km")) {
      w.x_km = jw.at("x_km").get<double>();
      w.y_km = jw.at("y_km").get<double>();
      w.has_coords = true;
    }
    sys.wind_farms.push_back(w);
  }
  validate_system(sys);
  return sys;
}

inline nlohmann::json system_to_json(const PowerSystem& sys) {
  nlohmann::json j;
  j["name"] = sys.name;
  j["buses"] = nlohmann::json::array();
  for (const auto& b : sys.buses) {
    nlohmann::json jb{{"id", b.id}};
    if (!b.zone.empty()) jb["zone"] = b.zone;
    if (b.slack) jb["slack"] = true;
    j["buses"].push_back(jb);
  }
  j["lines"] = nlohmann::json::array();
  for (const auto& l : sys.lines)
    j["lines"].push_back({{"id", l.id},
                          {"from", sys.buses[l.from_bus].id},
                          {"to", sys.buses[l.to_bus].id},
                          {"reactance", l.reactance},
                          {"flow_limit_mw", l.flow_limit}});
  j["generators"] = nlohmann::json::array();
  for (const auto& g : sys.generators) {
    nlohmann::json jg{{"id", g.id},
                      {"bus", sys.buses[g.bus].id},
                      {"p_min_mw", g.p_min},
                      {"p_max_mw", g.p_max},
                      {"ramp_up_mw_per_h", g.ramp_up},
                      {"ramp_down_mw_per_h", g.ramp_down},
                      {"startup_ramp_mw", g.startup_ramp},
                      {"shutdown_ramp_mw", g.shutdown_ramp},
                      {"min_up_h", g.min_up},
                      {"min_down_h", g.min_down},
                      {"startup_cost_usd", g.startup_cost},
                      {"no_load_cost_usd_per_h", g.no_load_cost},
                      {"quick_start", g.quick_start},
                      {"initial_status_h", g.initial_status},
                      {"initial_output_mw", g.initial_output}};
    jg["fuel_blocks"] = nlohmann::json::array();
    for (const auto& b : g.fuel_curve)
      jg["fuel_blocks"].push_back({{"width_mw", b.width_mw},
                                   {"cost_usd_per_mwh", b.marginal_cost}});
    j["generators"].push_back(jg);
  }
  j["wind_farms"] = nlohmann::json::array();
  for (const auto& w : sys.wind_farms) {
    nlohmann::json jw{{"id", w.id}, {"bus", sys.buses[w.bus].id}, {"capacity_mw", w.capacity}};
    if (w.has_coords) {
      jw["x_km"] = w.x_km;
      jw["y_km"] = w.y_km;
    }
    j["wind_farms"].push_back(jw);
  }
  return j;
}

inline PowerSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("missing file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  try {
    return system_from_json(j, path);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline void save_system(const PowerSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << system_to_json(sys).dump(2) << '\n';
}

//! Reads `hour,<bus-id>,...` (1-based hour index). Buses without a column get zeros.
inline LoadSeries load_timeseries(const std::string& path, const PowerSystem& sys) {
  CsvTable t = read_csv(path);
  if (t.header.empty() || t.header[0] != "hour")
    throw ValidationError(path + ": first column must be 'hour'");
  std::vector<int> col_bus(t.header.size(), -1);
  for (std::size_t c = 1; c < t.header.size(); ++c) {
    int b = sys.bus_index(t.header[c]);
    if (b < 0) throw ValidationError(path + ": unknown bus '" + t.header[c] + "'");
    col_bus[c] = b;
  }
  LoadSeries ls;
  ls.horizon = static_cast<int>(t.rows.size());
  ls.per_bus.assign(sys.buses.size(), std::vector<double>(ls.horizon, 0.0));
  for (int r = 0; r < ls.horizon; ++r) {
    long h = parse_long(t.rows[r][0], path);
    if (h != r + 1)
      throw ValidationError(path + ": hour index " + std::to_string(h) + " at row " +
                            std::to_string(r + 1) + ", expected " + std::to_string(r + 1));
    for (std::size_t c = 1; c < t.header.size(); ++c) {
      double v = parse_double(t.rows[r][c], path);
      if (v < 0) throw ValidationError(path + ": negative load for bus " + t.header[c]);
      ls.per_bus[col_bus[c]][r] = v;
    }
  }
  return ls;
}

//! Reads `hour,<farm-id>,...` into [farm][hour], clamping nothing, validating range.
inline std::vector<std::vector<double>> load_farm_series(const std::string& path,
                                                         const PowerSystem& sys,
                                                         bool check_capacity = true) {
  CsvTable t = read_csv(path);
  if (t.header.empty() || t.header[0] != "hour")
    throw ValidationError(path + ": first column must be 'hour'");
  std::vector<std::vector<double>> out(sys.wind_farms.size(),
                                       std::vector<double>(t.rows.size(), 0.0));
  std::vector<int> col_farm(t.header.size(), -1);
  for (std::size_t c = 1; c < t.header.size(); ++c) {
    int f = sys.farm_index(t.header[c]);
    if (f < 0) throw ValidationError(path + ": unknown wind farm '" + t.header[c] + "'");
    col_farm[c] = f;
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    long h = parse_long(t.rows[r][0], path);
    if (h != (long)r + 1)
      throw ValidationError(path + ": hour index must be 1-based and contiguous");
    for (std::size_t c = 1; c < t.header.size(); ++c) {
      double v = parse_double(t.rows[r][c], path);
      int f = col_farm[c];
      if (v < 0 || (check_capacity && v > sys.wind_farms[f].capacity + 1e-6))
        throw ValidationError(path + ": value " + fmt_double(v) + " outside [0, capacity] for farm " +
                              sys.wind_farms[f].id);
      out[f][r] = v;
    }
  }
  return out;
}

}  // namespace stochuc
