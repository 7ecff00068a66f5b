#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "stochuc/common.hpp"
#include "stochuc/csv.hpp"
#include "stochuc/stats.hpp"

namespace stochuc {

//! One observed (forecast, outcome) pair. Timestamps are in hours on any
//! consistent clock; only differences matter (for the forgetting weight).
struct ForecastRecord {
  double timestamp_h = 0;
  int hour_of_day = 0;  // 0..23
  double point_forecast = 0;
  double actual = 0;
};

struct FarmHistory {
  std::string farm;
  double capacity = 0;
  std::vector<ForecastRecord> records;  // strictly increasing timestamps
};

using ForecastHistory = std::vector<FarmHistory>;

struct Bandwidths {
  double point_mw = 0;   // kernel on the point-forecast axis
  double hour_h = 2.0;   // circular kernel on hour of day
  double target_mw = 0;  // smoothing of the conditional CDF over actuals
};

//! Per-farm defaults: 5% of capacity on the point axis, 2 h on the hour axis,
//! 2% of capacity on the target axis.
inline Bandwidths default_bandwidths(double capacity) {
  return Bandwidths{0.05 * capacity, 2.0, 0.02 * capacity};
}

//! `timestamp,farm,hour,point_forecast,actual`; capacities come from the caller
//! (typically the wind farm list of the system under study).
inline ForecastHistory load_history(const std::string& path,
                                    const std::vector<std::pair<std::string, double>>& farms) {
  CsvTable t = read_csv(path);
  int c_ts = t.require_column("timestamp", path);
  int c_farm = t.require_column("farm", path);
  int c_hour = t.require_column("hour", path);
  int c_pf = t.require_column("point_forecast", path);
  int c_act = t.require_column("actual", path);
  ForecastHistory hist;
  std::map<std::string, int> idx;
  for (const auto& [id, cap] : farms) {
    idx[id] = static_cast<int>(hist.size());
    hist.push_back({id, cap, {}});
  }
  for (const auto& row : t.rows) {
    auto it = idx.find(row[c_farm]);
    if (it == idx.end()) throw ValidationError(path + ": unknown farm '" + row[c_farm] + "'");
    FarmHistory& fh = hist[it->second];
    ForecastRecord r;
    r.timestamp_h = parse_double(row[c_ts], path);
    r.hour_of_day = static_cast<int>(parse_long(row[c_hour], path));
    r.point_forecast = parse_double(row[c_pf], path);
    r.actual = parse_double(row[c_act], path);
    if (r.hour_of_day < 0 || r.hour_of_day > 23)
      throw ValidationError(path + ": hour outside 0..23");
    if (r.actual < -1e-9 || r.actual > fh.capacity + 1e-6 || r.point_forecast < -1e-9 ||
        r.point_forecast > fh.capacity + 1e-6)
      throw ValidationError(path + ": value outside [0, capacity] for farm " + fh.farm);
    if (!fh.records.empty() && r.timestamp_h <= fh.records.back().timestamp_h)
      throw ValidationError(path + ": timestamps not strictly increasing for farm " + fh.farm);
    fh.records.push_back(r);
  }
  return hist;
}

//! Conditional-KDE forecast model: Nadaraya-Watson weights from a Gaussian
//! kernel on the point forecast and a wrapped Gaussian kernel on hour of day,
//! with exponential forgetting lambda^(age in days).
class ForecastModel {
public:
  struct Sample {
    int hour;
    double point;
    double actual;
    double base_weight;
  };

  struct Farm {
    std::string id;
    double capacity;
    Bandwidths bw;
    double lambda;
    std::vector<Sample> samples;
  };

  const Farm& farm(int f) const { return farms_.at(f); }
  int n_farms() const { return static_cast<int>(farms_.size()); }
  int farm_index(const std::string& id) const {
    for (std::size_t i = 0; i < farms_.size(); ++i)
      if (farms_[i].id == id) return static_cast<int>(i);
    throw ValidationError("forecast model: unknown farm '" + id + "'");
  }

  //! Inverse of the kernel-weighted conditional CDF of actuals, clamped to
  //! [0, capacity]. Deterministic.
  double quantile(int f, double point_forecast, int hour, double tau) const {
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("quantile: tau outside (0,1)");
    const Farm& fm = farms_.at(f);
    std::vector<double> w = weights(fm, point_forecast, hour);
    // bisect F(t) = tau on a window covering the weighted sample support
    double lo = kInf, hi = -kInf;
    for (const auto& s : fm.samples) {
      lo = std::min(lo, s.actual);
      hi = std::max(hi, s.actual);
    }
    lo -= 8 * fm.bw.target_mw;
    hi += 8 * fm.bw.target_mw;
    auto cdf = [&](double t) {
      double acc = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * norm_cdf((t - fm.samples[i].actual) / fm.bw.target_mw);
      return acc;
    };
    for (int it = 0; it < 100; ++it) {
      double mid = 0.5 * (lo + hi);
      if (cdf(mid) < tau)
        lo = mid;
      else
        hi = mid;
    }
    return std::clamp(0.5 * (lo + hi), 0.0, fm.capacity);
  }

  double quantile(const std::string& farm_id, double point_forecast, int hour,
                  double tau) const {
    return quantile(farm_index(farm_id), point_forecast, hour, tau);
  }

private:
  static std::vector<double> weights(const Farm& fm, double point, int hour) {
    std::vector<double> lw(fm.samples.size());
    double mx = -kInf;
    for (std::size_t i = 0; i < fm.samples.size(); ++i) {
      const auto& s = fm.samples[i];
      double dp = (point - s.point) / fm.bw.point_mw;
      double dhr = std::abs(hour - s.hour);
      dhr = std::min(dhr, 24.0 - dhr) / fm.bw.hour_h;
      lw[i] = std::log(s.base_weight) - 0.5 * dp * dp - 0.5 * dhr * dhr;
      mx = std::max(mx, lw[i]);
    }
    double total = 0;
    for (double& v : lw) {
      v = std::exp(v - mx);
      total += v;
    }
    for (double& v : lw) v /= total;
    return lw;
  }

  friend ForecastModel fit(const ForecastHistory&, const std::vector<Bandwidths>&,
                           double);
  std::vector<Farm> farms_;
};

//! Stores the weighted sample set; weight of a record is lambda^(age in days)
//! relative to the newest record of its farm.
inline ForecastModel fit(const ForecastHistory& history,
                         const std::vector<Bandwidths>& bandwidths, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw ValidationError("fit: forgetting factor must be in (0,1]");
  ForecastModel model;
  for (std::size_t f = 0; f < history.size(); ++f) {
    const FarmHistory& fh = history[f];
    if (fh.records.empty())
      throw ValidationError("fit: empty history for farm " + fh.farm);
    Bandwidths bw = f < bandwidths.size() ? bandwidths[f] : default_bandwidths(fh.capacity);
    if (!(bw.point_mw > 0) || !(bw.hour_h > 0) || !(bw.target_mw > 0))
      throw ValidationError("fit: non-positive bandwidth for farm " + fh.farm);
    ForecastModel::Farm fm;
    fm.id = fh.farm;
    fm.capacity = fh.capacity;
    fm.bw = bw;
    fm.lambda = lambda;
    double newest = fh.records.back().timestamp_h;
    for (const auto& r : fh.records) {
      double age_days = (newest - r.timestamp_h) / 24.0;
      fm.samples.push_back({r.hour_of_day, r.point_forecast, r.actual,
                            std::pow(lambda, age_days)});
    }
    model.farms_.push_back(std::move(fm));
  }
  return model;
}

//! Quantile functions on a fixed tau grid with linear interpolation.
struct ProbabilisticForecast {
  std::vector<std::string> farms;
  std::vector<double> capacity;          // per farm
  std::vector<double> tau_grid;          // ascending, default 0.01..0.99
  // values[farm][hour][grid index], nondecreasing along the grid
  std::vector<std::vector<std::vector<double>>> values;

  int horizon() const { return farms.empty() ? 0 : static_cast<int>(values[0].size()); }
  int n_farms() const { return static_cast<int>(farms.size()); }

  //! Linear interpolation on the grid; tau outside the grid clamps to its ends.
  double quantile(int f, int t, double tau) const {
    const auto& v = values.at(f).at(t);
    const auto& g = tau_grid;
    if (tau <= g.front()) return v.front();
    if (tau >= g.back()) return v.back();
    auto it = std::upper_bound(g.begin(), g.end(), tau);
    std::size_t k = it - g.begin();
    double w = (tau - g[k - 1]) / (g[k] - g[k - 1]);
    return v[k - 1] + w * (v[k] - v[k - 1]);
  }
};

inline std::vector<double> default_tau_grid(int points = 99) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = (i + 1) / static_cast<double>(points + 1);
  return g;
}

//! Fills the tau grid per farm and horizon hour from the conditional model.
inline ProbabilisticForecast forecast_horizon(
    const ForecastModel& model, const std::vector<std::vector<double>>& point_series,
    int start_hour, const std::vector<double>& tau_grid = default_tau_grid()) {
  ProbabilisticForecast pf;
  pf.tau_grid = tau_grid;
  if ((int)point_series.size() != model.n_farms())
    throw ValidationError("forecast_horizon: one point series per farm required");
  for (int f = 0; f < model.n_farms(); ++f) {
    pf.farms.push_back(model.farm(f).id);
    pf.capacity.push_back(model.farm(f).capacity);
    std::vector<std::vector<double>> hours;
    for (std::size_t t = 0; t < point_series[f].size(); ++t) {
      int hod = static_cast<int>((start_hour + t) % 24);
      std::vector<double> grid(tau_grid.size());
      for (std::size_t k = 0; k < tau_grid.size(); ++k)
        grid[k] = model.quantile(f, point_series[f][t], hod, tau_grid[k]);
      std::sort(grid.begin(), grid.end());  // monotone by construction, kept explicit
      hours.push_back(std::move(grid));
    }
    pf.values.push_back(std::move(hours));
  }
  return pf;
}

//! (lower, upper) series per farm at the given central confidence level.
inline std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>>
interval_bounds(const ProbabilisticForecast& pf, double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw ValidationError("interval_bounds: confidence outside (0,1)");
  double lo_tau = (1.0 - confidence) / 2.0;
  double hi_tau = 1.0 - lo_tau;
  std::vector<std::vector<double>> lo(pf.n_farms()), hi(pf.n_farms());
  for (int f = 0; f < pf.n_farms(); ++f)
    for (int t = 0; t < pf.horizon(); ++t) {
      lo[f].push_back(pf.quantile(f, t, lo_tau));
      hi[f].push_back(pf.quantile(f, t, hi_tau));
    }
  return {lo, hi};
}

inline void write_forecast_csv(const ProbabilisticForecast& pf, const std::string& path) {
  CsvWriter w(path);
  w.row({"farm", "hour", "tau", "value"});
  for (int f = 0; f < pf.n_farms(); ++f)
    for (int t = 0; t < pf.horizon(); ++t)
      for (std::size_t k = 0; k < pf.tau_grid.size(); ++k)
        w.row({pf.farms[f], std::to_string(t + 1), fmt_double(pf.tau_grid[k]),
               fmt_double(pf.values[f][t][k])});
}

inline ProbabilisticForecast read_forecast_csv(const std::string& path,
                                               const std::vector<std::pair<std::string, double>>& farms) {
  CsvTable t = read_csv(path);
  int c_farm = t.require_column("farm", path);
  int c_hour = t.require_column("hour", path);
  int c_tau = t.require_column("tau", path);
  int c_val = t.require_column("value", path);
  ProbabilisticForecast pf;
  std::map<std::string, int> idx;
  for (const auto& [id, cap] : farms) {
    idx[id] = static_cast<int>(pf.farms.size());
    pf.farms.push_back(id);
    pf.capacity.push_back(cap);
  }
  std::map<double, int> taus;
  int horizon = 0;
  for (const auto& row : t.rows) {
    taus.emplace(parse_double(row[c_tau], path), 0);
    horizon = std::max(horizon, static_cast<int>(parse_long(row[c_hour], path)));
  }
  int k = 0;
  for (auto& [tau, i] : taus) {
    i = k++;
    pf.tau_grid.push_back(tau);
  }
  pf.values.assign(pf.farms.size(),
                   std::vector<std::vector<double>>(
                       horizon, std::vector<double>(pf.tau_grid.size(), -1.0)));
  for (const auto& row : t.rows) {
    auto it = idx.find(row[c_farm]);
    if (it == idx.end()) throw ValidationError(path + ": unknown farm '" + row[c_farm] + "'");
    int t_i = static_cast<int>(parse_long(row[c_hour], path)) - 1;
    int g = taus.at(parse_double(row[c_tau], path));
    pf.values[it->second][t_i][g] = parse_double(row[c_val], path);
  }
  for (int f = 0; f < pf.n_farms(); ++f)
    for (int t_i = 0; t_i < horizon; ++t_i)
      for (std::size_t g = 0; g < pf.tau_grid.size(); ++g)
        if (pf.values[f][t_i][g] < 0)
          throw ValidationError(path + ": missing grid value for farm " + pf.farms[f] +
                                " hour " + std::to_string(t_i + 1));
  return pf;
}

}  // namespace stochuc
