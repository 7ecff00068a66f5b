#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stochuc/common.hpp"
#include "stochuc/csv.hpp"
#include "stochuc/forecast.hpp"
#include "stochuc/stats.hpp"
#include "stochuc/system.hpp"

namespace stochuc {

//! Separable exponential-decay correlation: between coordinates (f,h) and
//! (f',h') the correlation is exp(-d(f,f')/eps_s) * exp(-|h-h'|/eps_t).
struct CovarianceSpec {
  double eps_t = 4.0;   // hours
  double eps_s = 40.0;  // km
  std::vector<std::vector<double>> farm_distance_km;  // symmetric, zero diagonal

  static CovarianceSpec for_farms(const std::vector<WindFarm>& farms, double eps_t,
                                  double eps_s, double default_distance_km = 100.0) {
    CovarianceSpec cov;
    cov.eps_t = eps_t;
    cov.eps_s = eps_s;
    std::size_t n = farms.size();
    cov.farm_distance_km.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        if (farms[a].has_coords && farms[b].has_coords) {
          double dx = farms[a].x_km - farms[b].x_km;
          double dy = farms[a].y_km - farms[b].y_km;
          cov.farm_distance_km[a][b] = std::sqrt(dx * dx + dy * dy);
        } else {
          cov.farm_distance_km[a][b] = default_distance_km;
        }
      }
    return cov;
  }
};

//! Weighted set of multi-farm multi-hour wind power paths (MW).
struct ScenarioSet {
  int n_farms = 0;
  int horizon = 0;
  std::vector<double> probability;                       // sums to 1
  std::vector<std::vector<std::vector<double>>> paths;   // [scenario][farm][hour]

  int size() const { return static_cast<int>(paths.size()); }
};

//! Gaussian-copula sampling: correlated standard normals (Cholesky with a
//! diagonal jitter ladder), mapped through the normal CDF and the per-farm
//! per-hour inverse quantile functions. Deterministic given the seed; each
//! scenario uses an RNG stream derived from (seed, scenario index).
inline ScenarioSet sample(const ProbabilisticForecast& pf, const CovarianceSpec& cov, int n,
                          std::uint64_t rng_seed) {
  if (n < 1) throw ValidationError("sample: need at least one scenario");
  const int F = pf.n_farms();
  const int H = pf.horizon();
  const int dim = F * H;
  if ((int)cov.farm_distance_km.size() != F)
    throw ValidationError("sample: covariance farm dimension mismatch");

  Eigen::MatrixXd corr(dim, dim);
  for (int a = 0; a < dim; ++a) {
    int fa = a / H, ha = a % H;
    for (int b = 0; b < dim; ++b) {
      int fb = b / H, hb = b % H;
      corr(a, b) = std::exp(-cov.farm_distance_km[fa][fb] / cov.eps_s) *
                   std::exp(-std::abs(ha - hb) / cov.eps_t);
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt;
  bool ok = false;
  for (double jitter : {0.0, 1e-12, 1e-10, 1e-8, 1e-6}) {
    Eigen::MatrixXd m = corr + jitter * Eigen::MatrixXd::Identity(dim, dim);
    llt.compute(m);
    if (llt.info() == Eigen::Success) {
      ok = true;
      break;
    }
  }
  if (!ok) throw ValidationError("sample: covariance not positive semi-definite after jitter");
  Eigen::MatrixXd L = llt.matrixL();

  ScenarioSet set;
  set.n_farms = F;
  set.horizon = H;
  for (int i = 0; i < n; ++i) {
    std::mt19937_64 rng(mix_seed(rng_seed, i));
    std::uniform_real_distribution<double> u01(std::nextafter(0.0, 1.0),
                                               std::nextafter(1.0, 0.0));
    Eigen::VectorXd z(dim);
    for (int k = 0; k < dim; ++k) z[k] = norm_inv(u01(rng));
    Eigen::VectorXd g = L * z;
    std::vector<std::vector<double>> path(F, std::vector<double>(H));
    for (int k = 0; k < dim; ++k) {
      double u = norm_cdf(g[k]);
      path[k / H][k % H] = pf.quantile(k / H, k % H, u);
    }
    set.paths.push_back(std::move(path));
    set.probability.push_back(1.0 / n);
  }
  return set;
}

//! L1 distance between two paths (summed over farms and hours).
inline double path_distance(const ScenarioSet& set, int i, int j) {
  double d = 0;
  for (int f = 0; f < set.n_farms; ++f)
    for (int t = 0; t < set.horizon; ++t)
      d += std::abs(set.paths[i][f][t] - set.paths[j][f][t]);
  return d;
}

//! Kantorovich-style objective of keeping `selected`: the probability-weighted
//! distance of every discarded scenario to its nearest kept one.
inline double reduction_objective(const ScenarioSet& set,
                                  const std::vector<int>& selected) {
  double obj = 0;
  for (int j = 0; j < set.size(); ++j) {
    if (std::find(selected.begin(), selected.end(), j) != selected.end()) continue;
    double dmin = kInf;
    for (int i : selected) dmin = std::min(dmin, path_distance(set, j, i));
    obj += set.probability[j] * dmin;
  }
  return obj;
}

//! Fast-forward selection under the L1 path distance, with Kantorovich
//! probability redistribution onto the nearest kept scenario. Ties break
//! toward the lowest scenario index. Kept paths appear in original order.
inline ScenarioSet reduce(const ScenarioSet& set, int k) {
  const int n = set.size();
  if (k < 1 || k > n) throw ValidationError("reduce: k outside 1..n");

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = path_distance(set, i, j);

  std::vector<char> kept(n, 0);
  std::vector<double> dmin(n, kInf);  // distance of each scenario to the kept set
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_obj = kInf;
    for (int u = 0; u < n; ++u) {
      if (kept[u]) continue;
      double obj = 0;
      for (int j = 0; j < n; ++j) {
        if (kept[j] || j == u) continue;
        obj += set.probability[j] * std::min(dmin[j], dist[j][u]);
      }
      if (obj < best_obj - 1e-15) {
        best_obj = obj;
        best = u;
      }
    }
    kept[best] = 1;
    for (int j = 0; j < n; ++j) dmin[j] = std::min(dmin[j], dist[j][best]);
  }

  std::vector<int> sel;
  for (int i = 0; i < n; ++i)
    if (kept[i]) sel.push_back(i);

  std::vector<double> prob(sel.size(), 0.0);
  for (std::size_t s = 0; s < sel.size(); ++s) prob[s] = set.probability[sel[s]];
  for (int j = 0; j < n; ++j) {
    if (kept[j]) continue;
    int nearest = 0;
    for (std::size_t s = 1; s < sel.size(); ++s)
      if (dist[j][sel[s]] < dist[j][sel[nearest]] - 1e-15) nearest = static_cast<int>(s);
    prob[nearest] += set.probability[j];
  }

  ScenarioSet out;
  out.n_farms = set.n_farms;
  out.horizon = set.horizon;
  for (std::size_t s = 0; s < sel.size(); ++s) {
    out.paths.push_back(set.paths[sel[s]]);
    out.probability.push_back(prob[s]);
  }
  return out;
}

inline void write_scenarios_csv(const ScenarioSet& set,
                                const std::vector<std::string>& farm_ids,
                                const std::string& path) {
  CsvWriter w(path);
  w.row({"scenario", "probability", "farm", "hour", "value"});
  for (int s = 0; s < set.size(); ++s)
    for (int f = 0; f < set.n_farms; ++f)
      for (int t = 0; t < set.horizon; ++t)
        w.row({std::to_string(s + 1), fmt_double(set.probability[s]), farm_ids[f],
               std::to_string(t + 1), fmt_double(set.paths[s][f][t])});
}

}  // namespace stochuc
