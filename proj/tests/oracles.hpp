#pragma once

// Independent reference implementations used to generate expected values.
// These deliberately avoid the library's solver and PTDF code paths.

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "stochuc/milp/model.hpp"
#include "stochuc/system.hpp"

namespace oracle {

struct LpResult {
  enum class St { optimal, infeasible, unbounded } status = St::infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

//! Textbook full-tableau Big-M simplex on a boxed-variable model. All variable
//! bounds must be finite. Range rows are split into <= and >= rows.
inline LpResult tableau_simplex(const stochuc::milp::Model& m) {
  using stochuc::is_finite_bound;
  const int n = m.num_vars();

  // shift x = lb + x', collect rows over x'
  std::vector<double> shift(n), width(n);
  for (int j = 0; j < n; ++j) {
    if (!is_finite_bound(m.raw_lb()[j]) || !is_finite_bound(m.raw_ub()[j]))
      throw std::logic_error("tableau oracle requires boxed variables");
    shift[j] = m.raw_lb()[j];
    width[j] = m.raw_ub()[j] - m.raw_lb()[j];
  }

  struct Row {
    std::vector<double> a;
    double b;
    int sense;  // -1: <=, 0: ==, +1: >=
  };
  std::vector<Row> rows;
  for (int j = 0; j < n; ++j) {
    Row r{std::vector<double>(n, 0.0), width[j], -1};
    r.a[j] = 1.0;
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < m.num_cons(); ++i) {
    double base = 0.0;
    std::vector<double> a(n, 0.0);
    for (const auto& [j, v] : m.rows()[i]) {
      a[j] += v;
      base += v * shift[j];
    }
    double lo = m.raw_row_lo()[i], hi = m.raw_row_hi()[i];
    if (is_finite_bound(lo) && lo == hi) {
      rows.push_back({a, lo - base, 0});
    } else {
      if (is_finite_bound(hi)) rows.push_back({a, hi - base, -1});
      if (is_finite_bound(lo)) rows.push_back({a, lo - base, 1});
    }
  }

  const int mr = static_cast<int>(rows.size());
  // columns: n structurals, then one slack/surplus per inequality, then one
  // artificial per row; full tableau with an extra rhs column.
  int n_slack = 0;
  for (const auto& r : rows) n_slack += r.sense != 0;
  const int ncol = n + n_slack + mr;
  double cmax = 1.0;
  for (int j = 0; j < n; ++j) cmax = std::max(cmax, std::abs(m.raw_obj()[j]));
  const double bigm = 1e7 * cmax;

  std::vector<std::vector<double>> T(mr, std::vector<double>(ncol + 1, 0.0));
  std::vector<double> cost(ncol, 0.0);
  std::vector<int> basis(mr);
  int scol = n;
  for (int i = 0; i < mr; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = rows[i].a[j];
    T[i][ncol] = rows[i].b;
    if (rows[i].sense != 0) {
      T[i][scol] = rows[i].sense == -1 ? 1.0 : -1.0;
      ++scol;
    }
    if (T[i][ncol] < 0)
      for (int j = 0; j <= ncol; ++j) T[i][j] = -T[i][j];
    T[i][n + n_slack + i] = 1.0;
    basis[i] = n + n_slack + i;
    cost[n + n_slack + i] = bigm;
  }
  for (int j = 0; j < n; ++j) cost[j] = m.raw_obj()[j];

  std::vector<double> z(ncol + 1, 0.0);
  auto recompute_z = [&] {
    for (int j = 0; j <= ncol; ++j) {
      double s = j < ncol ? -cost[j] : 0.0;
      for (int i = 0; i < mr; ++i) s += cost[basis[i]] * T[i][j];
      z[j] = s;
    }
  };
  recompute_z();

  LpResult out;
  for (long iter = 0; iter < 200000; ++iter) {
    const bool bland = iter > 20000;
    int q = -1;
    double best = 1e-9;
    for (int j = 0; j < ncol; ++j) {
      if (z[j] > best) {
        q = j;
        if (bland) break;
        best = z[j];
      }
    }
    if (q < 0) break;
    int r = -1;
    double ratio = 0;
    for (int i = 0; i < mr; ++i) {
      if (T[i][q] > 1e-9) {
        double rr = T[i][ncol] / T[i][q];
        if (r < 0 || rr < ratio - 1e-12 || (rr < ratio + 1e-12 && basis[i] < basis[r])) {
          r = i;
          ratio = rr;
        }
      }
    }
    if (r < 0) {
      out.status = LpResult::St::unbounded;
      return out;
    }
    double piv = T[r][q];
    for (int j = 0; j <= ncol; ++j) T[r][j] /= piv;
    for (int i = 0; i < mr; ++i) {
      if (i == r || T[i][q] == 0.0) continue;
      double f = T[i][q];
      for (int j = 0; j <= ncol; ++j) T[i][j] -= f * T[r][j];
    }
    double f = z[q];
    for (int j = 0; j <= ncol; ++j) z[j] -= f * T[r][j];
    basis[r] = q;
  }

  for (int i = 0; i < mr; ++i)
    if (basis[i] >= n + n_slack && T[i][ncol] > 1e-6) {
      out.status = LpResult::St::infeasible;
      return out;
    }
  out.status = LpResult::St::optimal;
  out.x.assign(n, 0.0);
  for (int i = 0; i < mr; ++i)
    if (basis[i] < n) out.x[basis[i]] = T[i][ncol];
  out.objective = 0.0;
  for (int j = 0; j < n; ++j) {
    out.x[j] += shift[j];
    out.objective += m.raw_obj()[j] * out.x[j];
  }
  out.objective += m.obj_constant();
  return out;
}

//! Exhaustive MILP oracle: enumerate every binary assignment, solve the
//! continuous remainder with the tableau simplex, take the best.
inline LpResult enumerate_milp(const stochuc::milp::Model& m) {
  std::vector<int> bins;
  for (int j = 0; j < m.num_vars(); ++j)
    if (m.raw_types()[j] == stochuc::milp::VarType::binary) bins.push_back(j);
  LpResult best;
  best.status = LpResult::St::infeasible;
  stochuc::milp::Model work = m;
  for (long mask = 0; mask < (1L << bins.size()); ++mask) {
    for (std::size_t k = 0; k < bins.size(); ++k) {
      double v = (mask >> k) & 1;
      double lo = m.raw_lb()[bins[k]], hi = m.raw_ub()[bins[k]];
      if (v < lo - 1e-12 || v > hi + 1e-12) goto next_mask;
      work.set_bounds(stochuc::milp::VarId{bins[k]}, v, v);
    }
    {
      LpResult r = tableau_simplex(work);
      if (r.status == LpResult::St::optimal &&
          (best.status != LpResult::St::optimal || r.objective < best.objective))
        best = r;
    }
  next_mask:;
  }
  return best;
}

//! DC power flow the direct way: solve B theta = injections with the slack
//! angle pinned, then read line flows off the angle differences.
inline std::vector<double> btheta_flows(const stochuc::PowerSystem& sys, int slack,
                                        const std::vector<double>& injections) {
  const int nb = static_cast<int>(sys.buses.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nb, nb);
  for (const auto& l : sys.lines) {
    double y = 1.0 / l.reactance;
    B(l.from_bus, l.from_bus) += y;
    B(l.to_bus, l.to_bus) += y;
    B(l.from_bus, l.to_bus) -= y;
    B(l.to_bus, l.from_bus) -= y;
  }
  Eigen::MatrixXd Br = Eigen::MatrixXd::Zero(nb - 1, nb - 1);
  Eigen::VectorXd pr(nb - 1);
  std::vector<int> red(nb, -1);
  int k = 0;
  for (int b = 0; b < nb; ++b)
    if (b != slack) red[b] = k++;
  for (int i = 0; i < nb; ++i) {
    if (red[i] < 0) continue;
    pr[red[i]] = injections[i];
    for (int j = 0; j < nb; ++j)
      if (red[j] >= 0) Br(red[i], red[j]) = B(i, j);
  }
  Eigen::VectorXd th_r = Br.fullPivLu().solve(pr);
  std::vector<double> theta(nb, 0.0);
  for (int b = 0; b < nb; ++b)
    if (red[b] >= 0) theta[b] = th_r[red[b]];
  std::vector<double> flows;
  flows.reserve(sys.lines.size());
  for (const auto& l : sys.lines)
    flows.push_back((theta[l.from_bus] - theta[l.to_bus]) / l.reactance);
  return flows;
}

//! Random feasible boxed LP: n vars in [0,10], mr inequality rows anchored at
//! an interior point so the instance is always feasible and bounded.
inline stochuc::milp::Model random_lp(std::mt19937_64& rng, int n = 5, int mr = 8) {
  using namespace stochuc::milp;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Model m;
  std::vector<VarId> xs;
  std::vector<double> x0;
  for (int j = 0; j < n; ++j) {
    xs.push_back(m.add_variable("x" + std::to_string(j), 0.0, 10.0,
                                std::floor(u01(rng) * 21) - 10.0));
    x0.push_back(u01(rng) * 10.0);
  }
  for (int i = 0; i < mr; ++i) {
    std::vector<std::pair<VarId, double>> terms;
    double act = 0.0;
    for (int j = 0; j < n; ++j) {
      if (u01(rng) < 0.3) continue;
      double a = std::floor(u01(rng) * 11) - 5.0;
      if (a == 0.0) continue;
      terms.emplace_back(xs[j], a);
      act += a * x0[j];
    }
    if (terms.empty()) continue;
    if (u01(rng) < 0.5)
      m.add_constraint("c" + std::to_string(i), terms, Sense::le, act + u01(rng) * 5.0);
    else
      m.add_constraint("c" + std::to_string(i), terms, Sense::ge, act - u01(rng) * 5.0);
  }
  return m;
}

//! Random feasible MILP: nb binaries + nc continuous vars, mr rows.
inline stochuc::milp::Model random_milp(std::mt19937_64& rng, int nb = 6, int nc = 2,
                                        int mr = 10) {
  using namespace stochuc::milp;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Model m;
  std::vector<VarId> xs;
  std::vector<double> x0;
  for (int j = 0; j < nb; ++j) {
    xs.push_back(m.add_variable("b" + std::to_string(j), 0.0, 1.0,
                                std::floor(u01(rng) * 21) - 10.0, VarType::binary));
    x0.push_back(u01(rng) < 0.5 ? 0.0 : 1.0);
  }
  for (int j = 0; j < nc; ++j) {
    xs.push_back(m.add_variable("x" + std::to_string(j), 0.0, 10.0,
                                std::floor(u01(rng) * 21) - 10.0));
    x0.push_back(u01(rng) * 10.0);
  }
  for (int i = 0; i < mr; ++i) {
    std::vector<std::pair<VarId, double>> terms;
    double act = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (u01(rng) < 0.35) continue;
      double a = std::floor(u01(rng) * 11) - 5.0;
      if (a == 0.0) continue;
      terms.emplace_back(xs[j], a);
      act += a * x0[j];
    }
    if (terms.empty()) continue;
    if (u01(rng) < 0.5)
      m.add_constraint("c" + std::to_string(i), terms, Sense::le, act + u01(rng) * 4.0);
    else
      m.add_constraint("c" + std::to_string(i), terms, Sense::ge, act - u01(rng) * 4.0);
  }
  return m;
}

}  // namespace oracle
