#pragma once

#include <queue>
#include <vector>

#include <Eigen/Dense>

#include "stochuc/common.hpp"
#include "stochuc/system.hpp"

namespace stochuc {

//! Line-by-bus injection sensitivities under the DC model, with respect to a
//! declared slack bus. Entry (l, b) is the MW flow on line l (oriented
//! from->to) caused by 1 MW injected at bus b and withdrawn at the slack.
struct PtdfMatrix {
  int slack_bus = -1;
  Eigen::MatrixXd factors;  // lines x buses, slack column all zero

  int n_lines() const { return static_cast<int>(factors.rows()); }
  int n_buses() const { return static_cast<int>(factors.cols()); }
};

inline bool network_connected(const PowerSystem& sys) {
  if (sys.buses.empty()) return false;
  std::vector<std::vector<int>> adj(sys.buses.size());
  for (const auto& l : sys.lines) {
    adj[l.from_bus].push_back(l.to_bus);
    adj[l.to_bus].push_back(l.from_bus);
  }
  std::vector<char> seen(sys.buses.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    int b = q.front();
    q.pop();
    for (int nb : adj[b])
      if (!seen[nb]) {
        seen[nb] = 1;
        ++count;
        q.push(nb);
      }
  }
  return count == sys.buses.size();
}

//! Builds the PTDF from line reactances by inverting the reduced susceptance
//! matrix. Entries below 1e-10 in magnitude are truncated to zero.
inline PtdfMatrix compute_ptdf(const PowerSystem& sys, int slack_bus) {
  const int nb = static_cast<int>(sys.buses.size());
  const int nl = static_cast<int>(sys.lines.size());
  if (slack_bus < 0 || slack_bus >= nb) throw ValidationError("slack bus index out of range");
  if (!network_connected(sys)) throw ValidationError("disconnected network");

  // Reduced nodal susceptance matrix (slack row/column removed).
  std::vector<int> red(nb, -1);
  int k = 0;
  for (int b = 0; b < nb; ++b)
    if (b != slack_bus) red[b] = k++;
  Eigen::MatrixXd bmat = Eigen::MatrixXd::Zero(nb - 1, nb - 1);
  for (const auto& l : sys.lines) {
    const double y = 1.0 / l.reactance;
    int i = red[l.from_bus], j = red[l.to_bus];
    if (i >= 0) bmat(i, i) += y;
    if (j >= 0) bmat(j, j) += y;
    if (i >= 0 && j >= 0) {
      bmat(i, j) -= y;
      bmat(j, i) -= y;
    }
  }
  Eigen::LDLT<Eigen::MatrixXd> fact(bmat);
  if (fact.info() != Eigen::Success || !fact.isPositive())
    throw ValidationError("singular susceptance matrix");
  Eigen::MatrixXd binv = fact.solve(Eigen::MatrixXd::Identity(nb - 1, nb - 1));

  PtdfMatrix ptdf;
  ptdf.slack_bus = slack_bus;
  ptdf.factors = Eigen::MatrixXd::Zero(nl, nb);
  for (int li = 0; li < nl; ++li) {
    const auto& l = sys.lines[li];
    const double y = 1.0 / l.reactance;
    for (int b = 0; b < nb; ++b) {
      if (b == slack_bus) continue;
      double zi = red[l.from_bus] >= 0 ? binv(red[l.from_bus], red[b]) : 0.0;
      double zj = red[l.to_bus] >= 0 ? binv(red[l.to_bus], red[b]) : 0.0;
      double v = y * (zi - zj);
      ptdf.factors(li, b) = std::abs(v) < 1e-10 ? 0.0 : v;
    }
  }
  return ptdf;
}

//! Pure function: line flows for a balanced net-injection vector (MW per bus).
inline std::vector<double> evaluate_flows(const PtdfMatrix& ptdf,
                                          const std::vector<double>& injections) {
  if ((int)injections.size() != ptdf.n_buses())
    throw std::logic_error("evaluate_flows: injection vector dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> inj(injections.data(), injections.size());
  Eigen::VectorXd f = ptdf.factors * inj;
  return std::vector<double>(f.data(), f.data() + f.size());
}

}  // namespace stochuc
