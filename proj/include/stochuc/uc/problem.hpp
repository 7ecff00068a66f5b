#pragma once

#include <map>
#include <string>
#include <vector>

#include "stochuc/milp/model.hpp"
#include "stochuc/ptdf.hpp"
#include "stochuc/system.hpp"
#include "stochuc/uc/policy.hpp"

namespace stochuc {

enum class UcKind { duc, iuc, suc, ed };

//! Per generator per hour on/off plus normalized startup/shutdown flags.
struct CommitmentSchedule {
  std::vector<std::vector<int>> on;        // [gen][hour]
  std::vector<std::vector<int>> startup;   // [gen][hour]
  std::vector<std::vector<int>> shutdown;  // [gen][hour]

  int horizon() const { return on.empty() ? 0 : static_cast<int>(on[0].size()); }

  //! Derives flags from on/off and the pre-horizon status (logic-consistent by
  //! construction: u_t - u_{t-1} = v_t - w_t and v_t * w_t = 0).
  static CommitmentSchedule from_on_off(const std::vector<std::vector<int>>& on,
                                        const std::vector<int>& initially_on) {
    CommitmentSchedule s;
    s.on = on;
    s.startup.assign(on.size(), {});
    s.shutdown.assign(on.size(), {});
    for (std::size_t g = 0; g < on.size(); ++g) {
      int prev = initially_on[g];
      for (std::size_t t = 0; t < on[g].size(); ++t) {
        s.startup[g].push_back(on[g][t] == 1 && prev == 0);
        s.shutdown[g].push_back(on[g][t] == 0 && prev == 1);
        prev = on[g][t];
      }
    }
    return s;
  }
};

struct CostSplit {
  double startup = 0, no_load = 0, fuel = 0, penalty = 0;
  double total() const { return startup + no_load + fuel + penalty; }
};

//! Decoded dispatch for every block (deterministic models have one block;
//! interval models two; stochastic models one per scenario). Cost split is
//! probability-weighted, matching the model objective.
struct DispatchResult {
  std::vector<double> block_probability;              // fuel weight per block
  std::vector<std::vector<std::vector<double>>> gen_mw;    // [s][g][t]
  std::vector<std::vector<std::vector<double>>> wind_mw;   // [s][f][t]
  std::vector<std::vector<double>> shed_mw;                // [s][t]
  std::vector<std::vector<double>> spill_mw;               // [s][t]
  std::vector<std::vector<double>> reserve_short_mw;       // [s][t], all products
  std::vector<std::vector<std::vector<double>>> flows_mw;  // [s][l][t]
  CostSplit cost;
  double objective = 0;

  double total_shed_mwh(int s = 0) const {
    double v = 0;
    for (double x : shed_mw[s]) v += x;
    return v;
  }
  double total_spill_mwh(int s = 0) const {
    double v = 0;
    for (double x : spill_mw[s]) v += x;
    return v;
  }
};

//! A built UC MILP plus the index catalog mapping model entities back to
//! (generator, hour[, block]) positions, and everything needed to add line
//! rows lazily after a solve.
struct UcProblem {
  milp::Model model;
  UcKind kind = UcKind::duc;
  int T = 0;  // hours
  int S = 0;  // dispatch blocks

  const PowerSystem* sys = nullptr;
  const PtdfMatrix* ptdf = nullptr;
  std::vector<std::vector<double>> load;       // [bus][t]
  std::vector<double> block_fuel_weight;       // per block
  std::vector<double> block_penalty_weight;    // per block
  std::vector<std::vector<std::vector<double>>> wind_cap;  // [s][f][t]
  ReservePolicy policy;

  // first stage
  std::vector<std::vector<milp::VarId>> u, v, w;  // [g][t]
  // dispatch, per block: fuel blocks [s][g][t][k], wind [s][f][t], shed [s][b][t]
  std::vector<std::vector<std::vector<std::vector<milp::VarId>>>> pblk;
  std::vector<std::vector<std::vector<milp::VarId>>> wind;
  std::vector<std::vector<std::vector<milp::VarId>>> shed;
  // reserve products [s][g][t] (invalid handles where a product is absent)
  std::vector<std::vector<std::vector<milp::VarId>>> reg_up, reg_dn, spin, nonspin;
  // shortfall slacks [s][t][product-row]
  std::vector<std::vector<std::vector<milp::VarId>>> shortfall;
  // enforced line rows
  std::map<std::tuple<int, int, int>, milp::ConId> flow_rows;  // (line, t, s) -> row

  double initially_on(int g) const { return sys->generators[g].initial_status > 0 ? 1.0 : 0.0; }
  double initial_above_min(int g) const {
    const auto& gen = sys->generators[g];
    return gen.initial_status > 0 ? std::max(0.0, gen.initial_output - gen.p_min) : 0.0;
  }

  double gen_output(int s, int g, int t, const std::vector<double>& x) const {
    const auto& gen = sys->generators[g];
    double p = gen.p_min * x[u[g][t].value];
    for (const auto& b : pblk[s][g][t]) p += x[b.value];
    return p;
  }

  //! Net MW injection per bus for one (hour, block) of a solution.
  std::vector<double> injections(int s, int t, const std::vector<double>& x) const {
    std::vector<double> inj(sys->buses.size(), 0.0);
    for (std::size_t g = 0; g < sys->generators.size(); ++g)
      inj[sys->generators[g].bus] += gen_output(s, static_cast<int>(g), t, x);
    for (std::size_t f = 0; f < sys->wind_farms.size(); ++f)
      inj[sys->wind_farms[f].bus] += x[wind[s][f][t].value];
    for (std::size_t b = 0; b < sys->buses.size(); ++b) {
      inj[b] -= load[b][t];
      if (shed[s][b][t].valid()) inj[b] += x[shed[s][b][t].value];
    }
    return inj;
  }
};

//! Hourly fuel cost of a committed generator at minimum output: no-load plus
//! the minimum megawatts priced at the first block's marginal cost.
inline double commitment_hour_cost(const ThermalGenerator& g) {
  double mc1 = g.fuel_curve.empty() ? 0.0 : g.fuel_curve.front().marginal_cost;
  return g.no_load_cost + g.p_min * mc1;
}

//! Catalog-driven decoding of a solved UC problem. Asserts the dispatch-side
//! invariants (integrality of commitments, nodal balance within 1e-5 MW).
inline std::pair<CommitmentSchedule, DispatchResult> extract(
    const UcProblem& prob, const std::vector<double>& x) {
  const PowerSystem& sys = *prob.sys;
  const int G = static_cast<int>(sys.generators.size());
  const int F = static_cast<int>(sys.wind_farms.size());

  std::vector<std::vector<int>> on(G, std::vector<int>(prob.T, 0));
  std::vector<int> init(G);
  for (int g = 0; g < G; ++g) {
    init[g] = sys.generators[g].initial_status > 0;
    for (int t = 0; t < prob.T; ++t) {
      double uv = x[prob.u[g][t].value];
      if (std::abs(uv - std::round(uv)) > 1e-4)
        throw std::logic_error("extract: non-integral commitment for " +
                               sys.generators[g].id);
      on[g][t] = static_cast<int>(std::round(uv));
    }
  }
  CommitmentSchedule sched = CommitmentSchedule::from_on_off(on, init);

  DispatchResult res;
  res.block_probability = prob.block_fuel_weight;
  res.objective = prob.model.obj_constant();
  for (int j = 0; j < prob.model.num_vars(); ++j)
    res.objective += prob.model.raw_obj()[j] * x[j];

  for (int s = 0; s < prob.S; ++s) {
    double fw = prob.block_fuel_weight[s];
    double pw = prob.block_penalty_weight[s];
    std::vector<std::vector<double>> gen(G), windv(F);
    std::vector<double> shed_t(prob.T, 0.0), spill_t(prob.T, 0.0), short_t(prob.T, 0.0);
    for (int g = 0; g < G; ++g) {
      const auto& tg = sys.generators[g];
      for (int t = 0; t < prob.T; ++t) {
        gen[g].push_back(prob.gen_output(s, g, t, x));
        double fuel = tg.p_min * (tg.fuel_curve.empty() ? 0.0 : tg.fuel_curve[0].marginal_cost) *
                      on[g][t];
        for (std::size_t k = 0; k < prob.pblk[s][g][t].size(); ++k)
          fuel += tg.fuel_curve[k].marginal_cost * x[prob.pblk[s][g][t][k].value];
        res.cost.fuel += fw * fuel;
      }
    }
    for (int f = 0; f < F; ++f)
      for (int t = 0; t < prob.T; ++t) {
        double wv = x[prob.wind[s][f][t].value];
        windv[f].push_back(wv);
        spill_t[t] += prob.wind_cap[s][f][t] - wv;
        res.cost.penalty += pw * prob.policy.penalties.wind_spill *
                            (prob.wind_cap[s][f][t] - wv);
      }
    for (int t = 0; t < prob.T; ++t) {
      for (std::size_t b = 0; b < sys.buses.size(); ++b)
        if (prob.shed[s][b][t].valid()) shed_t[t] += x[prob.shed[s][b][t].value];
      for (const auto& sv : prob.shortfall[s][t]) short_t[t] += x[sv.value];
      res.cost.penalty += pw * (prob.policy.penalties.load_shed * shed_t[t] +
                                prob.policy.penalties.reserve_short * short_t[t]);

      // nodal balance check
      double balance = 0;
      for (int g = 0; g < G; ++g) balance += gen[g][t];
      for (int f = 0; f < F; ++f) balance += windv[f][t];
      balance += shed_t[t];
      for (std::size_t b = 0; b < sys.buses.size(); ++b) balance -= prob.load[b][t];
      if (std::abs(balance) > 1e-5)
        throw std::logic_error("extract: power balance residual " + fmt_double(balance) +
                               " at hour " + std::to_string(t));
    }
    std::vector<std::vector<double>> flows(sys.lines.size());
    if (prob.ptdf) {
      for (int t = 0; t < prob.T; ++t) {
        auto f = evaluate_flows(*prob.ptdf, prob.injections(s, t, x));
        for (std::size_t l = 0; l < sys.lines.size(); ++l) flows[l].push_back(f[l]);
      }
    }
    res.gen_mw.push_back(std::move(gen));
    res.wind_mw.push_back(std::move(windv));
    res.shed_mw.push_back(std::move(shed_t));
    res.spill_mw.push_back(std::move(spill_t));
    res.reserve_short_mw.push_back(std::move(short_t));
    res.flows_mw.push_back(std::move(flows));
  }

  for (int g = 0; g < G; ++g) {
    const auto& tg = sys.generators[g];
    for (int t = 0; t < prob.T; ++t) {
      res.cost.startup += tg.startup_cost * sched.startup[g][t];
      res.cost.no_load += tg.no_load_cost * on[g][t];
    }
  }
  return {sched, res};
}

}  // namespace stochuc
