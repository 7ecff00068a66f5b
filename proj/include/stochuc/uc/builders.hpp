#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stochuc/scenario.hpp"
#include "stochuc/uc/problem.hpp"

namespace stochuc {

enum class NetworkMode { full, lazy };

//! Pre-horizon condition per generator (signed hours on/off, last output MW).
//! Defaults to the data declared on the system when not supplied.
struct InitialState {
  std::vector<int> status_h;
  std::vector<double> output_mw;

  static InitialState from_system(const PowerSystem& sys) {
    InitialState st;
    for (const auto& g : sys.generators) {
      st.status_h.push_back(g.initial_status);
      st.output_mw.push_back(g.initial_output);
    }
    return st;
  }
};

//! Per-generator hourly pins for the commitment variable. Empty vector = free.
struct FixedCommitment {
  std::vector<std::vector<int>> on;  // [gen][hour] in {0,1}; on[g] may be empty
};

//! One dispatch block of a UC model: its wind availability, objective weights,
//! and reserve requirement.
struct BlockSpec {
  std::vector<std::vector<double>> wind_cap;  // [farm][hour]
  double fuel_weight = 1.0;
  double penalty_weight = 1.0;
  ReserveMode reserve = ReserveMode::product_split;
  std::vector<double> reserve_total;  // per hour
};

namespace detail {

inline void force_initial_window(milp::Model& m, const std::vector<milp::VarId>& u,
                                 const ThermalGenerator& g, int status_h, int T,
                                 const std::string& id) {
  if (status_h > 0) {
    int must_stay = std::min(std::max(0, g.min_up - status_h), T);
    for (int t = 0; t < must_stay; ++t) {
      if (m.ub(u[t]) < 0.5)
        throw ValidationError("gen " + id + ": fixed off during its min-up carry-in");
      m.set_bounds(u[t], 1.0, 1.0);
    }
  } else {
    int must_stay = std::min(std::max(0, g.min_down + status_h), T);
    for (int t = 0; t < must_stay; ++t) {
      if (m.lb(u[t]) > 0.5)
        throw ValidationError("gen " + id + ": fixed on during its min-down carry-in");
      m.set_bounds(u[t], 0.0, 0.0);
    }
  }
}

}  // namespace detail

inline milp::ConId add_flow_row(UcProblem& prob, int line, int t, int s);

//! Assembles the MILP for any of the UC flavors. `blocks` may be empty (first
//! stage only; used by the decomposition master).
inline UcProblem build_uc(const PowerSystem& sys, const PtdfMatrix* ptdf,
                          const LoadSeries& load, int horizon, UcKind kind,
                          const std::vector<BlockSpec>& blocks, const ReservePolicy& policy,
                          NetworkMode network = NetworkMode::full,
                          const FixedCommitment* fixed = nullptr,
                          const CommitmentSchedule* pinned = nullptr,
                          const InitialState* init_override = nullptr) {
  using milp::Sense;
  using milp::VarId;
  using milp::VarType;

  policy.validate();
  if (horizon < 1) throw ValidationError("build_uc: horizon must be >= 1");
  if (load.horizon < horizon)
    throw ValidationError("build_uc: load series shorter than the horizon");
  for (const auto& b : blocks) {
    if ((int)b.wind_cap.size() != (int)sys.wind_farms.size())
      throw ValidationError("build_uc: wind series must cover every farm");
    for (const auto& series : b.wind_cap)
      if ((int)series.size() != horizon)
        throw ValidationError("build_uc: wind series length != horizon");
  }

  const int G = static_cast<int>(sys.generators.size());
  const int F = static_cast<int>(sys.wind_farms.size());
  const int B = static_cast<int>(sys.buses.size());
  const int T = horizon;
  const int S = static_cast<int>(blocks.size());

  UcProblem prob;
  prob.kind = kind;
  prob.T = T;
  prob.S = S;
  prob.sys = &sys;
  prob.ptdf = ptdf;
  prob.policy = policy;
  prob.load.assign(B, std::vector<double>(T, 0.0));
  for (int b = 0; b < B; ++b)
    for (int t = 0; t < T; ++t) prob.load[b][t] = load.per_bus[b][t];

  InitialState init = init_override ? *init_override : InitialState::from_system(sys);

  milp::Model& m = prob.model;
  double obj_const = 0.0;

  // ---- first-stage variables ----
  prob.u.assign(G, {});
  prob.v.assign(G, {});
  prob.w.assign(G, {});
  for (int g = 0; g < G; ++g) {
    const auto& gen = sys.generators[g];
    for (int t = 0; t < T; ++t) {
      std::string tag = gen.id + "_" + std::to_string(t);
      prob.u[g].push_back(m.add_variable("u_" + tag, 0.0, 1.0, commitment_hour_cost(gen),
                                         VarType::binary));
      prob.v[g].push_back(m.add_variable("v_" + tag, 0.0, 1.0, gen.startup_cost));
      prob.w[g].push_back(m.add_variable("w_" + tag, 0.0, 1.0, 0.0));
    }
    detail::force_initial_window(m, prob.u[g], gen, init.status_h[g], T, gen.id);
    if (fixed && g < (int)fixed->on.size() && !fixed->on[g].empty()) {
      for (int t = 0; t < T; ++t) {
        double val = fixed->on[g][t];
        if ((m.lb(prob.u[g][t]) > 0.5 && val < 0.5) || (m.ub(prob.u[g][t]) < 0.5 && val > 0.5))
          throw ValidationError("gen " + gen.id + ": fixed commitment conflicts with carry-in");
        m.set_bounds(prob.u[g][t], val, val);
      }
    }
    if (pinned) {
      for (int t = 0; t < T; ++t) {
        m.set_bounds(prob.u[g][t], pinned->on[g][t], pinned->on[g][t]);
        m.set_bounds(prob.v[g][t], pinned->startup[g][t], pinned->startup[g][t]);
        m.set_bounds(prob.w[g][t], pinned->shutdown[g][t], pinned->shutdown[g][t]);
      }
    }
  }

  // ---- dispatch-block variables ----
  prob.pblk.assign(S, {});
  prob.wind.assign(S, {});
  prob.shed.assign(S, {});
  prob.reg_up.assign(S, {});
  prob.reg_dn.assign(S, {});
  prob.spin.assign(S, {});
  prob.nonspin.assign(S, {});
  prob.shortfall.assign(S, {});
  prob.wind_cap.assign(S, {});
  for (int s = 0; s < S; ++s) {
    const BlockSpec& bs = blocks[s];
    prob.block_fuel_weight.push_back(bs.fuel_weight);
    prob.block_penalty_weight.push_back(bs.penalty_weight);
    prob.wind_cap[s] = bs.wind_cap;
    std::string sfx = S > 1 ? "_s" + std::to_string(s) : "";

    prob.pblk[s].assign(G, {});
    for (int g = 0; g < G; ++g) {
      const auto& gen = sys.generators[g];
      prob.pblk[s][g].assign(T, {});
      for (int t = 0; t < T; ++t)
        for (std::size_t k = 0; k < gen.fuel_curve.size(); ++k)
          prob.pblk[s][g][t].push_back(m.add_variable(
              "p_" + gen.id + "_" + std::to_string(t) + "_" + std::to_string(k) + sfx, 0.0,
              gen.fuel_curve[k].width_mw,
              bs.fuel_weight * gen.fuel_curve[k].marginal_cost));
    }
    prob.wind[s].assign(F, {});
    for (int f = 0; f < F; ++f)
      for (int t = 0; t < T; ++t) {
        prob.wind[s][f].push_back(m.add_variable(
            "wd_" + sys.wind_farms[f].id + "_" + std::to_string(t) + sfx, 0.0,
            bs.wind_cap[f][t], -bs.penalty_weight * policy.penalties.wind_spill));
        obj_const += bs.penalty_weight * policy.penalties.wind_spill * bs.wind_cap[f][t];
      }
    prob.shed[s].assign(B, std::vector<VarId>(T));
    for (int b = 0; b < B; ++b)
      for (int t = 0; t < T; ++t)
        if (prob.load[b][t] > 0)
          prob.shed[s][b][t] = m.add_variable(
              "shed_" + sys.buses[b].id + "_" + std::to_string(t) + sfx, 0.0,
              prob.load[b][t], bs.penalty_weight * policy.penalties.load_shed);

    auto add_reserve_var = [&](const char* name, int g, int t, double cap) {
      return m.add_variable(std::string(name) + "_" + sys.generators[g].id + "_" +
                                std::to_string(t) + sfx,
                            0.0, cap, 0.0);
    };
    prob.reg_up[s].assign(G, std::vector<VarId>(T));
    prob.reg_dn[s].assign(G, std::vector<VarId>(T));
    prob.spin[s].assign(G, std::vector<VarId>(T));
    prob.nonspin[s].assign(G, std::vector<VarId>(T));
    for (int g = 0; g < G; ++g) {
      const auto& gen = sys.generators[g];
      for (int t = 0; t < T; ++t) {
        if (bs.reserve == ReserveMode::product_split) {
          prob.reg_up[s][g][t] = add_reserve_var("ru", g, t, gen.ramp_up / 12.0);
          prob.reg_dn[s][g][t] = add_reserve_var("rd", g, t, gen.ramp_down / 12.0);
          prob.spin[s][g][t] = add_reserve_var("sp", g, t, gen.ramp_up / 6.0);
          if (gen.quick_start)
            prob.nonspin[s][g][t] = add_reserve_var("ns", g, t, gen.startup_ramp);
        } else if (bs.reserve == ReserveMode::single_row) {
          prob.spin[s][g][t] = add_reserve_var("sp", g, t, gen.ramp_up / 6.0);
          if (gen.quick_start)
            prob.nonspin[s][g][t] = add_reserve_var("ns", g, t, gen.startup_ramp);
        }
      }
    }
    prob.shortfall[s].assign(T, {});
  }
  // ---- first-stage rows ----
  for (int g = 0; g < G; ++g) {
    const auto& gen = sys.generators[g];
    double u_init = init.status_h[g] > 0 ? 1.0 : 0.0;
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<VarId, double>> terms{{prob.u[g][t], 1.0},
                                                  {prob.v[g][t], -1.0},
                                                  {prob.w[g][t], 1.0}};
      double rhs = 0.0;
      if (t == 0)
        rhs = u_init;
      else
        terms.push_back({prob.u[g][t - 1], -1.0});
      m.add_constraint("logic_" + gen.id + "_" + std::to_string(t), terms, Sense::eq, rhs);
    }
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<VarId, double>> up{{prob.u[g][t], -1.0}};
      for (int i = std::max(0, t - gen.min_up + 1); i <= t; ++i)
        up.push_back({prob.v[g][i], 1.0});
      m.add_constraint("minup_" + gen.id + "_" + std::to_string(t), up, Sense::le, 0.0);
      std::vector<std::pair<VarId, double>> dn{{prob.u[g][t], 1.0}};
      for (int i = std::max(0, t - gen.min_down + 1); i <= t; ++i)
        dn.push_back({prob.w[g][i], 1.0});
      m.add_constraint("mindn_" + gen.id + "_" + std::to_string(t), dn, Sense::le, 1.0);
    }
  }

  // ---- block rows ----
  for (int s = 0; s < S; ++s) {
    const BlockSpec& bs = blocks[s];
    std::string sfx = S > 1 ? "_s" + std::to_string(s) : "";
    for (int g = 0; g < G; ++g) {
      const auto& gen = sys.generators[g];
      const double span = gen.p_max - gen.p_min;
      for (int t = 0; t < T; ++t) {
        std::string tag = gen.id + "_" + std::to_string(t) + sfx;
        // capacity with committed up-reserve headroom
        std::vector<std::pair<VarId, double>> cap;
        for (auto b : prob.pblk[s][g][t]) cap.push_back({b, 1.0});
        if (prob.reg_up[s][g][t].valid()) cap.push_back({prob.reg_up[s][g][t], 1.0});
        if (prob.spin[s][g][t].valid()) cap.push_back({prob.spin[s][g][t], 1.0});
        cap.push_back({prob.u[g][t], -span});
        if (gen.min_up >= 2) {
          auto row = cap;
          row.push_back({prob.v[g][t], gen.p_max - gen.startup_ramp});
          if (t + 1 < T) row.push_back({prob.w[g][t + 1], gen.p_max - gen.shutdown_ramp});
          m.add_constraint("cap_" + tag, row, Sense::le, 0.0);
        } else {
          auto row1 = cap;
          row1.push_back({prob.v[g][t], gen.p_max - gen.startup_ramp});
          m.add_constraint("capsu_" + tag, row1, Sense::le, 0.0);
          auto row2 = cap;
          if (t + 1 < T) row2.push_back({prob.w[g][t + 1], gen.p_max - gen.shutdown_ramp});
          m.add_constraint("capsd_" + tag, row2, Sense::le, 0.0);
        }
        // regulation-down headroom above minimum
        if (prob.reg_dn[s][g][t].valid()) {
          std::vector<std::pair<VarId, double>> rd{{prob.reg_dn[s][g][t], 1.0}};
          for (auto b : prob.pblk[s][g][t]) rd.push_back({b, -1.0});
          m.add_constraint("rdcap_" + tag, rd, Sense::le, 0.0);
        }
        // product speed caps tied to commitment
        auto speed_cap = [&](VarId r, double rate, const char* nm) {
          if (!r.valid()) return;
          m.add_constraint(std::string(nm) + "_" + tag,
                           {{r, 1.0}, {prob.u[g][t], -rate}}, Sense::le, 0.0);
        };
        speed_cap(prob.reg_up[s][g][t], gen.ramp_up / 12.0, "rucap");
        speed_cap(prob.reg_dn[s][g][t], gen.ramp_down / 12.0, "rdrate");
        speed_cap(prob.spin[s][g][t], gen.ramp_up / 6.0, "spcap");
        if (prob.nonspin[s][g][t].valid())
          m.add_constraint("nscap_" + tag,
                           {{prob.nonspin[s][g][t], 1.0}, {prob.u[g][t], gen.startup_ramp}},
                           Sense::le, gen.startup_ramp);
      }
      // ramps within the block
      double p0 = init.status_h[g] > 0 ? std::max(0.0, init.output_mw[g] - gen.p_min) : 0.0;
      for (int t = 0; t < T; ++t) {
        std::string tag = gen.id + "_" + std::to_string(t) + sfx;
        std::vector<std::pair<VarId, double>> up, dn;
        for (auto b : prob.pblk[s][g][t]) {
          up.push_back({b, 1.0});
          dn.push_back({b, -1.0});
        }
        double up_rhs = 0.0, dn_rhs = 0.0;
        if (t == 0) {
          up_rhs = gen.ramp_up * (init.status_h[g] > 0 ? 1.0 : 0.0) + p0;
          dn_rhs = -p0;
        } else {
          for (auto b : prob.pblk[s][g][t - 1]) {
            up.push_back({b, -1.0});
            dn.push_back({b, 1.0});
          }
          up.push_back({prob.u[g][t - 1], -gen.ramp_up});
        }
        up.push_back({prob.v[g][t], -(gen.startup_ramp - gen.p_min)});
        dn.push_back({prob.u[g][t], -gen.ramp_down});
        dn.push_back({prob.w[g][t], -(gen.shutdown_ramp - gen.p_min)});
        m.add_constraint("rampup_" + tag, up, Sense::le, up_rhs);
        m.add_constraint("rampdn_" + tag, dn, Sense::le, dn_rhs);
      }
      // interval coupling: every one-step transition between the central
      // trajectory (block 0) and this lower-bound block, both directions
      if (kind == UcKind::iuc && s == 1) {
        for (int t = 1; t < T; ++t) {
          std::string tag = gen.id + "_" + std::to_string(t);
          auto cross = [&](int s_from, int s_to, const char* nm) {
            std::vector<std::pair<VarId, double>> up, dn;
            for (auto b : prob.pblk[s_to][g][t]) {
              up.push_back({b, 1.0});
              dn.push_back({b, -1.0});
            }
            for (auto b : prob.pblk[s_from][g][t - 1]) {
              up.push_back({b, -1.0});
              dn.push_back({b, 1.0});
            }
            up.push_back({prob.u[g][t - 1], -gen.ramp_up});
            up.push_back({prob.v[g][t], -(gen.startup_ramp - gen.p_min)});
            dn.push_back({prob.u[g][t], -gen.ramp_down});
            dn.push_back({prob.w[g][t], -(gen.shutdown_ramp - gen.p_min)});
            m.add_constraint(std::string("ivup_") + nm + "_" + tag, up, Sense::le, 0.0);
            m.add_constraint(std::string("ivdn_") + nm + "_" + tag, dn, Sense::le, 0.0);
          };
          cross(0, 1, "in");   // central t-1 -> lower t
          cross(1, 0, "out");  // lower t-1 -> central t
        }
      }
    }

    // power balance per hour
    for (int t = 0; t < T; ++t) {
      std::vector<std::pair<VarId, double>> bal;
      double total_load = 0;
      for (int g = 0; g < G; ++g) {
        bal.push_back({prob.u[g][t], sys.generators[g].p_min});
        for (auto b : prob.pblk[s][g][t]) bal.push_back({b, 1.0});
      }
      for (int f = 0; f < F; ++f) bal.push_back({prob.wind[s][f][t], 1.0});
      for (int b = 0; b < B; ++b) {
        total_load += prob.load[b][t];
        if (prob.shed[s][b][t].valid()) bal.push_back({prob.shed[s][b][t], 1.0});
      }
      m.add_constraint("bal_" + std::to_string(t) + sfx, bal, Sense::eq, total_load);
    }

    // reserve requirements
    for (int t = 0; t < T; ++t) {
      double req = bs.reserve_total.empty() ? 0.0 : bs.reserve_total[t];
      auto short_var = [&](const char* nm) {
        VarId sv = m.add_variable(std::string(nm) + "_short_" + std::to_string(t) + sfx, 0.0,
                                  kInf, bs.penalty_weight * policy.penalties.reserve_short);
        prob.shortfall[s][t].push_back(sv);
        return sv;
      };
      if (bs.reserve == ReserveMode::product_split && req > 0) {
        const auto& fr = policy.fractions;
        // cascading quality: faster products may substitute for slower ones
        std::vector<std::pair<VarId, double>> ru_row, sp_row, ns_row, rd_row;
        for (int g = 0; g < G; ++g) {
          ru_row.push_back({prob.reg_up[s][g][t], 1.0});
          sp_row.push_back({prob.reg_up[s][g][t], 1.0});
          sp_row.push_back({prob.spin[s][g][t], 1.0});
          ns_row.push_back({prob.reg_up[s][g][t], 1.0});
          ns_row.push_back({prob.spin[s][g][t], 1.0});
          if (prob.nonspin[s][g][t].valid()) ns_row.push_back({prob.nonspin[s][g][t], 1.0});
          rd_row.push_back({prob.reg_dn[s][g][t], 1.0});
        }
        ru_row.push_back({short_var("ru"), 1.0});
        sp_row.push_back({short_var("sp"), 1.0});
        ns_row.push_back({short_var("ns"), 1.0});
        rd_row.push_back({short_var("rd"), 1.0});
        m.add_constraint("req_ru_" + std::to_string(t) + sfx, ru_row, Sense::ge,
                         fr.reg_up * req);
        m.add_constraint("req_sp_" + std::to_string(t) + sfx, sp_row, Sense::ge,
                         (fr.reg_up + fr.spinning) * req);
        m.add_constraint("req_ns_" + std::to_string(t) + sfx, ns_row, Sense::ge,
                         (fr.reg_up + fr.spinning + fr.non_spinning) * req);
        m.add_constraint("req_rd_" + std::to_string(t) + sfx, rd_row, Sense::ge,
                         fr.reg_up * req);
      } else if (bs.reserve == ReserveMode::single_row && req > 0) {
        std::vector<std::pair<VarId, double>> row;
        for (int g = 0; g < G; ++g) {
          row.push_back({prob.spin[s][g][t], 1.0});
          if (prob.nonspin[s][g][t].valid()) row.push_back({prob.nonspin[s][g][t], 1.0});
        }
        row.push_back({short_var("up"), 1.0});
        m.add_constraint("req_" + std::to_string(t) + sfx, row, Sense::ge, req);
      }
    }
  }

  m.set_objective_constant(obj_const);  // spill pricing offset

  if (network == NetworkMode::full && ptdf != nullptr)
    for (int s = 0; s < S; ++s)
      for (int t = 0; t < T; ++t)
        for (std::size_t l = 0; l < sys.lines.size(); ++l)
          add_flow_row(prob, static_cast<int>(l), t, s);

  return prob;
}

//! Appends the PTDF range row for one (line, hour, block) tuple; used by the
//! full-network build and by the lazy line-set driver.
inline milp::ConId add_flow_row(UcProblem& prob, int line, int t, int s) {
  const PowerSystem& sys = *prob.sys;
  const PtdfMatrix& ptdf = *prob.ptdf;
  auto key = std::make_tuple(line, t, s);
  auto it = prob.flow_rows.find(key);
  if (it != prob.flow_rows.end()) return it->second;

  std::vector<std::pair<milp::VarId, double>> terms;
  double load_part = 0.0;
  for (std::size_t b = 0; b < sys.buses.size(); ++b) {
    double c = ptdf.factors(line, static_cast<int>(b));
    if (c == 0.0) continue;
    load_part += c * prob.load[b][t];
    if (prob.shed[s][b][t].valid()) terms.push_back({prob.shed[s][b][t], c});
  }
  for (std::size_t g = 0; g < sys.generators.size(); ++g) {
    double c = ptdf.factors(line, sys.generators[g].bus);
    if (c == 0.0) continue;
    terms.push_back({prob.u[g][t], c * sys.generators[g].p_min});
    for (auto b : prob.pblk[s][g][t]) terms.push_back({b, c});
  }
  for (std::size_t f = 0; f < sys.wind_farms.size(); ++f) {
    double c = ptdf.factors(line, sys.wind_farms[f].bus);
    if (c == 0.0) continue;
    terms.push_back({prob.wind[s][f][t], c});
  }
  double lim = sys.lines[line].flow_limit;
  milp::ConId row = prob.model.add_range_constraint(
      "flow_" + sys.lines[line].id + "_" + std::to_string(t) + "_s" + std::to_string(s),
      terms, -lim + load_part, lim + load_part);
  prob.flow_rows.emplace(key, row);
  return row;
}

//! Deterministic UC with dynamic reserves (the policy carries the series).
inline UcProblem build_duc(const PowerSystem& sys, const PtdfMatrix* ptdf,
                           const LoadSeries& load,
                           const std::vector<std::vector<double>>& wind_forecast,
                           const ReservePolicy& policy, int horizon,
                           NetworkMode network = NetworkMode::full,
                           const FixedCommitment* fixed = nullptr,
                           const InitialState* init = nullptr) {
  BlockSpec b;
  b.wind_cap = wind_forecast;
  b.reserve = policy.mode;
  for (int t = 0; t < horizon; ++t) b.reserve_total.push_back(policy.total_requirement(t));
  return build_uc(sys, ptdf, load, horizon, UcKind::duc, {b}, policy, network, fixed,
                  nullptr, init);
}

//! Interval UC: central dispatch plus a costless lower-bound block sharing the
//! commitment, with every one-step transition ramp-feasible. Only the base
//! contingency reserve is carried (in both blocks).
inline UcProblem build_iuc(const PowerSystem& sys, const PtdfMatrix* ptdf,
                           const LoadSeries& load,
                           const std::vector<std::vector<double>>& central,
                           const std::vector<std::vector<double>>& lower,
                           const ReservePolicy& policy, int horizon,
                           NetworkMode network = NetworkMode::full,
                           const FixedCommitment* fixed = nullptr,
                           const InitialState* init = nullptr) {
  for (std::size_t f = 0; f < central.size(); ++f)
    for (std::size_t t = 0; t < central[f].size(); ++t)
      if (lower[f][t] > central[f][t] + 1e-9)
        throw ValidationError("build_iuc: lower bound exceeds the central forecast (farm " +
                              sys.wind_farms[f].id + ", hour " + std::to_string(t + 1) + ")");
  ReservePolicy p = policy;
  p.dynamic_mw.clear();  // interval feasibility replaces the explicit dynamic reserve
  BlockSpec b0;
  b0.wind_cap = central;
  b0.reserve = p.mode;
  for (int t = 0; t < horizon; ++t) b0.reserve_total.push_back(p.contingency_mw);
  BlockSpec b1 = b0;
  b1.wind_cap = lower;
  b1.fuel_weight = 0.0;
  b1.penalty_weight = 1.0;
  return build_uc(sys, ptdf, load, horizon, UcKind::iuc, {b0, b1}, p, network, fixed,
                  nullptr, init);
}

//! Two-stage stochastic UC in extensive form. Each scenario carries a single
//! up-reserve row sized contingency + rho * (scenario wind power).
inline UcProblem build_suc(const PowerSystem& sys, const PtdfMatrix* ptdf,
                           const LoadSeries& load, const ScenarioSet& scenarios,
                           const ReservePolicy& policy, double wind_reserve_fraction,
                           int horizon, NetworkMode network = NetworkMode::full,
                           const FixedCommitment* fixed = nullptr,
                           const InitialState* init = nullptr) {
  if (scenarios.size() == 0) throw ValidationError("build_suc: empty scenario set");
  if (wind_reserve_fraction < 0) throw ValidationError("build_suc: rho must be >= 0");
  double ptot = 0;
  for (double p : scenarios.probability) ptot += p;
  if (std::abs(ptot - 1.0) > 1e-9)
    throw ValidationError("build_suc: scenario probabilities must sum to 1");
  std::vector<BlockSpec> blocks;
  for (int s = 0; s < scenarios.size(); ++s) {
    BlockSpec b;
    b.wind_cap = scenarios.paths[s];
    b.fuel_weight = scenarios.probability[s];
    b.penalty_weight = scenarios.probability[s];
    b.reserve = ReserveMode::single_row;
    for (int t = 0; t < horizon; ++t) {
      double scen_wind = 0;
      for (int f = 0; f < scenarios.n_farms; ++f) scen_wind += scenarios.paths[s][f][t];
      b.reserve_total.push_back(policy.contingency_mw + wind_reserve_fraction * scen_wind);
    }
    blocks.push_back(std::move(b));
  }
  ReservePolicy p = policy;
  p.dynamic_mw.clear();
  return build_uc(sys, ptdf, load, horizon, UcKind::suc, blocks, p, network, fixed,
                  nullptr, init);
}

//! Real-time economic dispatch: the commitment is pinned, only the contingency
//! reserve is procured, and the result is an LP (no free binaries).
inline UcProblem build_ed(const PowerSystem& sys, const PtdfMatrix* ptdf,
                          const LoadSeries& load, const CommitmentSchedule& commitment,
                          const std::vector<std::vector<double>>& realized_wind,
                          const ReservePolicy& policy, int horizon,
                          const InitialState* init = nullptr) {
  ReservePolicy p = policy;
  p.dynamic_mw.clear();
  BlockSpec b;
  b.wind_cap = realized_wind;
  b.reserve = p.mode;
  for (int t = 0; t < horizon; ++t) b.reserve_total.push_back(p.contingency_mw);
  return build_uc(sys, ptdf, load, horizon, UcKind::ed, {b}, p, NetworkMode::full, nullptr,
                  &commitment, init);
}

}  // namespace stochuc
