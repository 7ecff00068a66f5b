#pragma once

#include <chrono>
#include <queue>
#include <vector>

#include "stochuc/milp/model.hpp"
#include "stochuc/milp/simplex.hpp"

namespace stochuc::milp {

constexpr double kIntTol = 1e-6;

inline LpSolution extract_lp_solution(const Model& m, SimplexEngine& eng, Status st) {
  LpSolution sol;
  sol.status = st;
  sol.iterations = eng.iterations();
  if (st == Status::optimal) {
    sol.objective = eng.objective(m);
    sol.x = eng.primal_values();
    sol.duals = eng.dual_values();
    sol.reduced_costs = eng.reduced_cost_values();
  }
  return sol;
}

//! Solves the LP relaxation (binaries treated as their [lb, ub] boxes).
inline LpSolution solve_lp(const Model& m) {
  SimplexEngine eng(m);
  Status st = eng.solve_primal();
  return extract_lp_solution(m, eng, st);
}

//! Weak-duality certificate value for an optimal LpSolution; equals the primal
//! objective at a true optimum (strong duality).
inline double dual_objective(const Model& m, const LpSolution& sol) {
  auto bound_term = [](double mult, double lo, double hi) {
    if (std::abs(mult) <= 1e-7) return 0.0;
    double a = is_finite_bound(lo) ? mult * lo : (mult > 0 ? -kInf : kInf);
    double b = is_finite_bound(hi) ? mult * hi : (mult > 0 ? kInf : -kInf);
    return std::min(a, b);
  };
  double v = m.obj_constant();
  for (int i = 0; i < m.num_cons(); ++i)
    v += bound_term(sol.duals[i], m.raw_row_lo()[i], m.raw_row_hi()[i]);
  for (int j = 0; j < m.num_vars(); ++j)
    v += bound_term(sol.reduced_costs[j], m.raw_lb()[j], m.raw_ub()[j]);
  return v;
}

//! Branch and bound with best-bound node selection and most-fractional
//! branching; warm-starts each node's LP with the dual simplex from the
//! parent basis.
inline MilpSolution solve_milp(const Model& m, const MilpOptions& opt = {}) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };

  std::vector<int> binaries;
  for (int j = 0; j < m.num_vars(); ++j)
    if (m.raw_types()[j] == VarType::binary) binaries.push_back(j);

  MilpSolution out;
  SimplexEngine eng(m);

  struct Node {
    double bound;
    long id;
    std::vector<std::pair<int, double>> fixes;
    SimplexEngine::Basis basis;
  };
  struct NodeCmp {
    bool operator()(const Node& a, const Node& b) const {
      return a.bound != b.bound ? a.bound > b.bound : a.id > b.id;
    }
  };
  std::priority_queue<Node, std::vector<Node>, NodeCmp> open;

  Status root = eng.solve_primal();
  out.iterations = eng.iterations();
  if (root == Status::infeasible || root == Status::unbounded || root == Status::iteration_limit) {
    out.status = root;
    return out;
  }
  long next_id = 0;
  open.push(Node{eng.objective(m), next_id++, {}, eng.save_basis()});

  double inc_obj = kInf;
  std::vector<double> inc_x;
  bool have_inc = false;
  out.best_bound = -kInf;

  auto gap_of = [&](double bound) {
    if (!have_inc) return kInf;
    return (inc_obj - bound) / std::max(1e-10, std::abs(inc_obj));
  };

  Status term = Status::optimal;
  while (!open.empty()) {
    Node node = std::move(const_cast<Node&>(open.top()));
    open.pop();
    // global dual bound: cheapest open node, never above the incumbent
    out.best_bound = have_inc ? std::min(node.bound, inc_obj) : node.bound;
    if (have_inc && gap_of(out.best_bound) <= opt.rel_gap) break;
    if (out.nodes >= opt.node_limit) {
      term = Status::node_limit;
      break;
    }
    if (elapsed() > opt.time_limit_s) {
      term = Status::time_limit;
      break;
    }
    ++out.nodes;

    for (int j : binaries) eng.set_var_bounds(j, m.raw_lb()[j], m.raw_ub()[j]);
    for (const auto& [j, v] : node.fixes) eng.set_var_bounds(j, v, v);
    eng.load_basis(node.basis);
    Status st = eng.solve_dual();
    out.iterations = eng.iterations();
    if (st == Status::infeasible) continue;
    if (st != Status::optimal) {
      term = Status::iteration_limit;
      break;
    }
    double obj = eng.objective(m);
    if (have_inc && obj >= inc_obj - 1e-9 * (1.0 + std::abs(inc_obj))) continue;

    int branch_var = -1;
    double best_frac = -1.0;
    for (int j : binaries) {
      double v = eng.var_value(j);
      double dist = std::min(std::abs(v), std::abs(1.0 - v));  // distance to nearest value
      if (dist > kIntTol && dist > best_frac) {
        best_frac = dist;
        branch_var = j;
      }
    }
    if (branch_var < 0) {
      if (obj < inc_obj) {
        inc_obj = obj;
        inc_x = eng.primal_values();
        have_inc = true;
      }
      continue;
    }
    auto basis = eng.save_basis();
    for (double v : {0.0, 1.0}) {
      Node child;
      child.bound = obj;
      child.id = next_id++;
      child.fixes = node.fixes;
      child.fixes.emplace_back(branch_var, v);
      child.basis = basis;
      open.push(std::move(child));
    }
  }

  if (open.empty() && term == Status::optimal && have_inc) out.best_bound = inc_obj;
  out.has_incumbent = have_inc;
  if (have_inc) {
    out.objective = inc_obj;
    out.x = std::move(inc_x);
    out.rel_gap = std::max(0.0, gap_of(out.best_bound));
    out.status = term == Status::optimal || out.rel_gap <= opt.rel_gap ? Status::optimal : term;
  } else {
    out.status = term == Status::optimal ? Status::infeasible : term;
  }
  return out;
}

}  // namespace stochuc::milp
