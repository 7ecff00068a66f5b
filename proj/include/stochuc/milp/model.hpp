#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stochuc/common.hpp"

namespace stochuc::milp {

enum class VarType { continuous, binary };
enum class Sense { le, eq, ge };

enum class Status {
  optimal,          // LP optimal, or MILP optimal within the requested gap
  infeasible,
  unbounded,
  iteration_limit,  // LP iteration cap hit
  node_limit,       // B&B node cap hit (incumbent may or may not exist)
  time_limit,
};

struct VarId {
  int value = -1;
  bool valid() const { return value >= 0; }
};
struct ConId {
  int value = -1;
  bool valid() const { return value >= 0; }
};

struct LpSolution {
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> x;              // per variable
  std::vector<double> duals;          // per constraint (shadow price of the row bound)
  std::vector<double> reduced_costs;  // per variable
  long iterations = 0;
};

struct MilpSolution {
  Status status = Status::infeasible;
  bool has_incumbent = false;
  double objective = 0.0;   // incumbent objective (when has_incumbent)
  double best_bound = 0.0;
  double rel_gap = kInf;    // (objective - best_bound) / max(1e-10, |objective|)
  std::vector<double> x;
  long nodes = 0;
  long iterations = 0;      // total simplex iterations
};

struct MilpOptions {
  double rel_gap = 1e-3;
  long node_limit = 1000000;
  double time_limit_s = kInf;
};

//! Sparse linear model (minimization) with incremental constraint addition and
//! binary fixing. Rows are stored as activity ranges [lo, hi]; the classic
//! sense/rhs form maps onto them.
class Model {
public:
  VarId add_variable(const std::string& name, double lb, double ub,
                     double obj_coeff = 0.0, VarType type = VarType::continuous) {
    if (type == VarType::binary && (!is_finite_bound(lb) || !is_finite_bound(ub)))
      throw ValidationError("binary variable " + name + " requires finite bounds");
    if (lb > ub + 1e-12)
      throw ValidationError("variable " + name + ": lb > ub");
    var_names_.push_back(name);
    lb_.push_back(lb);
    ub_.push_back(ub);
    obj_.push_back(obj_coeff);
    type_.push_back(type);
    return VarId{num_vars() - 1};
  }

  ConId add_constraint(const std::string& name,
                       const std::vector<std::pair<VarId, double>>& terms, Sense sense,
                       double rhs) {
    double lo = sense == Sense::le ? -kInf : rhs;
    double hi = sense == Sense::ge ? kInf : rhs;
    return add_range_constraint(name, terms, lo, hi);
  }

  //! Range row: lo <= a'x <= hi.
  ConId add_range_constraint(const std::string& name,
                             const std::vector<std::pair<VarId, double>>& terms, double lo,
                             double hi) {
    std::vector<std::pair<int, double>> row;
    row.reserve(terms.size());
    for (const auto& [v, coeff] : terms) {
      if (!v.valid() || v.value >= num_vars())
        throw ValidationError("constraint " + name + ": unknown variable id " +
                              std::to_string(v.value));
      if (coeff != 0.0) row.emplace_back(v.value, coeff);
    }
    rows_.push_back(std::move(row));
    row_lo_.push_back(lo);
    row_hi_.push_back(hi);
    con_names_.push_back(name);
    return ConId{num_cons() - 1};
  }

  //! Replaces the whole objective (minimize). Terms not mentioned become 0.
  void set_objective(const std::vector<std::pair<VarId, double>>& terms,
                     double constant = 0.0) {
    std::fill(obj_.begin(), obj_.end(), 0.0);
    obj_constant_ = constant;
    for (const auto& [v, c] : terms) {
      if (!v.valid() || v.value >= num_vars())
        throw ValidationError("objective: unknown variable id " + std::to_string(v.value));
      obj_[v.value] = c;
    }
  }

  void set_objective_coeff(VarId v, double c) { obj_.at(v.value) = c; }
  void set_objective_constant(double c) { obj_constant_ = c; }
  void set_bounds(VarId v, double lb, double ub) {
    lb_.at(v.value) = lb;
    ub_.at(v.value) = ub;
  }
  void set_row_bounds(ConId c, double lo, double hi) {
    row_lo_.at(c.value) = lo;
    row_hi_.at(c.value) = hi;
  }

  //! Pins the given binary variables; subsequent LP solves treat them as
  //! constants. Values must cover exactly the binary variables.
  void fix_binaries(const std::vector<std::pair<VarId, double>>& assignment) {
    if (!fixed_saved_.empty()) throw ValidationError("fix_binaries: already fixed; unfix first");
    std::vector<char> covered(num_vars(), 0);
    for (const auto& [v, val] : assignment) {
      if (!v.valid() || v.value >= num_vars() || type_[v.value] != VarType::binary)
        throw ValidationError("fix_binaries: id " + std::to_string(v.value) +
                              " is not a binary variable");
      if (val != 0.0 && val != 1.0)
        throw ValidationError("fix_binaries: value must be 0 or 1");
      covered[v.value] = 1;
    }
    for (int j = 0; j < num_vars(); ++j)
      if (type_[j] == VarType::binary && !covered[j])
        throw ValidationError("fix_binaries: assignment misses binary variable " +
                              var_names_[j]);
    for (const auto& [v, val] : assignment) {
      fixed_saved_.push_back({v.value, lb_[v.value], ub_[v.value]});
      lb_[v.value] = val;
      ub_[v.value] = val;
    }
  }

  void unfix() {
    for (auto it = fixed_saved_.rbegin(); it != fixed_saved_.rend(); ++it) {
      lb_[it->var] = it->lb;
      ub_[it->var] = it->ub;
    }
    fixed_saved_.clear();
  }

  int num_vars() const { return static_cast<int>(lb_.size()); }
  int num_cons() const { return static_cast<int>(rows_.size()); }
  int num_binaries() const {
    int n = 0;
    for (auto t : type_) n += t == VarType::binary;
    return n;
  }

  double lb(VarId v) const { return lb_.at(v.value); }
  double ub(VarId v) const { return ub_.at(v.value); }
  double obj_coeff(VarId v) const { return obj_.at(v.value); }
  double obj_constant() const { return obj_constant_; }
  VarType var_type(VarId v) const { return type_.at(v.value); }
  const std::string& var_name(VarId v) const { return var_names_.at(v.value); }
  const std::string& con_name(ConId c) const { return con_names_.at(c.value); }
  double row_lo(ConId c) const { return row_lo_.at(c.value); }
  double row_hi(ConId c) const { return row_hi_.at(c.value); }

  double row_activity(ConId c, const std::vector<double>& x) const {
    double a = 0;
    for (const auto& [j, v] : rows_.at(c.value)) a += v * x[j];
    return a;
  }

  //! Model dump in the standard text LP-file layout, for external cross-checks.
  void write_lp(std::ostream& out) const {
    out << "Minimize\n obj:";
    bool any = false;
    for (int j = 0; j < num_vars(); ++j)
      if (obj_[j] != 0.0) {
        out << (obj_[j] >= 0 ? " + " : " - ") << fmt_double(std::abs(obj_[j])) << " "
            << var_names_[j];
        any = true;
      }
    if (!any) out << " 0 " << (num_vars() ? var_names_[0] : "x");
    out << "\nSubject To\n";
    for (int i = 0; i < num_cons(); ++i) {
      auto terms = [&](std::ostream& o) {
        for (const auto& [j, v] : rows_[i])
          o << (v >= 0 ? " + " : " - ") << fmt_double(std::abs(v)) << " " << var_names_[j];
      };
      if (row_lo_[i] == row_hi_[i]) {
        out << " " << con_names_[i] << ":";
        terms(out);
        out << " = " << fmt_double(row_lo_[i]) << "\n";
      } else {
        if (is_finite_bound(row_lo_[i])) {
          out << " " << con_names_[i] << "_l:";
          terms(out);
          out << " >= " << fmt_double(row_lo_[i]) << "\n";
        }
        if (is_finite_bound(row_hi_[i])) {
          out << " " << con_names_[i] << "_u:";
          terms(out);
          out << " <= " << fmt_double(row_hi_[i]) << "\n";
        }
      }
    }
    out << "Bounds\n";
    for (int j = 0; j < num_vars(); ++j) {
      out << " ";
      if (is_finite_bound(lb_[j]))
        out << fmt_double(lb_[j]) << " <= ";
      else
        out << "-inf <= ";
      out << var_names_[j];
      if (is_finite_bound(ub_[j]))
        out << " <= " << fmt_double(ub_[j]);
      out << "\n";
    }
    out << "Binaries\n";
    for (int j = 0; j < num_vars(); ++j)
      if (type_[j] == VarType::binary) out << " " << var_names_[j];
    out << "\nEnd\n";
  }

  // Raw access for the solver engine.
  const std::vector<std::vector<std::pair<int, double>>>& rows() const { return rows_; }
  const std::vector<double>& raw_lb() const { return lb_; }
  const std::vector<double>& raw_ub() const { return ub_; }
  const std::vector<double>& raw_obj() const { return obj_; }
  const std::vector<VarType>& raw_types() const { return type_; }
  const std::vector<double>& raw_row_lo() const { return row_lo_; }
  const std::vector<double>& raw_row_hi() const { return row_hi_; }

private:
  struct SavedBound {
    int var;
    double lb, ub;
  };

  std::vector<std::string> var_names_, con_names_;
  std::vector<double> lb_, ub_, obj_;
  std::vector<VarType> type_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
  std::vector<double> row_lo_, row_hi_;
  double obj_constant_ = 0.0;
  std::vector<SavedBound> fixed_saved_;
};

}  // namespace stochuc::milp
