#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "stochuc/milp/model.hpp"

namespace stochuc::milp {

//! Bounded-variable revised simplex over the computational form
//!   A x - s = 0,  lb <= x <= ub,  row_lo <= s <= row_hi   (minimize c'x)
//! with a sparse-LU basis, product-form eta updates, and power-of-two
//! row/column equilibration. Primal is two-phase (composite phase 1) with a
//! Bland fallback; the dual variant serves warm starts after bound changes
//! and row additions, falling back to primal on any trouble.
struct SimplexOptions {
  double feas_tol = 1e-7;
  double dual_tol = 1e-7;
  double pivot_tol = 1e-9;
  long iteration_limit = 2000000;
  int refactor_interval = 100;
};

class SimplexEngine {
public:
  enum class VStat : char { Basic, AtLower, AtUpper, FreeNB };
  using Options = SimplexOptions;

  struct Basis {
    std::vector<int> basic;
    std::vector<VStat> vstat;
  };

  explicit SimplexEngine(const Model& m, Options opt = Options()) : opt_(opt) {
    n_ = m.num_vars();
    rebuild_from(m);
  }

  //! Re-snapshots the model (structure and bounds). Keeps the current basis
  //! when dimensions still match (new rows get their logicals made basic).
  void rebuild_from(const Model& m) {
    const int old_m = m_;
    const int old_n = n_;
    n_ = m.num_vars();
    m_ = m.num_cons();
    const int ncol = n_ + m_;

    // Power-of-two equilibration on the structural matrix.
    row_scale_.assign(m_, 1.0);
    col_scale_.assign(n_, 1.0);
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<double> rmax(m_, 0.0);
      for (int i = 0; i < m_; ++i)
        for (const auto& [j, v] : m.rows()[i])
          rmax[i] = std::max(rmax[i], std::abs(v) * row_scale_[i] * col_scale_[j]);
      for (int i = 0; i < m_; ++i)
        if (rmax[i] > 0) row_scale_[i] *= pow2_scale(rmax[i]);
      std::vector<double> cmax(n_, 0.0);
      for (int i = 0; i < m_; ++i)
        for (const auto& [j, v] : m.rows()[i])
          cmax[j] = std::max(cmax[j], std::abs(v) * row_scale_[i] * col_scale_[j]);
      for (int j = 0; j < n_; ++j)
        if (cmax[j] > 0) col_scale_[j] *= pow2_scale(cmax[j]);
    }

    // Column-wise storage: structural columns scaled, logicals implicit (-e_i).
    cols_.assign(n_, {});
    for (int i = 0; i < m_; ++i)
      for (const auto& [j, v] : m.rows()[i])
        cols_[j].push_back({i, v * row_scale_[i] * col_scale_[j]});

    lb_.resize(ncol);
    ub_.resize(ncol);
    cost_.assign(ncol, 0.0);
    for (int j = 0; j < n_; ++j) {
      lb_[j] = scale_lb(m.raw_lb()[j], col_scale_[j]);
      ub_[j] = scale_ub(m.raw_ub()[j], col_scale_[j]);
      cost_[j] = m.raw_obj()[j] * col_scale_[j];
    }
    for (int i = 0; i < m_; ++i) {
      lb_[n_ + i] = scale_lb(m.raw_row_lo()[i], 1.0 / row_scale_[i]);
      ub_[n_ + i] = scale_ub(m.raw_row_hi()[i], 1.0 / row_scale_[i]);
    }

    if (old_m == 0 || old_n != n_ || (int)basis_.basic.size() > m_) {
      reset_to_logical_basis();
    } else {
      basis_.vstat.resize(ncol, VStat::AtLower);
      // place logicals of freshly added rows into the basis
      for (int i = old_m; i < m_; ++i) {
        basis_.basic.push_back(n_ + i);
        basis_.vstat[n_ + i] = VStat::Basic;
      }
      // relocate logical statuses if n changed (not supported: n fixed above)
      normalize_nonbasic_statuses();
      factorized_ = false;
    }
    x_.assign(ncol, 0.0);
    d_.assign(ncol, 0.0);
  }

  //! Adjust a structural variable's bounds in place (model-space values).
  void set_var_bounds(int j, double lo, double hi) {
    lb_[j] = scale_lb(lo, col_scale_[j]);
    ub_[j] = scale_ub(hi, col_scale_[j]);
    if (basis_.vstat[j] != VStat::Basic) snap_nonbasic(j);
  }

  void set_row_bounds(int i, double lo, double hi) {
    lb_[n_ + i] = scale_lb(lo, 1.0 / row_scale_[i]);
    ub_[n_ + i] = scale_ub(hi, 1.0 / row_scale_[i]);
    if (basis_.vstat[n_ + i] != VStat::Basic) snap_nonbasic(n_ + i);
  }

  void reset_to_logical_basis() {
    const int ncol = n_ + m_;
    basis_.basic.resize(m_);
    basis_.vstat.assign(ncol, VStat::AtLower);
    for (int i = 0; i < m_; ++i) {
      basis_.basic[i] = n_ + i;
      basis_.vstat[n_ + i] = VStat::Basic;
    }
    for (int j = 0; j < n_; ++j) basis_.vstat[j] = default_nonbasic_status(j);
    factorized_ = false;
  }

  Basis save_basis() const { return basis_; }

  void load_basis(const Basis& b) {
    basis_ = b;
    normalize_nonbasic_statuses();
    factorized_ = false;
  }

  //! Primal simplex from the current basis; returns optimal/infeasible/unbounded.
  Status solve_primal() {
    if (!refactor()) {
      reset_to_logical_basis();
      if (!refactor()) return Status::infeasible;  // cannot happen: logical basis is regular
    }
    compute_basic_values();
    Status st = primal_loop();
    if (st == Status::optimal) finalize_duals();
    return st;
  }

  //! Dual simplex warm start; falls back to primal on stall or dual infeasibility.
  Status solve_dual() {
    if (!refactor()) return solve_primal_after_reset();
    compute_basic_values();
    recompute_reduced_costs();
    if (!dual_feasible()) return solve_primal();
    Status st = dual_loop();
    if (st == Status::optimal) {
      // confirm with exact refactorization; clean up residual trouble via primal
      refactor();
      compute_basic_values();
      recompute_reduced_costs();
      if (max_primal_infeas() > opt_.feas_tol || !dual_feasible()) return solve_primal();
      finalize_duals();
      return Status::optimal;
    }
    if (st == Status::infeasible) return Status::infeasible;
    return solve_primal();
  }

  long iterations() const { return iterations_; }

  // ---- result accessors (model space) ----
  double objective(const Model& m) const {
    double obj = m.obj_constant();
    for (int j = 0; j < n_; ++j) obj += m.raw_obj()[j] * x_[j] * col_scale_[j];
    return obj;
  }
  std::vector<double> primal_values() const {
    std::vector<double> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = x_[j] * col_scale_[j];
    return out;
  }
  std::vector<double> dual_values() const {
    std::vector<double> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = y_[i] * row_scale_[i];
    return out;
  }
  std::vector<double> reduced_cost_values() const {
    std::vector<double> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = d_[j] / col_scale_[j];
    return out;
  }
  double var_value(int j) const { return x_[j] * col_scale_[j]; }

private:
  static double pow2_scale(double mx) {
    // scale factor rounding 1/mx to a power of two, clamped
    int e = 0;
    std::frexp(1.0 / mx, &e);
    e = std::clamp(e - 1, -12, 12);
    return std::ldexp(1.0, e);
  }
  static double scale_lb(double v, double s) { return is_finite_bound(v) ? v / s : -kInf; }
  static double scale_ub(double v, double s) { return is_finite_bound(v) ? v / s : kInf; }

  VStat default_nonbasic_status(int col) const {
    if (is_finite_bound(lb_[col])) return VStat::AtLower;
    if (is_finite_bound(ub_[col])) return VStat::AtUpper;
    return VStat::FreeNB;
  }

  void snap_nonbasic(int col) {
    VStat s = basis_.vstat[col];
    if (s == VStat::AtLower && !is_finite_bound(lb_[col])) basis_.vstat[col] = default_nonbasic_status(col);
    if (s == VStat::AtUpper && !is_finite_bound(ub_[col])) basis_.vstat[col] = default_nonbasic_status(col);
  }

  void normalize_nonbasic_statuses() {
    for (int c = 0; c < n_ + m_; ++c)
      if (basis_.vstat[c] != VStat::Basic) snap_nonbasic(c);
  }

  double nonbasic_value(int col) const {
    switch (basis_.vstat[col]) {
      case VStat::AtLower: return lb_[col];
      case VStat::AtUpper: return ub_[col];
      default: return 0.0;
    }
  }

  // ---- factorization ----
  bool refactor() {
    if (m_ == 0) {
      etas_.clear();
      factorized_ = true;
      return true;
    }
    Eigen::SparseMatrix<double> B(m_, m_);
    std::vector<Eigen::Triplet<double>> trip;
    for (int k = 0; k < m_; ++k) {
      int col = basis_.basic[k];
      if (col >= n_) {
        trip.emplace_back(col - n_, k, -1.0);
      } else {
        for (const auto& [i, v] : cols_[col]) trip.emplace_back(i, k, v);
      }
    }
    B.setFromTriplets(trip.begin(), trip.end());
    lu_.compute(B);
    if (lu_.info() != Eigen::Success) return false;
    etas_.clear();
    factorized_ = true;
    return true;
  }

  struct Eta {
    int r;
    std::vector<std::pair<int, double>> col;  // sparse alpha
    double pivot;
  };

  void ftran(Eigen::VectorXd& v) {
    if (m_ == 0) return;
    v = lu_.solve(v);
    for (const auto& e : etas_) {
      double vr = v[e.r] / e.pivot;
      if (vr != 0.0)
        for (const auto& [i, a] : e.col)
          if (i != e.r) v[i] -= a * vr;
      v[e.r] = vr;
    }
  }

  void btran(Eigen::VectorXd& v) {
    if (m_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = v[it->r];
      for (const auto& [i, a] : it->col)
        if (i != it->r) acc -= a * v[i];
      v[it->r] = acc / it->pivot;
    }
    v = lu_.adjoint().solve(v).eval();
  }

  Eigen::VectorXd column_dense(int col) const {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m_);
    if (col >= n_)
      a[col - n_] = -1.0;
    else
      for (const auto& [i, v] : cols_[col]) a[i] = v;
    return a;
  }

  double col_dot(int col, const Eigen::VectorXd& y) const {
    if (col >= n_) return -y[col - n_];
    double s = 0;
    for (const auto& [i, v] : cols_[col]) s += v * y[i];
    return s;
  }

  void compute_basic_values() {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int c = 0; c < n_ + m_; ++c) {
      if (basis_.vstat[c] == VStat::Basic) continue;
      double xv = nonbasic_value(c);
      x_[c] = xv;
      if (xv == 0.0) continue;
      if (c >= n_)
        rhs[c - n_] += xv;  // minus column (-e_i) times value, negated
      else
        for (const auto& [i, v] : cols_[c]) rhs[i] -= v * xv;
    }
    ftran(rhs);
    for (int k = 0; k < m_; ++k) x_[basis_.basic[k]] = rhs[k];
  }

  double infeas_of(int col) const {
    double v = x_[col];
    if (v < lb_[col] - opt_.feas_tol) return lb_[col] - v;
    if (v > ub_[col] + opt_.feas_tol) return v - ub_[col];
    return 0.0;
  }

  double max_primal_infeas() const {
    double mx = 0;
    for (int k = 0; k < m_; ++k) mx = std::max(mx, infeas_of(basis_.basic[k]));
    return mx;
  }

  void recompute_reduced_costs() {
    Eigen::VectorXd cb = Eigen::VectorXd::Zero(m_);
    for (int k = 0; k < m_; ++k) cb[k] = cost_[basis_.basic[k]];
    btran(cb);
    y_ = cb;
    for (int c = 0; c < n_ + m_; ++c)
      d_[c] = basis_.vstat[c] == VStat::Basic ? 0.0 : cost_[c] - col_dot(c, cb);
  }

  bool dual_feasible() const {
    for (int c = 0; c < n_ + m_; ++c) {
      if (basis_.vstat[c] == VStat::Basic) continue;
      if (lb_[c] == ub_[c]) continue;  // fixed: any sign admissible
      if (basis_.vstat[c] == VStat::AtLower && d_[c] < -opt_.dual_tol) return false;
      if (basis_.vstat[c] == VStat::AtUpper && d_[c] > opt_.dual_tol) return false;
      if (basis_.vstat[c] == VStat::FreeNB && std::abs(d_[c]) > opt_.dual_tol) return false;
    }
    return true;
  }

  void finalize_duals() { recompute_reduced_costs(); }

  Status solve_primal_after_reset() {
    reset_to_logical_basis();
    return solve_primal();
  }

  // ---- primal simplex ----
  Status primal_loop() {
    int degen_run = 0;
    bool bland = false;
    int clean_rounds = 0;
    const int ncol = n_ + m_;
    while (true) {
      if (++iterations_ > opt_.iteration_limit) return Status::iteration_limit;
      if ((int)etas_.size() >= opt_.refactor_interval) {
        if (!refactor()) return solve_primal_after_reset_status();
        compute_basic_values();
      }

      const bool phase1 = max_primal_infeas() > opt_.feas_tol;
      Eigen::VectorXd gb = Eigen::VectorXd::Zero(m_);
      for (int k = 0; k < m_; ++k) {
        int col = basis_.basic[k];
        if (phase1) {
          if (x_[col] < lb_[col] - opt_.feas_tol)
            gb[k] = -1.0;
          else if (x_[col] > ub_[col] + opt_.feas_tol)
            gb[k] = 1.0;
        } else {
          gb[k] = cost_[col];
        }
      }
      btran(gb);

      int q = -1;
      int dir = 0;
      double best = 0.0;
      for (int c = 0; c < ncol; ++c) {
        if (basis_.vstat[c] == VStat::Basic) continue;
        if (lb_[c] == ub_[c]) continue;
        double dj = (phase1 ? 0.0 : cost_[c]) - col_dot(c, gb);
        int cdir = 0;
        if (basis_.vstat[c] == VStat::AtLower && dj < -opt_.dual_tol)
          cdir = 1;
        else if (basis_.vstat[c] == VStat::AtUpper && dj > opt_.dual_tol)
          cdir = -1;
        else if (basis_.vstat[c] == VStat::FreeNB && std::abs(dj) > opt_.dual_tol)
          cdir = dj > 0 ? -1 : 1;
        if (!cdir) continue;
        if (bland) {
          q = c;
          dir = cdir;
          break;
        }
        if (std::abs(dj) > best) {
          best = std::abs(dj);
          q = c;
          dir = cdir;
        }
      }

      if (q < 0) {
        if (phase1) return Status::infeasible;
        // optimal candidate: confirm against a fresh factorization
        if (!etas_.empty() && clean_rounds < 3) {
          ++clean_rounds;
          if (!refactor()) return solve_primal_after_reset_status();
          compute_basic_values();
          if (max_primal_infeas() > opt_.feas_tol) continue;
          // re-price once more with the clean basis
          bool improvable = false;
          Eigen::VectorXd cb = Eigen::VectorXd::Zero(m_);
          for (int k = 0; k < m_; ++k) cb[k] = cost_[basis_.basic[k]];
          btran(cb);
          for (int c = 0; c < ncol && !improvable; ++c) {
            if (basis_.vstat[c] == VStat::Basic || lb_[c] == ub_[c]) continue;
            double dj = cost_[c] - col_dot(c, cb);
            if ((basis_.vstat[c] == VStat::AtLower && dj < -opt_.dual_tol) ||
                (basis_.vstat[c] == VStat::AtUpper && dj > opt_.dual_tol) ||
                (basis_.vstat[c] == VStat::FreeNB && std::abs(dj) > opt_.dual_tol))
              improvable = true;
          }
          if (improvable) continue;
        }
        return Status::optimal;
      }

      Eigen::VectorXd alpha = column_dense(q);
      ftran(alpha);

      // ratio test
      double limit = kInf;
      if (is_finite_bound(lb_[q]) && is_finite_bound(ub_[q])) limit = ub_[q] - lb_[q];
      int leave_k = -1;
      double leave_to_upper = false;
      double best_piv = 0.0;
      const double rel = 1e-9;
      for (int k = 0; k < m_; ++k) {
        double a = alpha[k];
        if (std::abs(a) < opt_.pivot_tol) continue;
        int col = basis_.basic[k];
        double rate = -dir * a;  // d x_col / d step
        double cap = kInf;
        bool to_upper = false;
        if (phase1 && x_[col] < lb_[col] - opt_.feas_tol) {
          if (rate > 0) cap = (lb_[col] - x_[col]) / rate;  // reaches its violated bound
          else continue;                                     // moving away: priced by gamma
        } else if (phase1 && x_[col] > ub_[col] + opt_.feas_tol) {
          if (rate < 0) {
            cap = (ub_[col] - x_[col]) / rate;
            to_upper = true;
          } else {
            continue;
          }
        } else if (rate > 0) {
          if (!is_finite_bound(ub_[col])) continue;
          cap = (ub_[col] - x_[col]) / rate;
          to_upper = true;
        } else {
          if (!is_finite_bound(lb_[col])) continue;
          cap = (lb_[col] - x_[col]) / rate;
        }
        cap = std::max(cap, 0.0);
        if (cap < limit - rel * (1.0 + cap)) {
          limit = cap;
          leave_k = k;
          leave_to_upper = to_upper;
          best_piv = std::abs(a);
        } else if (leave_k >= 0 && cap <= limit + rel * (1.0 + limit) && std::abs(a) > best_piv) {
          leave_k = k;
          leave_to_upper = to_upper;
          best_piv = std::abs(a);
        }
      }

      if (!is_finite_bound(limit)) {
        if (phase1) return Status::infeasible;  // cannot happen for regular data
        return Status::unbounded;
      }

      degen_run = limit < 1e-10 ? degen_run + 1 : 0;
      if (degen_run > 300) bland = true;
      if (degen_run == 0 && bland) bland = false;

      if (leave_k < 0) {
        // entering variable's own range binds: bound flip, basis unchanged
        apply_step(q, dir, limit, alpha);
        basis_.vstat[q] = basis_.vstat[q] == VStat::AtLower ? VStat::AtUpper : VStat::AtLower;
        continue;
      }
      apply_step(q, dir, limit, alpha);
      pivot(q, leave_k, leave_to_upper, alpha);
    }
  }

  Status solve_primal_after_reset_status() {
    reset_to_logical_basis();
    if (!refactor()) return Status::infeasible;
    compute_basic_values();
    return primal_loop();
  }

  void apply_step(int q, int dir, double step, const Eigen::VectorXd& alpha) {
    if (step != 0.0) {
      for (int k = 0; k < m_; ++k)
        if (alpha[k] != 0.0) x_[basis_.basic[k]] -= dir * step * alpha[k];
      x_[q] = (basis_.vstat[q] == VStat::Basic ? x_[q] : nonbasic_value(q)) + dir * step;
    } else {
      x_[q] = basis_.vstat[q] == VStat::Basic ? x_[q] : nonbasic_value(q);
    }
  }

  void pivot(int q, int leave_k, bool leave_to_upper, const Eigen::VectorXd& alpha) {
    int leaving = basis_.basic[leave_k];
    x_[leaving] = leave_to_upper ? ub_[leaving] : lb_[leaving];
    basis_.vstat[leaving] = leave_to_upper ? VStat::AtUpper : VStat::AtLower;
    if (lb_[leaving] == ub_[leaving]) basis_.vstat[leaving] = VStat::AtLower;
    basis_.basic[leave_k] = q;
    basis_.vstat[q] = VStat::Basic;

    Eta e;
    e.r = leave_k;
    e.pivot = alpha[leave_k];
    for (int k = 0; k < m_; ++k)
      if (std::abs(alpha[k]) > 1e-14) e.col.emplace_back(k, alpha[k]);
    etas_.push_back(std::move(e));
  }

  // ---- dual simplex ----
  Status dual_loop() {
    int stall = 0;
    while (true) {
      if (++iterations_ > opt_.iteration_limit) return Status::iteration_limit;
      if ((int)etas_.size() >= opt_.refactor_interval) {
        if (!refactor()) return Status::iteration_limit;  // caller falls back to primal
        compute_basic_values();
        recompute_reduced_costs();
      }

      int leave_k = -1;
      double worst = opt_.feas_tol;
      bool below = false;
      for (int k = 0; k < m_; ++k) {
        int col = basis_.basic[k];
        double v = x_[col];
        if (v < lb_[col] - worst) {
          worst = lb_[col] - v;
          leave_k = k;
          below = true;
        } else if (v > ub_[col] + worst) {
          worst = v - ub_[col];
          leave_k = k;
          below = false;
        }
      }
      if (leave_k < 0) return Status::optimal;
      if (stall > 4000) return Status::iteration_limit;  // punt to primal

      Eigen::VectorXd rho = Eigen::VectorXd::Zero(m_);
      rho[leave_k] = 1.0;
      btran(rho);

      // entering choice: ratio closest to zero with the largest pivot
      int q = -1;
      double best_ratio = 0.0;
      double best_piv = 0.0;
      const int ncol = n_ + m_;
      for (int c = 0; c < ncol; ++c) {
        if (basis_.vstat[c] == VStat::Basic || lb_[c] == ub_[c]) continue;
        double arj = col_dot(c, rho);
        if (std::abs(arj) < opt_.pivot_tol) continue;
        bool eligible;
        if (below)
          eligible = (basis_.vstat[c] == VStat::AtLower && arj < 0) ||
                     (basis_.vstat[c] == VStat::AtUpper && arj > 0) ||
                     basis_.vstat[c] == VStat::FreeNB;
        else
          eligible = (basis_.vstat[c] == VStat::AtLower && arj > 0) ||
                     (basis_.vstat[c] == VStat::AtUpper && arj < 0) ||
                     basis_.vstat[c] == VStat::FreeNB;
        if (!eligible) continue;
        double ratio = d_[c] / arj;  // below-case: <= 0; above-case: >= 0
        double key = std::abs(ratio);
        if (q < 0 || key < best_ratio - 1e-12 ||
            (key <= best_ratio + 1e-12 && std::abs(arj) > best_piv)) {
          q = c;
          best_ratio = key;
          best_piv = std::abs(arj);
        }
      }
      if (q < 0) return Status::infeasible;  // dual ray: primal infeasible

      Eigen::VectorXd alpha = column_dense(q);
      ftran(alpha);
      double arq = alpha[leave_k];
      if (std::abs(arq) < opt_.pivot_tol) {
        if (!refactor()) return Status::iteration_limit;
        compute_basic_values();
        recompute_reduced_costs();
        if (++stall > 6) return Status::iteration_limit;
        continue;
      }

      int leaving = basis_.basic[leave_k];
      double bound = below ? lb_[leaving] : ub_[leaving];
      double delta = (x_[leaving] - bound) / arq;
      stall = std::abs(delta) < 1e-12 ? stall + 1 : 0;

      double theta = d_[q] / arq;
      // update reduced costs: d_j -= theta * alpha_row_j
      for (int c = 0; c < ncol; ++c) {
        if (basis_.vstat[c] == VStat::Basic || c == q) continue;
        double arj = col_dot(c, rho);
        if (arj != 0.0) d_[c] -= theta * arj;
      }
      d_[leaving] = -theta;
      d_[q] = 0.0;

      for (int k = 0; k < m_; ++k)
        if (alpha[k] != 0.0) x_[basis_.basic[k]] -= delta * alpha[k];
      double enter_from = nonbasic_value(q);
      x_[leaving] = bound;
      x_[q] = enter_from + delta;

      basis_.vstat[leaving] = below ? VStat::AtLower : VStat::AtUpper;
      basis_.basic[leave_k] = q;
      basis_.vstat[q] = VStat::Basic;

      Eta e;
      e.r = leave_k;
      e.pivot = arq;
      for (int k = 0; k < m_; ++k)
        if (std::abs(alpha[k]) > 1e-14) e.col.emplace_back(k, alpha[k]);
      etas_.push_back(std::move(e));
    }
  }

  Options opt_;
  int n_ = 0, m_ = 0;
  std::vector<std::vector<std::pair<int, double>>> cols_;
  std::vector<double> lb_, ub_, cost_;
  std::vector<double> row_scale_, col_scale_;
  Basis basis_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
  std::vector<Eta> etas_;
  bool factorized_ = false;
  std::vector<double> x_, d_;
  Eigen::VectorXd y_;
  long iterations_ = 0;
};

}  // namespace stochuc::milp
