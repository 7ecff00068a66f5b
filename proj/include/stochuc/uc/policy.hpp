#pragma once

#include <vector>

#include "stochuc/common.hpp"
#include "stochuc/forecast.hpp"

namespace stochuc {

//! How reserve requirements are expressed inside a UC model: split into the
//! four products (regulation up/down, spinning, non-spinning, cascading by
//! quality), or a single generic up-reserve row per hour (the per-scenario
//! form used by the stochastic model and its degenerate checks).
enum class ReserveMode { product_split, single_row, none };

struct ReserveFractions {
  double reg_up = 0.15;
  double spinning = 0.425;
  double non_spinning = 0.425;
  // regulation-down requirement is sized equal to regulation-up
};

struct Penalties {
  double load_shed = 3500.0;       // $/MWh
  double reserve_short = 1100.0;   // $/MWh
  double wind_spill = 0.0;         // $/MWh
};

struct ReservePolicy {
  double contingency_mw = 0.0;
  std::vector<double> dynamic_mw;  // per hour; empty means all zero
  ReserveFractions fractions;
  Penalties penalties;
  ReserveMode mode = ReserveMode::product_split;

  double total_requirement(int t) const {
    double dyn = t < (int)dynamic_mw.size() ? dynamic_mw[t] : 0.0;
    return contingency_mw + dyn;
  }

  void validate() const {
    const auto& f = fractions;
    if (f.reg_up < 0 || f.spinning < 0 || f.non_spinning < 0)
      throw ValidationError("reserve fractions must be nonnegative");
    if (std::abs(f.reg_up + f.spinning + f.non_spinning - 1.0) > 1e-9)
      throw ValidationError("up-product reserve fractions must sum to 1");
    for (double d : dynamic_mw)
      if (d < 0) throw ValidationError("dynamic reserve must be nonnegative");
    if (contingency_mw < 0) throw ValidationError("contingency reserve must be nonnegative");
  }
};

//! Hourly dynamic reserve: the gap between the median and a low quantile,
//! summed over farms and floored at zero.
inline std::vector<double> dynamic_reserve(const ProbabilisticForecast& pf,
                                           double lower_tau) {
  if (!(lower_tau > 0.0 && lower_tau <= 0.5))
    throw ValidationError("dynamic_reserve: lower quantile must be in (0, 0.5]");
  std::vector<double> out(pf.horizon(), 0.0);
  for (int t = 0; t < pf.horizon(); ++t) {
    double v = 0;
    for (int f = 0; f < pf.n_farms(); ++f)
      v += pf.quantile(f, t, 0.5) - pf.quantile(f, t, lower_tau);
    out[t] = std::max(0.0, v);
  }
  return out;
}

}  // namespace stochuc
