#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bops/inventory.hpp"
#include "bops/oracle.hpp"
#include "bops/params.hpp"

namespace bops {

// The five regimes an optimal (q, mu_bar) can fall into. BOPS regimes have
// every retail customer ordering ahead (mu_bar <= c_o); Store regimes have
// them walking in (mu_bar > c_o). The suffix tracks availability at the
// optimum: I full stock, II interior, III zero stock. A zero-stock walk-in
// regime can never be optimal, so there is no Store III.
enum class SolutionRegion { BopsI, BopsII, BopsIII, StoreI, StoreII };

inline std::string_view to_string(SolutionRegion r) {
  switch (r) {
    case SolutionRegion::BopsI: return "BOPS I";
    case SolutionRegion::BopsII: return "BOPS II";
    case SolutionRegion::BopsIII: return "BOPS III";
    case SolutionRegion::StoreI: return "Store I";
    case SolutionRegion::StoreII: return "Store II";
  }
  return "?";
}

struct RegionalOptimum {
  SolutionRegion region;
  double q;
  double profit;
};

// Profit-maximizing stock level for a fixed mu_bar, with the regime it lands
// in and the optimal profit. With C = k (M - mu_bar):
//
//   mu_bar <= c_o (pickup side):
//     mu_bar <  (c/(p+c)) c_o            BOPS III  q = 0
//                                                  pi = p (c_o - mu_bar) - C
//     mu_bar >= (c/(p-c)) c_o and p>=2c  BOPS I    q = c_o
//                                                  pi = (p - c) c_o - C
//     otherwise                          BOPS II   q = [(p mu/c)^2 - (c_o - mu)^2] / (4 mu)
//                                                  pi = (c / 4 mu) [((p-c)/c) mu + c_o]^2 - C
//   mu_bar > c_o (walk-in side):
//     p >= 2c                            Store I   q = c_o, pi = (p - c) c_o - C
//     c < p < 2c                         Store II  q = (p/2c)^2 c_o, pi = (p^2/4c) c_o - C
//
// The shared endpoint mu_bar = (c/(p-c)) c_o is labelled BOPS I; both
// formulas give q = c_o and the same profit there.
inline RegionalOptimum optimal_q_given_mu(const ModelParams& m, double mu_bar) {
  detail::require(mu_bar >= 0 && mu_bar <= m.M, "mu_bar must lie in [0, M]");
  const double C = reduction_cost(m, mu_bar);
  if (mu_bar <= m.c_o) {
    if (mu_bar < m.c / (m.p + m.c) * m.c_o)
      return {SolutionRegion::BopsIII, 0.0, m.p * (m.c_o - mu_bar) - C};
    if (m.p >= 2.0 * m.c && mu_bar >= m.c / (m.p - m.c) * m.c_o)
      return {SolutionRegion::BopsI, m.c_o, (m.p - m.c) * m.c_o - C};
    const double a = m.p * mu_bar / m.c;
    const double gap = m.c_o - mu_bar;
    const double q = (a * a - gap * gap) / (4.0 * mu_bar);
    const double s = (m.p - m.c) / m.c * mu_bar + m.c_o;
    return {SolutionRegion::BopsII, q, m.c / (4.0 * mu_bar) * s * s - C};
  }
  if (m.p >= 2.0 * m.c)
    return {SolutionRegion::StoreI, m.c_o, (m.p - m.c) * m.c_o - C};
  const double half = m.p / (2.0 * m.c);
  return {SolutionRegion::StoreII, half * half * m.c_o,
          m.p * m.p / (4.0 * m.c) * m.c_o - C};
}

// Best mu_bar inside a given regime. The BOPS II profit is convex in mu_bar,
// so its maximum sits at an interval endpoint: the right one. Throws when the
// regime's price condition excludes it for these parameters.
inline double local_optimal_mu(const ModelParams& m, SolutionRegion region) {
  const bool high_margin = m.p >= 2.0 * m.c;
  switch (region) {
    case SolutionRegion::BopsI:
      detail::require(high_margin, "BOPS I requires p >= 2c");
      return m.c_o;
    case SolutionRegion::BopsII:
      return high_margin ? m.c / (m.p - m.c) * m.c_o : m.c_o;
    case SolutionRegion::BopsIII:
      return 0.0;
    case SolutionRegion::StoreI:
      detail::require(high_margin, "Store I requires p >= 2c");
      return m.M;
    case SolutionRegion::StoreII:
      detail::require(!high_margin, "Store II requires c < p < 2c");
      return m.M;
  }
  throw std::invalid_argument("unknown region");
}

struct EquilibriumResult {
  SolutionRegion region;
  double q;
  double mu_bar;
  double xi;
  double demand;
  double profit;
};

// Global optimum over (q, mu_bar). Only two candidates survive the regional
// comparison: eliminate the wait entirely and stock nothing (BOPS III), or
// make no wait-reduction effort and serve walk-ins (Store I / Store II). The
// switch sits where the two profits cross,
//   k = (c_o / M) c            for p >= 2c,
//   k = (1 - p/4c) p c_o / M   for c < p < 2c,
// with ties going to BOPS III.
inline EquilibriumResult global_equilibrium(const ModelParams& m) {
  m.validate();
  const auto bops3 = [&] {
    return EquilibriumResult{SolutionRegion::BopsIII, 0.0, 0.0, 0.0, m.c_o,
                             m.p * m.c_o - m.k * m.M};
  };
  if (m.p >= 2.0 * m.c) {
    if (m.k <= m.c_o / m.M * m.c) return bops3();
    return {SolutionRegion::StoreI, m.c_o, m.M, 1.0, m.c_o, (m.p - m.c) * m.c_o};
  }
  if (m.k <= (1.0 - m.p / (4.0 * m.c)) * m.p * m.c_o / m.M) return bops3();
  const double xi = m.p / (2.0 * m.c);
  return {SolutionRegion::StoreII, xi * xi * m.c_o, m.M, xi, xi * m.c_o,
          m.p * m.p / (4.0 * m.c) * m.c_o};
}

struct ReVerification {
  bool consumer_ok;     // sampled choices attain the maximal utility
  bool argmax_ok;       // profit within grid slack of the brute-force optimum
  bool fixed_point_ok;  // belief matches min{q / D, 1}
  double profit_gap;    // grid-best profit minus profit at the candidate
  double profit_tolerance;
  double fixed_point_residual;

  bool all_ok() const { return consumer_ok && argmax_ok && fixed_point_ok; }
};

// Checks a candidate (q, mu_bar, xi_hat) against the three equilibrium
// conditions: consumers choose optimally given the belief, the retailer's
// point is profit-maximal (against the brute-force grid, within its slack),
// and the belief reproduces itself through min{q / D, 1}.
inline ReVerification verify_re_equilibrium(const ModelParams& m, double q,
                                            double mu_bar, double xi_hat,
                                            const GridSpec& grid) {
  ReVerification out{};

  out.consumer_ok = true;
  const int samples = 800;
  for (int i = 0; i <= samples; ++i) {
    const double t = 2.0 * m.c_o * i / samples;
    const ChannelDecision d = choose_channel(m, xi_hat, t, mu_bar);
    const double ub = utility_bops(m, xi_hat, t, mu_bar);
    const double us = utility_store(m, xi_hat, t, mu_bar);
    const double uo = utility_online(m);
    const double chosen = d.channel == Channel::Bops    ? ub
                          : d.channel == Channel::Store ? us
                                                        : uo;
    if (chosen < std::max({ub, us, uo}) - 1e-12) {
      out.consumer_ok = false;
      break;
    }
  }

  const GridOptimum opt = brute_force_optimum(m, grid);
  out.profit_tolerance = grid.profit_slack(m);
  out.profit_gap = opt.profit - profit(m, q, mu_bar);
  out.argmax_ok = std::abs(out.profit_gap) <= out.profit_tolerance;

  const double D = demand(m, xi_hat, mu_bar);
  const double target = D > 0 ? std::min(q / D, 1.0) : (q > 0 ? 1.0 : xi_hat);
  out.fixed_point_residual = std::abs(xi_hat - target);
  out.fixed_point_ok = out.fixed_point_residual <= 1e-9;
  return out;
}

inline ReVerification verify_re_equilibrium(const ModelParams& m, double q,
                                            double mu_bar, double xi_hat) {
  return verify_re_equilibrium(m, q, mu_bar, xi_hat, GridSpec::defaults(m));
}

// One sweep axis of a region map: `param` is one of p, c, c_o, k, M, mu_bar.
// steps = 1 degenerates to the single point lo; otherwise endpoints are
// included.
struct AxisSpec {
  std::string param;
  double lo;
  double hi;
  int steps;

  double value(int i) const {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
};

// Row-major classification grid; cells[iy * x.steps + ix], empty = invalid
// parameter combination at that point.
struct RegionGrid {
  AxisSpec x;
  AxisSpec y;
  std::vector<std::optional<SolutionRegion>> cells;

  const std::optional<SolutionRegion>& at(int ix, int iy) const {
    return cells[static_cast<size_t>(iy) * x.steps + ix];
  }
};

inline std::string_view region_label(const std::optional<SolutionRegion>& cell) {
  return cell ? to_string(*cell) : std::string_view("invalid");
}

namespace detail {

inline bool set_model_param(ModelParams& m, const std::string& name, double value) {
  if (name == "p") m.p = value;
  else if (name == "c") m.c = value;
  else if (name == "c_o") m.c_o = value;
  else if (name == "k") m.k = value;
  else if (name == "M") m.M = value;
  else return false;
  return true;
}

}  // namespace detail

// Classifies a 2-D parameter sweep. Sweeps that include a mu_bar axis map the
// fixed-mu_bar stock regimes (optimal_q_given_mu); sweeps over model
// parameters alone map the equilibrium regimes (global_equilibrium). Grid
// points violating the model constraints come back empty and render as
// "invalid".
inline RegionGrid region_map(const ModelParams& base, const AxisSpec& x,
                             const AxisSpec& y) {
  const auto known = [](const std::string& s) {
    return s == "p" || s == "c" || s == "c_o" || s == "k" || s == "M" ||
           s == "mu_bar";
  };
  detail::require(known(x.param) && known(y.param),
                  "axis parameter must be one of p, c, c_o, k, M, mu_bar");
  detail::require(x.param != y.param, "axis parameters must differ");
  detail::require(x.steps >= 1 && y.steps >= 1, "axis steps must be >= 1");

  RegionGrid out{x, y, {}};
  out.cells.reserve(static_cast<size_t>(x.steps) * y.steps);
  for (int iy = 0; iy < y.steps; ++iy) {
    for (int ix = 0; ix < x.steps; ++ix) {
      ModelParams m = base;
      double mu = 0.0;
      bool has_mu = false;
      const auto apply = [&](const AxisSpec& axis, double val) {
        if (axis.param == "mu_bar") {
          mu = val;
          has_mu = true;
        } else {
          detail::set_model_param(m, axis.param, val);
        }
      };
      apply(x, x.value(ix));
      apply(y, y.value(iy));

      std::optional<SolutionRegion> cell;
      if (m.is_valid() && (!has_mu || (mu >= 0 && mu <= m.M))) {
        cell = has_mu ? optimal_q_given_mu(m, mu).region
                      : global_equilibrium(m).region;
      }
      out.cells.push_back(cell);
    }
  }
  return out;
}

}  // namespace bops
