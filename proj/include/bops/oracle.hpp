#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "bops/inventory.hpp"
#include "bops/params.hpp"

namespace bops {

// Search grid for the brute-force profit oracle. Steps count grid points per
// axis, endpoints included; q runs over [0, q_max], mu_bar over [0, M].
struct GridSpec {
  double q_max;
  int q_steps;
  int mu_steps;

  // Demand never exceeds c_o, so q_max = 2 c_o brackets every optimum with
  // margin to spare.
  static GridSpec defaults(const ModelParams& m) { return {2.0 * m.c_o, 400, 400}; }

  void validate() const {
    detail::require(q_max > 0, "q_max must be positive");
    detail::require(q_steps >= 2 && mu_steps >= 2, "grid steps must be >= 2");
  }

  double q_spacing() const { return q_max / (q_steps - 1); }
  double mu_spacing(const ModelParams& m) const { return m.M / (mu_steps - 1); }

  // Worst-case shortfall of the best grid profit against the continuum
  // optimum: one Lipschitz bound times one grid cell.
  double profit_slack(const ModelParams& m) const {
    return (m.c + m.p) * std::max(q_spacing(), mu_spacing(m));
  }
};

struct GridOptimum {
  double q;
  double mu_bar;
  double profit;
};

// Exhaustive profit evaluation over the grid. Ties keep the smallest
// (mu_bar, q) in lexicographic order, which the loop order guarantees.
inline GridOptimum brute_force_optimum(const ModelParams& m, const GridSpec& grid) {
  grid.validate();
  GridOptimum best{0.0, 0.0, -std::numeric_limits<double>::infinity()};
  for (int j = 0; j < grid.mu_steps; ++j) {
    const double mu = m.M * j / (grid.mu_steps - 1);
    for (int i = 0; i < grid.q_steps; ++i) {
      const double q = grid.q_max * i / (grid.q_steps - 1);
      const double pi = profit(m, q, mu);
      if (pi > best.profit) best = {q, mu, pi};
    }
  }
  return best;
}

// Bisection for the belief-consistency condition xi * D(xi) = q on [0, 1].
// g(xi) = xi * D(xi) - q is non-decreasing in xi, so the bracket always
// shrinks onto the root; returns 1 when even full availability leaves
// g(1) <= 0. The result satisfies |g(xi)| <= tol.
inline double fixed_point_xi(const ModelParams& m, double q, double mu_bar,
                             double tol = 1e-12) {
  detail::require(q >= 0, "q must be non-negative");
  detail::require(tol > 0, "tol must be positive");
  const auto g = [&](double xi) { return xi * demand(m, xi, mu_bar) - q; };
  if (g(1.0) <= 0.0) return 1.0;
  if (q == 0.0) return 0.0;
  // |g'| <= c_o + M on [0, 1]; shrink the bracket until that bound meets tol.
  const double width_target = tol / (m.c_o + m.M);
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > width_target; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Midpoint-rule measure of the buying t-interval on [0, 2 c_o]. First-order
// accurate: the error is at most one cell, 2 c_o / steps.
inline double demand_by_integration(const ModelParams& m, double xi_hat,
                                    double mu_bar, int steps) {
  detail::require(steps >= 100, "steps must be >= 100");
  const double h = 2.0 * m.c_o / steps;
  long long inside = 0;
  for (int i = 0; i < steps; ++i) {
    const double t = (i + 0.5) * h;
    if (choose_channel(m, xi_hat, t, mu_bar).channel != Channel::Online) ++inside;
  }
  return inside * h;
}

// Double midpoint integration over mu_bar in [0, c_o] of the demand the
// pickup option adds over a walk-in-only retailer, whose demand is
// xi_hat * c_o at every mu_bar. `steps` sets the t-resolution; the outer
// mu_bar grid is capped at 400 cells because the exact integrand is linear
// in mu_bar, so the midpoint rule already integrates it exactly and accuracy
// is limited by the inner sweep alone (error at most c_o^2 / steps).
inline double gain_by_integration(const ModelParams& m, double xi_hat, int steps) {
  detail::require(steps >= 100, "steps must be >= 100");
  const int mu_cells = std::min(steps, 400);
  const double h_mu = m.c_o / mu_cells;
  double acc = 0.0;
  for (int j = 0; j < mu_cells; ++j) {
    const double mu = (j + 0.5) * h_mu;
    acc += demand_by_integration(m, xi_hat, mu, steps) - xi_hat * m.c_o;
  }
  return acc * h_mu;
}

}  // namespace bops
