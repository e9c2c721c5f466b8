#pragma once

#include <cmath>

#include "bops/consumer.hpp"
#include "bops/params.hpp"

namespace bops {

// Spending k per unit of wait shortens the worst case linearly from M.
inline double reduction_cost(const ModelParams& m, double mu_bar) {
  detail::require(mu_bar >= 0 && mu_bar <= m.M, "mu_bar must lie in [0, M]");
  return m.k * (m.M - mu_bar);
}

// In-stock probability consistent with self-fulfilling beliefs: the unique
// xi in [0, 1] with xi * D(xi, mu_bar) = q, capped at one.
//
// For mu_bar <= c_o the defining quadratic
//   mu_bar * xi^2 + (c_o - mu_bar) * xi - q = 0
// is evaluated in conjugate form 2q / (c_o - mu_bar + sqrt(...)), which is
// free of cancellation for small mu_bar and extends continuously to
// mu_bar = 0, where it equals q / c_o. For mu_bar > c_o demand is
// xi * c_o, giving sqrt(q / c_o). Values within 1e-12 of one are clamped to
// exactly one so rounding cannot misclassify a full-stock solution as
// interior.
inline double stock_probability(const ModelParams& m, double q, double mu_bar) {
  detail::require(q >= 0, "q must be non-negative");
  detail::require(mu_bar >= 0 && mu_bar <= m.M, "mu_bar must lie in [0, M]");
  if (q == 0) return 0.0;
  double xi;
  if (mu_bar <= m.c_o) {
    const double gap = m.c_o - mu_bar;
    xi = 2.0 * q / (gap + std::sqrt(gap * gap + 4.0 * mu_bar * q));
  } else {
    xi = std::sqrt(q / m.c_o);
  }
  return xi > 1.0 - 1e-12 ? 1.0 : xi;
}

// Revenue minus inventory and wait-reduction costs at stock level q and
// promised worst-case wait mu_bar. Sales follow the channel split: with
// mu_bar <= c_o every retail customer orders ahead and every order is
// eventually fulfilled, so revenue is p times the order mass; with
// mu_bar > c_o customers walk in and buy only when the item is there.
inline double profit(const ModelParams& m, double q, double mu_bar) {
  const double xi = stock_probability(m, q, mu_bar);
  const double cost = m.c * q + reduction_cost(m, mu_bar);
  if (mu_bar <= m.c_o) return m.p * (m.c_o - (1.0 - xi) * mu_bar) - cost;
  return m.p * xi * m.c_o - cost;
}

}  // namespace bops
