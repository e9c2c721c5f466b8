#pragma once

// Test-only helpers: the reference channel argmax, random valid parameter
// sets, and the closed-form local optima used to keep randomized oracle
// comparisons away from regime-switch knife edges.

#include <algorithm>
#include <random>
#include <vector>

#include "bops/bops.hpp"

namespace testsupport {

inline bops::ModelParams base_params() {
  // c_o = 4, M = 7 reference point: p = 10, c = 4, k = 1, v = 21.
  return bops::ModelParams{10.0, 4.0, 4.0, 1.0, 7.0, 21.0};
}

// Independent choice oracle: argmax over the three utilities. Ties are
// resolved the way the closed-form rule labels them: toward the pickup
// option on the mu_bar <= c_o half-plane, toward the walk-in when
// mu_bar > c_o and the belief is positive, and toward online in the
// degenerate zero-belief slice (where a walk-in can at best tie).
inline bops::Channel argmax_channel(const bops::ModelParams& m, double xi_hat,
                                    double t, double mu_bar) {
  const double ub = bops::utility_bops(m, xi_hat, t, mu_bar);
  const double us = bops::utility_store(m, xi_hat, t, mu_bar);
  const double uo = bops::utility_online(m);
  const double best = std::max({ub, us, uo});
  if (mu_bar <= m.c_o) {
    if (ub == best) return bops::Channel::Bops;
    if (us == best) return bops::Channel::Store;
    return bops::Channel::Online;
  }
  if (xi_hat > 0) {
    if (us == best) return bops::Channel::Store;
    if (ub == best) return bops::Channel::Bops;
    return bops::Channel::Online;
  }
  if (uo == best) return bops::Channel::Online;
  return us == best ? bops::Channel::Store : bops::Channel::Bops;
}

// Random parameter set satisfying every model constraint, spanning both the
// p >= 2c and c < p < 2c sides.
inline bops::ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const double c = 0.3 + 7.7 * unit(rng);
    const double p = c * (1.05 + 2.95 * unit(rng));
    const double c_o = 0.5 + 7.5 * unit(rng);
    const double M = c_o + 0.2 + 7.8 * unit(rng);
    const double k = 0.95 * p * unit(rng);
    const bops::ModelParams m{p, c, c_o, k, M,
                              bops::ModelParams::default_valuation(p, c_o, M)};
    if (m.is_valid()) return m;
  }
}

// Profits of every regime's local optimum in mu_bar, labelled by regime.
inline std::vector<std::pair<bops::SolutionRegion, double>> local_optima(
    const bops::ModelParams& m) {
  std::vector<std::pair<bops::SolutionRegion, double>> out;
  out.emplace_back(bops::SolutionRegion::BopsIII, m.p * m.c_o - m.k * m.M);
  if (m.p >= 2.0 * m.c) {
    out.emplace_back(bops::SolutionRegion::BopsI,
                     (m.p - m.c) * m.c_o - m.k * (m.M - m.c_o));
    out.emplace_back(bops::SolutionRegion::BopsII,
                     (m.p - m.c) * m.c_o -
                         m.k * (m.M - m.c / (m.p - m.c) * m.c_o));
    out.emplace_back(bops::SolutionRegion::StoreI, (m.p - m.c) * m.c_o);
  } else {
    out.emplace_back(bops::SolutionRegion::BopsII,
                     m.p * m.p / (4.0 * m.c) * m.c_o - m.k * (m.M - m.c_o));
    out.emplace_back(bops::SolutionRegion::StoreII,
                     m.p * m.p / (4.0 * m.c) * m.c_o);
  }
  return out;
}

// Margin of the equilibrium profit over the best local optimum of any other
// regime; small margins make grid argmax regions ambiguous.
inline double equilibrium_margin(const bops::ModelParams& m) {
  const bops::EquilibriumResult eq = bops::global_equilibrium(m);
  double runner_up = -1e300;
  for (const auto& [region, pi] : local_optima(m))
    if (region != eq.region) runner_up = std::max(runner_up, pi);
  return eq.profit - runner_up;
}

// Random parameter set whose equilibrium beats every rival regime by more
// than `margin`, so a grid search at the matching slack must land in the
// equilibrium regime.
inline bops::ModelParams random_params_with_margin(std::mt19937_64& rng,
                                                   double slack_factor = 3.0) {
  for (;;) {
    const bops::ModelParams m = random_params(rng);
    const double slack = bops::GridSpec::defaults(m).profit_slack(m);
    if (equilibrium_margin(m) > slack_factor * slack) return m;
  }
}

}  // namespace testsupport
