#pragma once

#include <algorithm>

#include "bops/params.hpp"

namespace bops {

enum class Channel { Bops, Store, Online };

// Second-stage action of a Store chooser who finds the shelf empty.
enum class StockoutFallback { None, Online, BopsWait };

struct ChannelDecision {
  Channel channel;
  StockoutFallback fallback;  // None unless channel == Store

  bool operator==(const ChannelDecision&) const = default;
};

namespace detail {

inline void check_consumer_inputs(const ModelParams& m, double xi_hat, double t,
                                  double mu_bar) {
  require(xi_hat >= 0 && xi_hat <= 1, "xi_hat must lie in [0, 1]");
  require(t >= 0, "t must be non-negative");
  require(mu_bar >= 0 && mu_bar <= m.M, "mu_bar must lie in [0, M]");
}

}  // namespace detail

// Expected utility of ordering ahead and picking up in store: the trip is
// always made, the wait mu_bar is paid only when the item is absent.
inline double utility_bops(const ModelParams& m, double xi_hat, double t,
                           double mu_bar) {
  detail::check_consumer_inputs(m, xi_hat, t, mu_bar);
  return m.v - m.p - t - (1.0 - xi_hat) * mu_bar;
}

inline double utility_online(const ModelParams& m) { return m.v - m.p - m.c_o; }

// Utility of a pickup order placed after the visitor already stands in front
// of an empty shelf; the full wait is unavoidable.
inline double utility_bops_after_stockout(const ModelParams& m, double t,
                                          double mu_bar) {
  return m.v - m.p - t - mu_bar;
}

// Walk-in visit without ordering ahead; on a stockout the visitor takes the
// better of buying online or ordering for pickup on the spot.
inline double utility_store(const ModelParams& m, double xi_hat, double t,
                            double mu_bar) {
  const double fallback =
      std::max(utility_online(m), utility_bops_after_stockout(m, t, mu_bar));
  return -t + xi_hat * (m.v - m.p) + (1.0 - xi_hat) * fallback;
}

// Closed-form channel choice.
//
// For mu_bar <= c_o ordering ahead weakly dominates a plain visit, and it
// beats buying online exactly when t <= c_o - (1 - xi_hat) * mu_bar. For
// mu_bar > c_o nobody orders ahead; a walk-in beats online when
// t <= xi_hat * c_o, and with xi_hat = 0 everyone buys online. Boundary
// consumers take the retailer-side channel. A Store chooser who hits a
// stockout buys online afterwards: in that half-plane t + mu_bar > c_o, so
// converting to a pickup order never pays.
inline ChannelDecision choose_channel(const ModelParams& m, double xi_hat,
                                      double t, double mu_bar) {
  detail::check_consumer_inputs(m, xi_hat, t, mu_bar);
  if (mu_bar <= m.c_o) {
    if (t <= m.c_o - (1.0 - xi_hat) * mu_bar)
      return {Channel::Bops, StockoutFallback::None};
    return {Channel::Online, StockoutFallback::None};
  }
  if (xi_hat > 0 && t <= xi_hat * m.c_o)
    return {Channel::Store, StockoutFallback::Online};
  return {Channel::Online, StockoutFallback::None};
}

// Mass of consumers buying through the retailer. Travel costs are uniform
// with density one on [0, inf), so demand is the length of the buying
// t-interval.
inline double demand(const ModelParams& m, double xi_hat, double mu_bar) {
  detail::require(xi_hat >= 0 && xi_hat <= 1, "xi_hat must lie in [0, 1]");
  detail::require(mu_bar >= 0 && mu_bar <= m.M, "mu_bar must lie in [0, M]");
  if (mu_bar <= m.c_o) return m.c_o - (1.0 - xi_hat) * mu_bar;
  return xi_hat * m.c_o;
}

// Extra consumer mass the pickup option wins over a walk-in-only retailer,
// accumulated over mu_bar in [0, c_o]: a triangle of area
// (1 - xi_hat) * c_o^2 / 2 in (mu_bar, t) space.
inline double bops_gain(const ModelParams& m, double xi_hat) {
  detail::require(xi_hat >= 0 && xi_hat <= 1, "xi_hat must lie in [0, 1]");
  return (1.0 - xi_hat) * m.c_o * m.c_o / 2.0;
}

}  // namespace bops
