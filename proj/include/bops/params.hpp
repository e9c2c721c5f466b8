#pragma once

#include <stdexcept>

namespace bops {

namespace detail {

inline void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace detail

// Exogenous model parameters. Everything is a money-equivalent except the
// inventory/demand masses handled elsewhere.
struct ModelParams {
  double p;    // selling price per unit
  double c;    // inventory cost per unit
  double c_o;  // delivery fee for a direct online purchase
  double k;    // marginal cost of cutting the worst-case wait by one unit
  double M;    // worst-case waiting disutility when the retailer makes no effort
  double v;    // consumer valuation of the good

  // Smallest valuation that leaves every channel with non-negative surplus,
  // used when a scenario does not pin v explicitly.
  static double default_valuation(double p, double c_o, double M) {
    return p + c_o + M;
  }

  void validate() const {
    detail::require(c > 0 && p > c, "p and c must satisfy p > c > 0");
    detail::require(k >= 0 && k < p, "k must satisfy 0 <= k < p");
    detail::require(c_o > 0 && M > c_o, "M and c_o must satisfy M > c_o > 0");
    detail::require(v - p >= c_o + M, "v must satisfy v - p >= c_o + M");
  }

  bool is_valid() const {
    return c > 0 && p > c && k >= 0 && k < p && c_o > 0 && M > c_o &&
           v - p >= c_o + M;
  }

  bool operator==(const ModelParams&) const = default;
};

}  // namespace bops
