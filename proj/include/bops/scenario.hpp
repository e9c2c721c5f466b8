#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bops/format.hpp"
#include "bops/params.hpp"

namespace bops {

// Raised on malformed or invalid scenario text. `line` is 1-based; 0 marks
// file-level problems (missing keys, parameter constraint violations).
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A parsed scenario: model parameters plus optional overrides for the
// verification grid.
//
// File format: one `key = value` per line, `#` starts a comment, blank lines
// ignored, whitespace around `=` free. Keys: p, c, c_o, k, M and optionally
// v (default p + c_o + M), plus the grid overrides q_max, q_steps, mu_steps.
// Unknown and duplicate keys are rejected.
struct Scenario {
  ModelParams params{};
  std::optional<double> q_max;
  std::optional<int> q_steps;
  std::optional<int> mu_steps;

  bool operator==(const Scenario&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline double parse_number(std::string_view text, int line, const std::string& key) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
      !std::isfinite(value))
    throw ScenarioError(line, "invalid number '" + std::string(text) + "' for key '" +
                                  key + "'");
  return value;
}

inline int parse_count(std::string_view text, int line, const std::string& key) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ScenarioError(line, "invalid integer '" + std::string(text) + "' for key '" +
                                  key + "'");
  return value;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
  std::optional<double> p, c, c_o, k, M, v, q_max;
  std::optional<int> q_steps, mu_steps;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ScenarioError(line_no, "expected 'key = value'");
    const std::string key{detail::trim(line.substr(0, eq))};
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioError(line_no, "missing key before '='");
    if (value.empty())
      throw ScenarioError(line_no, "missing value for key '" + key + "'");

    const auto set_double = [&](std::optional<double>& slot) {
      if (slot) throw ScenarioError(line_no, "duplicate key '" + key + "'");
      slot = detail::parse_number(value, line_no, key);
    };
    const auto set_count = [&](std::optional<int>& slot) {
      if (slot) throw ScenarioError(line_no, "duplicate key '" + key + "'");
      slot = detail::parse_count(value, line_no, key);
    };

    if (key == "p") set_double(p);
    else if (key == "c") set_double(c);
    else if (key == "c_o") set_double(c_o);
    else if (key == "k") set_double(k);
    else if (key == "M") set_double(M);
    else if (key == "v") set_double(v);
    else if (key == "q_max") set_double(q_max);
    else if (key == "q_steps") set_count(q_steps);
    else if (key == "mu_steps") set_count(mu_steps);
    else throw ScenarioError(line_no, "unknown key '" + key + "'");
  }

  for (const auto& [slot, name] : {std::pair{&p, "p"}, {&c, "c"}, {&c_o, "c_o"},
                                   {&k, "k"}, {&M, "M"}}) {
    if (!slot->has_value())
      throw ScenarioError(0, std::string("missing key '") + name + "'");
  }

  Scenario s;
  s.params = ModelParams{*p, *c, *c_o, *k, *M,
                         v ? *v : ModelParams::default_valuation(*p, *c_o, *M)};
  s.q_max = q_max;
  s.q_steps = q_steps;
  s.mu_steps = mu_steps;
  try {
    s.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(0, e.what());
  }
  if (s.q_max && *s.q_max <= 0) throw ScenarioError(0, "q_max must be positive");
  if ((s.q_steps && *s.q_steps < 2) || (s.mu_steps && *s.mu_steps < 2))
    throw ScenarioError(0, "grid steps must be >= 2");
  return s;
}

inline std::string render_scenario(const Scenario& s) {
  std::string out;
  const auto emit = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  emit("p", format_double(s.params.p));
  emit("c", format_double(s.params.c));
  emit("c_o", format_double(s.params.c_o));
  emit("k", format_double(s.params.k));
  emit("M", format_double(s.params.M));
  emit("v", format_double(s.params.v));
  if (s.q_max) emit("q_max", format_double(*s.q_max));
  if (s.q_steps) emit("q_steps", std::to_string(*s.q_steps));
  if (s.mu_steps) emit("mu_steps", std::to_string(*s.mu_steps));
  return out;
}

}  // namespace bops
