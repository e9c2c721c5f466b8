// Command-line front end: equilibrium solving, region-map sweeps, brute-force
// verification, and the two-store fulfillment simulation.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bops/bops.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << content;
}

bops::GridSpec grid_from_scenario(const bops::Scenario& s) {
  bops::GridSpec grid = bops::GridSpec::defaults(s.params);
  if (s.q_max) grid.q_max = *s.q_max;
  if (s.q_steps) grid.q_steps = *s.q_steps;
  if (s.mu_steps) grid.mu_steps = *s.mu_steps;
  return grid;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

int cmd_solve(const std::string& scenario_path, const std::string& out_path) {
  const bops::Scenario s = bops::parse_scenario(read_file(scenario_path));
  const bops::EquilibriumResult eq = bops::global_equilibrium(s.params);
  const bops::ReVerification ver = bops::verify_re_equilibrium(
      s.params, eq.q, eq.mu_bar, eq.xi, grid_from_scenario(s));

  std::string json = "{\n";
  json += "  \"region\": \"" + std::string(bops::to_string(eq.region)) + "\",\n";
  json += "  \"q\": " + bops::format_double(eq.q) + ",\n";
  json += "  \"mu_bar\": " + bops::format_double(eq.mu_bar) + ",\n";
  json += "  \"xi\": " + bops::format_double(eq.xi) + ",\n";
  json += "  \"demand\": " + bops::format_double(eq.demand) + ",\n";
  json += "  \"profit\": " + bops::format_double(eq.profit) + ",\n";
  json += "  \"verification\": {\n";
  json += std::string("    \"consumer_ok\": ") + json_bool(ver.consumer_ok) + ",\n";
  json += std::string("    \"argmax_ok\": ") + json_bool(ver.argmax_ok) + ",\n";
  json += "    \"fixed_point_residual\": " +
          bops::format_double(ver.fixed_point_residual) + "\n";
  json += "  }\n}\n";
  write_output(out_path, json);
  return 0;
}

bops::AxisSpec parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = spec.find(':', pos);
    parts.push_back(spec.substr(pos, colon == std::string::npos ? std::string::npos
                                                                : colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4)
    throw std::invalid_argument("axis spec must be param:lo:hi:steps, got '" + spec +
                                "'");
  try {
    const double lo = std::stod(parts[1]);
    const double hi = std::stod(parts[2]);
    const int steps = std::stoi(parts[3]);
    return {parts[0], lo, hi, steps};
  } catch (const std::exception&) {
    throw std::invalid_argument("axis spec must be param:lo:hi:steps, got '" + spec +
                                "'");
  }
}

int cmd_region_map(const std::string& scenario_path, const std::string& x_spec,
                   const std::string& y_spec, const std::string& out_path) {
  const bops::Scenario s = bops::parse_scenario(read_file(scenario_path));
  const bops::RegionGrid grid =
      bops::region_map(s.params, parse_axis(x_spec), parse_axis(y_spec));

  std::string csv = "x,y,region\n";
  for (int iy = 0; iy < grid.y.steps; ++iy) {
    for (int ix = 0; ix < grid.x.steps; ++ix) {
      csv += bops::format_double(grid.x.value(ix));
      csv += ',';
      csv += bops::format_double(grid.y.value(iy));
      csv += ',';
      csv += bops::region_label(grid.at(ix, iy));
      csv += '\n';
    }
  }
  write_output(out_path, csv);
  return 0;
}

int cmd_verify(const std::string& scenario_path, const std::string& grid_spec,
               const std::vector<std::string>& overrides) {
  const bops::Scenario s = bops::parse_scenario(read_file(scenario_path));
  bops::GridSpec grid = grid_from_scenario(s);
  if (!grid_spec.empty()) {
    const std::size_t colon = grid_spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("grid spec must be q_steps:mu_steps");
    try {
      grid.q_steps = std::stoi(grid_spec.substr(0, colon));
      grid.mu_steps = std::stoi(grid_spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("grid spec must be q_steps:mu_steps");
    }
  }
  grid.validate();

  const bops::EquilibriumResult eq = bops::global_equilibrium(s.params);
  double cand_q = eq.q;
  double cand_mu = eq.mu_bar;
  bool overridden = false;
  for (const std::string& ov : overrides) {
    const std::size_t eq_pos = ov.find('=');
    if (eq_pos == std::string::npos)
      throw std::invalid_argument("override must be key=value, got '" + ov + "'");
    const std::string key = ov.substr(0, eq_pos);
    double value = 0.0;
    try {
      value = std::stod(ov.substr(eq_pos + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("override must be key=value, got '" + ov + "'");
    }
    if (key == "q") cand_q = value;
    else if (key == "mu_bar") cand_mu = value;
    else throw std::invalid_argument("override key must be q or mu_bar");
    overridden = true;
  }

  const double cand_xi = bops::stock_probability(s.params, cand_q, cand_mu);
  const double cand_profit = bops::profit(s.params, cand_q, cand_mu);
  const bops::GridOptimum opt = bops::brute_force_optimum(s.params, grid);
  const double slack = grid.profit_slack(s.params);
  const double gap = opt.profit - cand_profit;
  const double fp_residual =
      std::abs(cand_xi - bops::fixed_point_xi(s.params, cand_q, cand_mu));
  const bool pass = std::abs(gap) <= slack && fp_residual <= 1e-9;

  std::string report;
  report += "scenario: " + scenario_path + "\n";
  if (overridden) {
    report += "candidate (overridden): q=" + bops::format_double(cand_q) +
              " mu_bar=" + bops::format_double(cand_mu) +
              " xi=" + bops::format_double(cand_xi) +
              " profit=" + bops::format_double(cand_profit) + "\n";
  } else {
    report += "closed form: region=\"" + std::string(bops::to_string(eq.region)) +
              "\" q=" + bops::format_double(cand_q) +
              " mu_bar=" + bops::format_double(cand_mu) +
              " xi=" + bops::format_double(cand_xi) +
              " profit=" + bops::format_double(cand_profit) + "\n";
  }
  report += "grid oracle: q=" + bops::format_double(opt.q) +
            " mu_bar=" + bops::format_double(opt.mu_bar) +
            " profit=" + bops::format_double(opt.profit) + " (" +
            std::to_string(grid.q_steps) + "x" + std::to_string(grid.mu_steps) +
            " points, q_max=" + bops::format_double(grid.q_max) + ")\n";
  report += "profit gap: " + bops::format_double(gap) +
            " (tolerance " + bops::format_double(slack) + ")\n";
  report += "fixed-point residual: " + bops::format_double(fp_residual) +
            " (tolerance 1e-09)\n";
  report += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
  std::cout << report;
  return pass ? 0 : 1;
}

int cmd_simulate(double r, int weeks, std::uint64_t seed, const std::string& rule_name,
                 int reps, const std::string& out_path) {
  bops::SimConfig cfg;
  cfg.r = r;
  cfg.weeks = weeks;
  cfg.seed = seed;
  cfg.replications = reps;
  if (rule_name == "LeftoverFromStore" || rule_name == "leftover-from-store")
    cfg.rule = bops::LeftoverRule::LeftoverFromStore;
  else if (rule_name == "IndependentWeekly" || rule_name == "independent-weekly")
    cfg.rule = bops::LeftoverRule::IndependentWeekly;
  else
    throw std::invalid_argument(
        "rule must be LeftoverFromStore or IndependentWeekly");

  if (const char* env = std::getenv("BOPS_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BOPS_SEED must be an unsigned integer");
    }
  }
  cfg.validate();

  if (cfg.replications == 1) {
    write_output(out_path, bops::timeline_csv(bops::simulate(cfg)));
    return 0;
  }
  const bops::ReplicationStats stats = bops::replicate_stats(cfg);
  std::string json = "{\n";
  json += "  \"r\": " + bops::format_double(cfg.r) + ",\n";
  json += "  \"mean_b_fraction\": " + bops::format_double(stats.mean_b_fraction) +
          ",\n";
  json += "  \"std_error\": " + bops::format_double(stats.std_error) + "\n";
  json += "}\n";
  write_output(out_path, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "BOPS omnichannel model: consumer channel choice, rational-expectations "
      "equilibria, region maps, brute-force verification, and a two-store "
      "fulfillment simulation"};
  app.require_subcommand(1);

  std::string solve_scn, solve_out = "-";
  CLI::App* solve =
      app.add_subcommand("solve", "Solve the equilibrium for a scenario (JSON)");
  solve->add_option("scenario", solve_scn, "scenario file, '-' for stdin")->required();
  solve->add_option("--out", solve_out, "output path, '-' for stdout");

  std::string rm_scn, rm_x, rm_y, rm_out = "-";
  CLI::App* rmap =
      app.add_subcommand("region-map", "Sweep two parameters and emit a region CSV");
  rmap->add_option("scenario", rm_scn, "scenario file, '-' for stdin")->required();
  rmap->add_option("--x", rm_x, "x axis as param:lo:hi:steps")->required();
  rmap->add_option("--y", rm_y, "y axis as param:lo:hi:steps")->required();
  rmap->add_option("--out", rm_out, "output path, '-' for stdout");

  std::string vf_scn, vf_grid;
  std::vector<std::string> vf_overrides;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the closed-form optimum against the brute-force grid");
  verify->add_option("scenario", vf_scn, "scenario file, '-' for stdin")->required();
  verify->add_option("--grid", vf_grid, "grid resolution as q_steps:mu_steps");
  verify->add_option("--override", vf_overrides,
                     "replace a candidate field, e.g. q=1 or mu_bar=3");

  double sim_r = 0.0;
  int sim_weeks = 20, sim_reps = 1;
  std::uint64_t sim_seed = 1;
  std::string sim_rule = "LeftoverFromStore", sim_out = "-";
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the two-store fulfillment simulation");
  simulate->add_option("--r", sim_r, "leftover probability in [0, 1]")->required();
  simulate->add_option("--weeks", sim_weeks, "number of weeks (default 20)");
  simulate->add_option("--seed", sim_seed,
                       "RNG seed (env BOPS_SEED overrides when set)");
  simulate->add_option("--rule", sim_rule,
                       "LeftoverFromStore (default) or IndependentWeekly");
  simulate->add_option("--reps", sim_reps,
                       "replications: 1 emits the weekly CSV, >1 emits stats JSON");
  simulate->add_option("--out", sim_out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_scn, solve_out);
    if (rmap->parsed()) return cmd_region_map(rm_scn, rm_x, rm_y, rm_out);
    if (verify->parsed()) return cmd_verify(vf_scn, vf_grid, vf_overrides);
    if (simulate->parsed())
      return cmd_simulate(sim_r, sim_weeks, sim_seed, sim_rule, sim_reps, sim_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
