#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bops/params.hpp"

namespace bops {

// Weekly regime of one store: S = serve walk-ins at full stock
// (mu_bar = M, q = c_o), B = zero stock with the wait eliminated
// (mu_bar = 0, q = 0), feasible only when the partner store's leftover
// covers fulfillment.
enum class Regime { S, B };

inline char regime_char(Regime r) { return r == Regime::S ? 'S' : 'B'; }

// How the leftover event is drawn each week.
//   LeftoverFromStore: only a store currently in regime S can end the week
//     with leftover stock (probability r); a B store holds nothing.
//   IndependentWeekly: the leftover signal fires with probability r
//     regardless of regime.
enum class LeftoverRule { LeftoverFromStore, IndependentWeekly };

struct SimConfig {
  double r = 0.0;                 // leftover probability per store-week
  int weeks = 20;
  std::uint64_t seed = 1;
  LeftoverRule rule = LeftoverRule::LeftoverFromStore;
  int replications = 1;

  void validate() const {
    detail::require(r >= 0 && r <= 1, "r must lie in [0, 1]");
    detail::require(weeks >= 1, "weeks must be >= 1");
    detail::require(replications >= 1, "replications must be >= 1");
  }
};

// Counter-based generator: every draw is a pure function of
// (seed, week, store), so adding draw sites or reordering evaluation can
// never shift an existing stream. SplitMix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  double uniform(std::uint64_t week, std::uint64_t store) const {
    std::uint64_t h = mix(seed_ + 0x9e3779b97f4a7c15ull);
    h = mix(h ^ (week * 0xbf58476d1ce4e5b9ull + 0x7f4a7c15ull));
    h = mix(h ^ (store * 0x94d049bb133111ebull + 0x2545f491ull));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

  bool bernoulli(std::uint64_t week, std::uint64_t store, double prob) const {
    return uniform(week, store) < prob;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t seed_;
};

struct WeekRecord {
  int week;
  std::array<Regime, 2> regime;
  std::array<bool, 2> leftover;
};

struct SimTimeline {
  std::vector<WeekRecord> records;
  std::array<double, 2> b_fraction;  // share of B weeks over weeks 1..W-1

  double pooled_b_fraction() const { return 0.5 * (b_fraction[0] + b_fraction[1]); }
};

// Runs one replication of the two-store regime chain.
//
// Week 0 starts both stores in S. Each week every store draws its leftover
// flag (store 0 first, then store 1); at week w+1 store i switches to B
// exactly when store j flagged leftover at week w, and back to S otherwise.
// Week 0 is excluded from the B-fraction because it is S by construction.
inline SimTimeline simulate(const SimConfig& config) {
  config.validate();
  const CounterRng rng(config.seed);

  SimTimeline out;
  out.records.reserve(config.weeks);
  std::array<Regime, 2> regime{Regime::S, Regime::S};
  std::array<bool, 2> prev_flag{false, false};
  std::array<int, 2> b_weeks{0, 0};

  for (int w = 0; w < config.weeks; ++w) {
    if (w > 0) {
      regime = {prev_flag[1] ? Regime::B : Regime::S,
                prev_flag[0] ? Regime::B : Regime::S};
      for (int s = 0; s < 2; ++s)
        if (regime[s] == Regime::B) ++b_weeks[s];
    }
    std::array<bool, 2> flag{};
    for (int s = 0; s < 2; ++s) {
      const bool eligible = config.rule == LeftoverRule::IndependentWeekly ||
                            regime[s] == Regime::S;
      flag[s] = eligible && rng.bernoulli(static_cast<std::uint64_t>(w),
                                          static_cast<std::uint64_t>(s), config.r);
    }
    out.records.push_back({w, regime, flag});
    prev_flag = flag;
  }

  const int denom = config.weeks - 1;
  for (int s = 0; s < 2; ++s)
    out.b_fraction[s] = denom > 0 ? static_cast<double>(b_weeks[s]) / denom : 0.0;
  return out;
}

struct ReplicationStats {
  double mean_b_fraction;
  double std_error;
};

// Replication i reruns the chain with seed + i; the per-replication
// B-fraction pools both stores. Standard error is the sample standard
// deviation over replications divided by sqrt(R).
inline ReplicationStats replicate_stats(const SimConfig& config) {
  config.validate();
  detail::require(config.replications >= 2, "replications must be >= 2");

  const int reps = config.replications;
  std::vector<double> fractions(reps);
  for (int i = 0; i < reps; ++i) {
    SimConfig one = config;
    one.seed = config.seed + static_cast<std::uint64_t>(i);
    one.replications = 1;
    fractions[i] = simulate(one).pooled_b_fraction();
  }

  double mean = 0.0;
  for (double f : fractions) mean += f;
  mean /= reps;
  double ss = 0.0;
  for (double f : fractions) ss += (f - mean) * (f - mean);
  const double std_error = std::sqrt(ss / (reps - 1) / reps);
  return {mean, std_error};
}

struct RStatsRow {
  double r;
  double mean_b_fraction;
  double std_error;
};

// Convenience sweep over several leftover probabilities with a shared base
// configuration; one stats row per r.
inline std::vector<RStatsRow> replicate_stats_sweep(SimConfig base,
                                                    const std::vector<double>& rs) {
  std::vector<RStatsRow> rows;
  rows.reserve(rs.size());
  for (double r : rs) {
    base.r = r;
    const ReplicationStats st = replicate_stats(base);
    rows.push_back({r, st.mean_b_fraction, st.std_error});
  }
  return rows;
}

// Table layout: one row per week, S/B per store, LF line endings.
inline std::string timeline_csv(const SimTimeline& timeline) {
  std::string out = "week,store0,store1\n";
  for (const WeekRecord& rec : timeline.records) {
    out += std::to_string(rec.week);
    out += ',';
    out += regime_char(rec.regime[0]);
    out += ',';
    out += regime_char(rec.regime[1]);
    out += '\n';
  }
  return out;
}

}  // namespace bops
