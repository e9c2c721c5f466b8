#include <catch2/catch_amalgamated.hpp>

#include "bops/dynsim.hpp"

using namespace bops;

TEST_CASE("zero leftover probability keeps both stores serving walk-ins") {
  SimConfig cfg;
  cfg.r = 0.0;
  cfg.weeks = 20;
  cfg.seed = 123;
  const SimTimeline tl = simulate(cfg);
  REQUIRE(tl.records.size() == 20);
  for (const WeekRecord& rec : tl.records) {
    CHECK(rec.regime[0] == Regime::S);
    CHECK(rec.regime[1] == Regime::S);
    CHECK_FALSE(rec.leftover[0]);
    CHECK_FALSE(rec.leftover[1]);
  }
  CHECK(tl.b_fraction[0] == 0.0);
  CHECK(tl.b_fraction[1] == 0.0);
}

TEST_CASE("certain leftover alternates the regimes") {
  SimConfig cfg;
  cfg.r = 1.0;
  cfg.weeks = 4;
  cfg.seed = 7;
  const SimTimeline tl = simulate(cfg);
  REQUIRE(tl.records.size() == 4);
  for (int s = 0; s < 2; ++s) {
    CHECK(tl.records[0].regime[s] == Regime::S);
    CHECK(tl.records[1].regime[s] == Regime::B);
    CHECK(tl.records[2].regime[s] == Regime::S);
    CHECK(tl.records[3].regime[s] == Regime::B);
  }
  CHECK_THAT(tl.b_fraction[0], Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-15));
}

TEST_CASE("under certain independent leftover the chain locks into pickup") {
  SimConfig cfg;
  cfg.r = 1.0;
  cfg.weeks = 6;
  cfg.rule = LeftoverRule::IndependentWeekly;
  const SimTimeline tl = simulate(cfg);
  CHECK(tl.records[0].regime[0] == Regime::S);
  for (int w = 1; w < 6; ++w) {
    CHECK(tl.records[w].regime[0] == Regime::B);
    CHECK(tl.records[w].regime[1] == Regime::B);
  }
}

TEST_CASE("a pickup week is always preceded by a partner walk-in week") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
    SimConfig cfg;
    cfg.r = 0.6;
    cfg.weeks = 50;
    cfg.seed = seed;
    const SimTimeline tl = simulate(cfg);
    CHECK(tl.records[0].regime[0] == Regime::S);
    CHECK(tl.records[0].regime[1] == Regime::S);
    for (size_t w = 1; w < tl.records.size(); ++w) {
      for (int s = 0; s < 2; ++s) {
        if (tl.records[w].regime[s] == Regime::B)
          CHECK(tl.records[w - 1].regime[1 - s] == Regime::S);
        // A store holding nothing cannot leave leftover under this rule.
        if (tl.records[w].regime[s] == Regime::B)
          CHECK_FALSE(tl.records[w].leftover[s]);
      }
    }
  }
}

TEST_CASE("identical configuration reproduces identical timelines") {
  SimConfig cfg;
  cfg.r = 0.37;
  cfg.weeks = 40;
  cfg.seed = 2024;
  const SimTimeline a = simulate(cfg);
  const SimTimeline b = simulate(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t w = 0; w < a.records.size(); ++w) {
    CHECK(a.records[w].regime == b.records[w].regime);
    CHECK(a.records[w].leftover == b.records[w].leftover);
  }
  CHECK(timeline_csv(a) == timeline_csv(b));

  cfg.seed = 2025;
  CHECK(timeline_csv(simulate(cfg)) != timeline_csv(a));
}

TEST_CASE("replication statistics are deterministic and ordered in r") {
  SimConfig cfg;
  cfg.weeks = 20;
  cfg.seed = 5;
  cfg.replications = 300;

  cfg.r = 0.0;
  ReplicationStats zero = replicate_stats(cfg);
  CHECK(zero.mean_b_fraction == 0.0);
  CHECK(zero.std_error == 0.0);

  const std::vector<double> rs{0.1, 0.3, 0.5};
  const std::vector<RStatsRow> rows = replicate_stats_sweep(cfg, rs);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].mean_b_fraction < rows[1].mean_b_fraction);
  CHECK(rows[1].mean_b_fraction < rows[2].mean_b_fraction);

  cfg.r = 0.3;
  const ReplicationStats a = replicate_stats(cfg);
  const ReplicationStats b = replicate_stats(cfg);
  CHECK(a.mean_b_fraction == b.mean_b_fraction);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("timeline CSV uses the weekly table layout") {
  SimConfig cfg;
  cfg.r = 1.0;
  cfg.weeks = 3;
  const std::string csv = timeline_csv(simulate(cfg));
  CHECK(csv == "week,store0,store1\n0,S,S\n1,B,B\n2,S,S\n");
}

TEST_CASE("configuration bounds are enforced") {
  SimConfig cfg;
  cfg.r = 1.5;
  CHECK_THROWS_AS(simulate(cfg), std::invalid_argument);
  cfg.r = 0.5;
  cfg.weeks = 0;
  CHECK_THROWS_AS(simulate(cfg), std::invalid_argument);
  cfg.weeks = 10;
  cfg.replications = 1;
  CHECK_THROWS_AS(replicate_stats(cfg), std::invalid_argument);
}
