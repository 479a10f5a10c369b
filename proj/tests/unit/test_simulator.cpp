#include "doctest.h"
#include "gmv/config_io.hpp"
#include "gmv/patterns.hpp"
#include "gmv/simulator.hpp"
#include "gmv/symmetry.hpp"

using namespace gmv;

TEST_CASE("terminal configurations do not move") {
  const Pattern& p = asym_pattern(7);
  auto g5 = GridSpec::make_finite(5, 5);
  auto formed = Configuration::make(g5, embed_at_corner(p, g5, kCornerBL));
  auto next = step(formed, Mode::Asym);
  CHECK(next.robots == formed.robots);
  auto [trace, rep] = run(formed, Mode::Asym);
  CHECK(rep.cycles == 0);
  CHECK(rep.final_gmv);
  CHECK(rep.final_min_area);
  CHECK(trace.terminal);
}

TEST_CASE("steps preserve the robot count") {
  auto g6 = GridSpec::make_finite(6, 6);
  auto c = Configuration::make(g6, {{2, 2}, {2, 5}, {3, 3}, {4, 2}, {4, 5}, {5, 3}, {5, 5}});
  Configuration cur = c;
  for (int i = 0; i < 10; ++i) {
    cur = step(cur, Mode::General);
    CHECK(cur.size() == c.size());
  }
}

TEST_CASE("runs terminate with the pattern formed") {
  auto g6 = GridSpec::make_finite(6, 6);
  auto c = Configuration::make(g6, {{2, 2}, {2, 5}, {3, 3}, {4, 2}, {4, 5}, {5, 3}, {5, 5}});
  auto [trace, rep] = run(c, Mode::General);
  CHECK_FALSE(rep.violation.has_value());
  CHECK(trace.terminal);
  CHECK(rep.final_gmv);
  CHECK(rep.final_min_area);
  CHECK(rep.cycles <= 20 * rep.extent);
  // Transitions never regress along the recorded trace.
  for (size_t i = 1; i < trace.entries.size(); ++i) {
    auto order = [](TaskId t) {
      switch (t) {
        case TaskId::T1a: return 0;
        case TaskId::T1b: return 1;
        case TaskId::T1c: return 2;
        case TaskId::T2: return 3;
        case TaskId::T3: return 4;
        case TaskId::T4: return 5;
        case TaskId::T5: return 6;
      }
      return -1;
    };
    CHECK(order(trace.entries[i].task) >= order(trace.entries[i - 1].task));
  }
}

TEST_CASE("trace serialization format") {
  auto g5 = GridSpec::make_finite(5, 5);
  const Pattern& p = asym_pattern(7);
  auto formed = Configuration::make(g5, embed_at_corner(p, g5, kCornerTR));
  auto [trace, rep] = run(formed, Mode::Asym);
  std::string text = trace_to_string(trace);
  CHECK(text.substr(0, 16) == "cycle 0 task T5 ");
  CHECK(text.find("robots (") != std::string::npos);
}

TEST_CASE("campaigns are reproducible") {
  CampaignSpec spec;
  spec.grid = GridSpec::make_finite(8, 8);
  spec.robots = 8;
  spec.runs = 50;
  spec.seed = 99;
  spec.mode = Mode::General;
  spec.jobs = 2;
  auto a = campaign(spec);
  auto b = campaign(spec);
  CHECK(campaign_tsv(a) == campaign_tsv(b));
  CHECK(a.passed == 50);
}

TEST_CASE("exhaustive campaigns cover every placement") {
  CampaignSpec spec;
  spec.grid = GridSpec::make_finite(4, 4);
  spec.robots = 2;  // verifier-sized sanity check of the generator
  spec.exhaustive = true;
  spec.mode = Mode::General;
  // Runs fail (n < 7 is rejected) but every input is generated.
  auto rep = campaign(spec);
  CHECK(rep.generated == 120);  // C(16,2)
  CHECK(rep.executed == 120);
  CHECK(rep.passed == 0);
}

TEST_CASE("rotation dedup cuts exhaustive work") {
  CampaignSpec spec;
  spec.grid = GridSpec::make_finite(4, 4);
  spec.robots = 2;
  spec.exhaustive = true;
  spec.dedup_rotations = true;
  spec.mode = Mode::General;
  auto rep = campaign(spec);
  CHECK(rep.generated == 120);
  CHECK(rep.executed < 120);
  CHECK(rep.executed >= 120 / 4);
}

TEST_CASE("budget violations are reported") {
  auto g6 = GridSpec::make_finite(6, 6);
  auto c = Configuration::make(g6, {{2, 2}, {2, 5}, {3, 3}, {4, 2}, {4, 5}, {5, 3}, {5, 5}});
  RunOptions opts;
  opts.budget = 1;
  auto [trace, rep] = run(c, Mode::General, opts);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->find("non-termination") != std::string::npos);
}
