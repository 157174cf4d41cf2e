// SPDX-License-Identifier: Apache-2.0
#include "eonplan/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eonplan/errors.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace eonplan {
namespace {

Scenario case_study() { return load_scenario(test::scenario_path("fig5.toml")); }

Config gbps(std::vector<int64_t> values) {
  Config c;
  for (int64_t v : values) c.push_back(Rate::from_gbps(v));
  return c;
}

TEST(Plan, BuildsRoutesAndPinnedGroups) {
  Plan plan = build_plan(case_study());
  ASSERT_EQ(plan.demands.size(), 2u);
  EXPECT_EQ(plan.demands[0].routes.working, (Path{"A", "Z"}));
  EXPECT_EQ(plan.demands[1].routes.protection, (Path{"B", "X", "Z"}));
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_EQ(plan.groups[0].encode_node, "X");
  EXPECT_EQ(plan.groups[0].tail, (Path{"X", "Z"}));
  EXPECT_EQ(plan.group_idx[0], (std::vector<int>{0, 1}));

  OptimizerInput in = plan.optimizer_input();
  EXPECT_EQ(in.rates, (std::vector<Rate>{Rate::from_gbps(100), Rate::from_gbps(150)}));
  ASSERT_EQ(in.groups.size(), 1u);
  EXPECT_EQ(in.groups[0].members, (std::vector<int>{0, 1}));
  EXPECT_EQ(in.groups[0].feeder_links, (std::vector<int>{1, 1}));
  EXPECT_EQ(in.groups[0].tail_links, 1);
}

TEST(Plan, RoutesImplicitDemandsAndPairsGreedily) {
  Scenario s = case_study();
  s.coding_groups.clear();
  for (Demand& d : s.demands) {
    d.working.clear();
    d.protection.clear();
  }
  Plan plan = build_plan(s);
  // The router picks the same geometry the file pins.
  EXPECT_EQ(plan.demands[0].routes.working, (Path{"A", "Z"}));
  EXPECT_EQ(plan.demands[0].routes.protection, (Path{"A", "X", "Z"}));
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_EQ(plan.groups[0].members.size(), 2u);
  EXPECT_EQ(plan.groups[0].tail, (Path{"X", "Z"}));
}

TEST(Plan, RejectsPinnedGroupThatCannotDecode) {
  Scenario s = parse_scenario_text(
      "modulation = \"qpsk-pm\"\n"
      "nodes = [\"A\", \"B\", \"X\", \"Z\"]\n"
      "links = [ { a = \"A\", b = \"X\" }, { a = \"B\", b = \"X\" },"
      " { a = \"X\", b = \"Z\" }, { a = \"A\", b = \"Z\" },"
      " { a = \"A\", b = \"B\" } ]\n"
      "demands = [ { id = \"d1\", src = \"A\", dst = \"Z\", rate_gbps = 100,"
      " working = [\"A\", \"Z\"], protection = [\"A\", \"X\", \"Z\"] },"
      " { id = \"d2\", src = \"B\", dst = \"Z\", rate_gbps = 50,"
      " working = [\"B\", \"A\", \"Z\"], protection = [\"B\", \"X\", \"Z\"] } ]\n"
      "coding_groups = [ [\"d1\", \"d2\"] ]\n",
      "doc");
  try {
    build_plan(s);
    FAIL() << "expected infeasible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::infeasible);
    std::string msg = e.what();
    EXPECT_NE(msg.find("coding group [d1, d2] cannot decode"), std::string::npos);
    EXPECT_NE(msg.find("share link 'A-Z'"), std::string::npos);
  }
}

TEST(Report, CaseStudyRows) {
  RunReport r = run_scenario(case_study());
  EXPECT_EQ(r.name, "fig5");
  EXPECT_EQ(r.slice_capacity, Rate::from_gbps(25));
  ASSERT_EQ(r.rows.size(), 10u);

  std::vector<int64_t> coded, uncoded;
  for (const ReportRow& row : r.rows) {
    EXPECT_TRUE(row.error.empty());
    coded.push_back(row.coded_cost);
    uncoded.push_back(row.uncoded_cost);
  }
  EXPECT_EQ(coded, (std::vector<int64_t>{6, 5, 4, 4, 3, 3, 2, 2, 1, 1}));
  EXPECT_EQ(uncoded, (std::vector<int64_t>{10, 9, 8, 7, 6, 5, 4, 3, 2, 1}));

  EXPECT_EQ(r.rows[1].configs, (std::vector<Config>{gbps({100, 125})}));
  EXPECT_EQ(r.rows[3].configs,
            (std::vector<Config>{gbps({100, 75}), gbps({75, 100})}));
  EXPECT_EQ(r.rows[9].configs,
            (std::vector<Config>{gbps({25, 0}), gbps({0, 25})}));

  EXPECT_EQ(r.usage_target_bp, 10000);
  EXPECT_EQ(r.failures_checked, 5);
  EXPECT_EQ(r.configs_checked, 24);  // 14 coded optima + one baseline per row
}

TEST(Report, MarkdownContainsTheHeadlineRows) {
  std::string md = render_markdown(run_scenario(case_study()));
  EXPECT_NE(md.find("# fig5\n"), std::string::npos);
  EXPECT_NE(md.find("- modulation: qpsk-pm (25 Gb/s per slice)\n"), std::string::npos);
  EXPECT_NE(md.find("| d2 | 150 | B-Z | B-X-Z |\n"), std::string::npos);
  EXPECT_NE(md.find("| 1 | d1 + d2 | X | X-Z |\n"), std::string::npos);
  EXPECT_NE(md.find("| 100% | 100 + 150 | 6 | 10 | 40.0% |\n"), std::string::npos);
  EXPECT_NE(md.find("| 90% | 100 + 125 | 5 | 9 | 44.4% |\n"), std::string::npos);
  EXPECT_NE(md.find("| 70% | 100 + 75 (75 + 100) | 4 | 7 | 42.9% |\n"),
            std::string::npos);
  EXPECT_NE(md.find("| 10% | 25 + 0 (0 + 25) | 1 | 1 | 0.0% |\n"), std::string::npos);
  EXPECT_NE(md.find("## Link usage at target 100%\n"), std::string::npos);
  EXPECT_NE(md.find("pass: 24 configurations x 5 failures keep every demand at "
                    "or above its protected rate.\n"),
            std::string::npos);
}

TEST(Report, EncoderBranchUsageGolden) {
  RunReport r = run_scenario(load_scenario(test::scenario_path("fig1.toml")));
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].coded_cost, 2);
  EXPECT_EQ(r.rows[0].uncoded_cost, 3);
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0].encode_node, "X");
  EXPECT_EQ(r.groups[0].tail, (Path{"X", "E", "Z"}));

  std::vector<UsageRow> want = {{"A-X", 2, 2, 320}, {"B-X", 1, 1, 320},
                                {"E-X", 2, 3, 320}, {"E-Z", 2, 3, 320},
                                {"A-Z", 2, 2, 320}, {"B-Z", 1, 1, 320}};
  ASSERT_EQ(r.usage.size(), want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(r.usage[i].link, want[i].link);
    EXPECT_EQ(r.usage[i].coded, want[i].coded) << want[i].link;
    EXPECT_EQ(r.usage[i].uncoded, want[i].uncoded) << want[i].link;
    EXPECT_EQ(r.usage[i].capacity, want[i].capacity);
  }

  std::string md = render_markdown(r);
  EXPECT_NE(md.find("| 100% | 100 + 50 | 2 | 3 | 33.3% |\n"), std::string::npos);
  EXPECT_NE(md.find("| E-X | 2 | 3 | 320 |\n"), std::string::npos);
}

TEST(Report, SingleDemandHalvesItsProtectionChannel) {
  RunReport r = run_scenario(load_scenario(test::scenario_path("fig3.toml")));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].coded_cost, 4);
  EXPECT_EQ(r.rows[0].uncoded_cost, 4);
  EXPECT_EQ(r.rows[1].coded_cost, 2);
  EXPECT_EQ(r.rows[1].configs, (std::vector<Config>{gbps({50})}));
  std::string md = render_markdown(r);
  EXPECT_NE(md.find("| 100% | 100 | 4 | 4 | 0.0% |\n"), std::string::npos);
  EXPECT_NE(md.find("| 50% | 50 | 2 | 2 | 0.0% |\n"), std::string::npos);
  EXPECT_NE(md.find("| 1 | d1 | A | A-C-B |\n"), std::string::npos);
}

TEST(Report, SkippedTargetsAreReportedNotFatal) {
  Scenario s = case_study();
  std::vector<int64_t> targets = {10000, 8500};
  RunReport r = run_scenario(s, targets);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.rows[0].error.empty());
  EXPECT_NE(r.rows[1].error.find("off the step grid"), std::string::npos);
  EXPECT_EQ(r.usage_target_bp, 10000);

  std::string md = render_markdown(r);
  EXPECT_NE(md.find("| 85% | - | - | - | - |\n"), std::string::npos);
  EXPECT_NE(md.find("## Skipped targets\n"), std::string::npos);
  EXPECT_NE(md.find("- 85%: target 0.85 of 250 Gb/s total is off the step grid"),
            std::string::npos);

  std::string csv = render_csv(r);
  EXPECT_EQ(csv.find("0.85"), std::string::npos);

  std::string jsonl = render_jsonl(r);
  EXPECT_NE(jsonl.find("\"type\":\"row_error\""), std::string::npos);
}

TEST(Report, CsvGolden) {
  EXPECT_EQ(render_csv(run_scenario(case_study())),
            "target,configuration,coded_slices,uncoded_slices\n"
            "1,100+150,6,10\n"
            "0.9,100+125,5,9\n"
            "0.8,100+100,4,8\n"
            "0.7,100+75|75+100,4,7\n"
            "0.6,75+75,3,6\n"
            "0.5,75+50|50+75,3,5\n"
            "0.4,50+50,2,4\n"
            "0.3,50+25|25+50,2,3\n"
            "0.2,25+25,1,2\n"
            "0.1,25+0|0+25,1,1\n");
}

TEST(Report, JsonlRoundTrips) {
  std::string jsonl = render_jsonl(run_scenario(case_study()));
  std::istringstream lines(jsonl);
  std::string line;
  int meta = 0, demands = 0, groups = 0, rows = 0, usage = 0, sweep = 0;
  nlohmann::json seventy;
  while (std::getline(lines, line)) {
    nlohmann::json j = nlohmann::json::parse(line);  // throws on bad output
    std::string type = j.at("type");
    if (type == "meta") ++meta;
    if (type == "demand") ++demands;
    if (type == "group") ++groups;
    if (type == "row") {
      ++rows;
      if (j.at("target") == "0.7") seventy = j;
    }
    if (type == "usage") ++usage;
    if (type == "sweep") ++sweep;
  }
  EXPECT_EQ(meta, 1);
  EXPECT_EQ(demands, 2);
  EXPECT_EQ(groups, 1);
  EXPECT_EQ(rows, 10);
  EXPECT_EQ(usage, 5);
  EXPECT_EQ(sweep, 1);
  ASSERT_FALSE(seventy.is_null());
  EXPECT_EQ(seventy.at("configurations"),
            nlohmann::json::parse(R"([["100","75"],["75","100"]])"));
  EXPECT_EQ(seventy.at("coded_slices"), 4);
  EXPECT_EQ(seventy.at("saving_pct"), "42.9%");
}

TEST(Report, ParseConfigString) {
  Scenario s = case_study();
  EXPECT_EQ(parse_config_string(s, "100+125"), gbps({100, 125}));
  EXPECT_EQ(parse_config_string(s, "  100 +\t125 "), gbps({100, 125}));
  EXPECT_EQ(parse_config_string(s, "0+0"), gbps({0, 0}));
  EXPECT_THROW(parse_config_string(s, "100+"), Error);
  EXPECT_THROW(parse_config_string(s, ""), Error);
  EXPECT_THROW(parse_config_string(s, "100+abc"), Error);
  try {
    parse_config_string(s, "100+50+25");
    FAIL() << "expected count mismatch";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what())
                  .find("configuration lists 3 protected rates for 2 demands"),
              std::string::npos);
  }
}

TEST(Report, VerifyConfigSweepsEveryFailure) {
  Scenario s = case_study();
  VerifyReport r = verify_config(s, parse_config_string(s, "100+125"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.coded_cost, 5);
  EXPECT_EQ(r.uncoded_cost, 9);
  ASSERT_EQ(r.delivered.size(), 5u);
  // Cutting d2's working leaves it the protected 125; d1 keeps its rate.
  EXPECT_EQ(r.delivered[4].first, "B-Z");
  EXPECT_EQ(r.delivered[4].second, gbps({100, 125}));
  EXPECT_EQ(r.delivered[2].first, "X-Z");  // tail failure harms nobody
  EXPECT_EQ(r.delivered[2].second, gbps({100, 150}));

  std::string md = render_markdown(r);
  EXPECT_NE(md.find("# verify fig5\n"), std::string::npos);
  EXPECT_NE(md.find("- configuration: 100 + 125\n"), std::string::npos);
  EXPECT_NE(md.find("| B-Z | 100 | 125 |\n"), std::string::npos);
  EXPECT_NE(md.find("pass: every demand keeps at least its protected rate"),
            std::string::npos);

  // Rendering the failing shape (reached only if a plan ever regressed).
  VerifyReport bad = r;
  bad.pass = false;
  bad.verdict = "demand 'd2' delivers 0 Gb/s (protected 125) when link 'B-Z' fails";
  EXPECT_NE(render_markdown(bad).find("fail: demand 'd2' delivers 0 Gb/s"),
            std::string::npos);
  EXPECT_THROW(verify_config(s, gbps({100, 125, 50})), Error);
  EXPECT_THROW(verify_config(s, gbps({125, 100})), Error);  // above d1's rate
}

TEST(Report, CaseStudyTablesGolden) {
  const std::string expected = R"(# Case study: two demands, one shared protection hop

## Spectrum slices on the shared protection link

| Scenario | Spectrum slices |
| --- | --- |
| Full protection without coding | 10 |
| Full protection with coding | 6 |
| Partial protection 90% without coding | 9 |
| Partial protection 80% without coding | 8 |
| Partial protection 70% without coding | 7 |
| Partial protection 60% without coding | 6 |
| Partial protection 50% without coding | 5 |
| Partial protection 40% without coding | 4 |
| Partial protection 30% without coding | 3 |
| Partial protection 20% without coding | 2 |
| Partial protection 10% without coding | 1 |

## Optimal partial-protection configurations with coding

| Protection level | Configuration | Spectrum slices |
| --- | --- | --- |
| 90% | 100 + 125 | 5 |
| 80% | 100 + 100 | 4 |
| 70% | 100 + 75 (75 + 100) | 4 |
| 60% | 75 + 75 | 3 |
| 50% | 75 + 50 (50 + 75) | 3 |
| 40% | 50 + 50 | 2 |
| 30% | 50 + 25 (25 + 50) | 2 |
| 20% | 25 + 25 | 1 |
| 10% | 25 + 0 (0 + 25) | 1 |
)";
  EXPECT_EQ(render_case_study_tables(), expected);
  EXPECT_EQ(render_case_study_tables(), expected) << "must be byte-stable";
}

TEST(Report, EmbeddedCaseStudyMatchesShippedScenario) {
  std::ifstream file(test::scenario_path("fig5.toml"), std::ios::binary);
  ASSERT_TRUE(file.is_open());
  std::ostringstream bytes;
  bytes << file.rdbuf();
  EXPECT_EQ(bytes.str(), kCaseStudyScenarioToml);
}

TEST(Report, RenderingIsDeterministic) {
  Scenario s = case_study();
  EXPECT_EQ(render_markdown(run_scenario(s)), render_markdown(run_scenario(s)));
  EXPECT_EQ(render_jsonl(run_scenario(s)), render_jsonl(run_scenario(s)));
}

}  // namespace
}  // namespace eonplan
