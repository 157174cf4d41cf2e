// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eonplan/coding.hpp"
#include "eonplan/optimizer.hpp"
#include "eonplan/scenario.hpp"

namespace eonplan {

struct PlannedDemand {
  Demand demand;
  PathPair routes;
};

// Route pair + coding-group structure for a scenario. Configuration
// independent: the same plan is priced at every target.
struct Plan {
  Scenario scenario;
  std::vector<PlannedDemand> demands;       // scenario order
  std::vector<CodingGroup> groups;          // declared, then paired, then single
  std::vector<std::vector<int>> group_idx;  // demand indices, parallel to groups

  // The group geometry reduced to optimizer terms.
  OptimizerInput optimizer_input() const;
};

// Routes every demand (explicit pairs are taken as-is) and forms coding
// groups: pinned groups first, then greedy pairing over the rest. Pinned
// groups that cannot decode under a single failure are rejected here.
Plan build_plan(Scenario scenario);

struct ReportRow {
  int64_t target_bp = 0;
  std::vector<Config> configs;  // coded optima, descending lexicographic
  int64_t coded_cost = 0;
  int64_t uncoded_cost = 0;           // best cost without coding
  std::vector<Config> uncoded_configs;
  std::string error;                  // row skipped when nonempty
};

struct UsageRow {
  std::string link;
  int coded = 0;
  int uncoded = 0;
  int capacity = 0;
};

struct GroupSummary {
  std::vector<std::string> members;
  std::string encode_node;
  Path tail;
};

struct RunReport {
  std::string name;
  std::string modulation;
  std::string objective;
  Rate slice_capacity;
  Rate step;
  std::vector<std::string> demand_ids;
  std::vector<PlannedDemand> demands;
  std::vector<GroupSummary> groups;
  std::vector<ReportRow> rows;
  // Spectrum usage of the first solved target, provisioned once with coding
  // and once without, both at their first optimal configuration.
  int64_t usage_target_bp = -1;  // -1 when no row solved
  std::vector<UsageRow> usage;
  int failures_checked = 0;
  int configs_checked = 0;
};

// Full pipeline: route, group, optimize every target, provision the first
// solved target, and failure-sweep every reported configuration. A reported
// configuration that fails its sweep is an internal error: the report is
// never emitted.
RunReport run_scenario(const Scenario& scenario);
RunReport run_scenario(const Scenario& scenario, std::span<const int64_t> targets_bp);

std::string render_markdown(const RunReport& report);
std::string render_csv(const RunReport& report);
std::string render_jsonl(const RunReport& report);

// Parses "100+125" (whitespace tolerated) against the scenario's demand
// count and step grid.
Config parse_config_string(const Scenario& scenario, std::string_view text);

struct VerifyReport {
  std::string name;
  Config config;
  std::vector<std::string> demand_ids;
  int64_t coded_cost = 0;
  int64_t uncoded_cost = 0;
  // Delivered rate per demand for every single-link failure, link order.
  std::vector<std::pair<std::string, std::vector<Rate>>> delivered;
  bool pass = false;
  std::string verdict;
};

// Prices one explicit configuration and runs the exhaustive single-link
// failure sweep against it. `pass` reports whether every demand keeps at
// least its protected rate under every failure.
VerifyReport verify_config(const Scenario& scenario, const Config& config);

std::string render_markdown(const VerifyReport& report);

// The built-in case study: a two-demand scenario whose protection paths
// share their last hop. Identical to the shipped fig5 scenario file.
extern const std::string_view kCaseStudyScenarioToml;

// Spectrum-summary and optimal-configuration tables for the built-in case
// study at full protection and nine partial-protection levels. Byte-stable.
std::string render_case_study_tables();

}  // namespace eonplan
