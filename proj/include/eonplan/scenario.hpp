// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eonplan/decimal.hpp"
#include "eonplan/optimizer.hpp"
#include "eonplan/slices.hpp"
#include "eonplan/toml.hpp"
#include "eonplan/topology.hpp"

namespace eonplan {

struct Demand {
  std::string id;
  std::string src;
  std::string dst;
  Rate rate;
  Rate min_protected;  // floor on the protected share; 0 by default
  // Explicit routes, given together or not at all. Empty means the planner
  // picks a link-disjoint pair itself.
  Path working;
  Path protection;

  bool has_explicit_paths() const { return !working.empty(); }
};

struct Scenario {
  std::string name;
  Topology topology;
  ModulationFormat modulation;
  GridSpec grid;
  Rate step = Rate::from_gbps(25);
  std::vector<int64_t> targets_bp = {10000};  // fractions in basis points
  Objective objective = Objective::coded_link;
  bool pairwise_only = false;
  // Set from the CLI, not the file: snap off-grid targets to the nearest
  // attainable protected sum instead of erroring.
  bool round_targets = false;
  std::vector<Demand> demands;
  std::vector<std::vector<std::string>> coding_groups;  // demand ids, pinned
};

// Validates the whole document under a closed key set: unknown keys are
// errors, cross-references (nodes, demand ids, group members) must resolve,
// rates must sit on the step grid, and explicit route pairs must be simple,
// adjacent, endpoint-correct and link-disjoint.
Scenario parse_scenario(const toml::Document& doc);

Scenario parse_scenario_text(std::string_view text, std::string_view source_name);
Scenario load_scenario(const std::string& path);

}  // namespace eonplan
