// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eonplan/decimal.hpp"
#include "eonplan/slices.hpp"

namespace eonplan {

// What the slice cost of a configuration counts. coded_link charges each
// group's coded channel once (the shared-bottleneck-link view used by the
// summary tables); network weights every protection channel by the number
// of links it crosses.
enum class Objective { coded_link, network };

Objective parse_objective(std::string_view name);  // "coded-link" | "network"
std::string_view objective_name(Objective o);

// One group's geometry reduced to what costing needs: member demand
// indices, feeder hop counts, and the coded-tail hop count. Keeping hop
// counts instead of paths leaves the optimizer independent of any topology.
struct GroupShape {
  std::vector<int> members;       // demand indices
  std::vector<int> feeder_links;  // parallel to members
  int tail_links = 0;
};

struct OptimizerInput {
  std::vector<Rate> rates;          // demand order
  std::vector<Rate> min_protected;  // parallel; empty means no floors
  Rate step;
  std::vector<GroupShape> groups;  // partition of the demand indices
  ModulationFormat modulation;
  GridSpec grid;
  Objective objective = Objective::coded_link;
  bool round_to_step = false;  // snap off-grid targets to the nearest grid sum
};

// Per-demand protected rates, demand order.
using Config = std::vector<Rate>;

// The protected-rate sum a target fraction (in basis points) asks for.
// Throws when the exact sum misses the step grid, naming the attainable
// neighbours, unless round_to_step is set.
Rate required_protected_sum(const OptimizerInput& in, int64_t target_bp);

// Every config on the step grid with the given protected sum, honoring the
// per-demand floors and caps, in descending lexicographic order.
std::vector<Config> enumerate_configs(const OptimizerInput& in, Rate protected_sum);

// Slice cost of one config under the input's objective.
int64_t evaluate_config(const OptimizerInput& in, const Config& config);

struct OptimizeResult {
  int64_t cost = 0;
  std::vector<Config> optima;  // every tie, descending lexicographic
};

// Minimum-cost configs for one target: enumerate, evaluate, keep all ties.
// Exhaustive up to 8 demands; past that a per-group dynamic program over
// the sum budget finds the same optimum and the same tie set.
OptimizeResult optimize(const OptimizerInput& in, int64_t target_bp);

// The same demands with every group dissolved into singletons, which prices
// plain 1+1 protection (no coding). Used for baseline columns.
OptimizerInput without_coding(const OptimizerInput& in);

struct SweepRow {
  int64_t target_bp = 0;
  OptimizeResult best;            // with coding
  OptimizeResult baseline;        // without coding, same target
  std::string error;              // row skipped when nonempty
};

// One row per target. Row-level validation or infeasibility is recorded in
// the row and the sweep continues.
std::vector<SweepRow> sweep_targets(const OptimizerInput& in,
                                    std::span<const int64_t> targets_bp);

}  // namespace eonplan
