// SPDX-License-Identifier: Apache-2.0
#include "eonplan/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "eonplan/errors.hpp"

namespace eonplan {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Per-demand bounds in step units.
struct Ladder {
  int64_t kmin = 0;
  int64_t kmax = 0;
};

std::vector<Ladder> build_ladders(const OptimizerInput& in) {
  size_t n = in.rates.size();
  if (n == 0) throw validation_error("no demands to optimize");
  if (in.step.cgbps <= 0) throw validation_error("step must be positive");
  if (!in.min_protected.empty() && in.min_protected.size() != n) {
    throw validation_error("min_protected list does not match the demand count");
  }

  std::vector<Ladder> out(n);
  for (size_t d = 0; d < n; ++d) {
    Rate rate = in.rates[d];
    if (rate.cgbps <= 0) {
      throw validation_error("demand #" + std::to_string(d) + " has no rate");
    }
    if (!rate.multiple_of(in.step)) {
      throw validation_error("rate " + rate.to_string() + " of demand #" +
                             std::to_string(d) + " is not a multiple of the " +
                             in.step.to_string() + " Gb/s step");
    }
    Rate floor = in.min_protected.empty() ? Rate{} : in.min_protected[d];
    if (floor.cgbps < 0 || floor > rate) {
      throw validation_error("min_protected of demand #" + std::to_string(d) +
                             " is outside [0, rate]");
    }
    out[d].kmin = ceil_div(floor.cgbps, in.step.cgbps);
    out[d].kmax = rate.cgbps / in.step.cgbps;
  }
  return out;
}

void check_groups(const OptimizerInput& in) {
  size_t n = in.rates.size();
  std::vector<int> seen(n, 0);
  for (const GroupShape& g : in.groups) {
    if (g.members.empty()) throw validation_error("empty coding group");
    if (g.feeder_links.size() != g.members.size()) {
      throw validation_error("group feeder list does not match its member count");
    }
    if (g.tail_links < 0) throw validation_error("negative tail length");
    for (size_t i = 0; i < g.members.size(); ++i) {
      int m = g.members[i];
      if (m < 0 || m >= static_cast<int>(n)) {
        throw validation_error("group member index out of range");
      }
      if (g.feeder_links[i] < 0) throw validation_error("negative feeder length");
      seen[m] += 1;
    }
  }
  for (size_t d = 0; d < n; ++d) {
    if (seen[d] != 1) {
      throw validation_error("demand #" + std::to_string(d) +
                             " must belong to exactly one group");
    }
  }
}

// Descending enumeration of k-vectors with a fixed sum, bounded per entry.
// suffix_min/suffix_max[i] cover entries i.. so every branch completes.
void enumerate_steps(const std::vector<Ladder>& lad, int64_t sum,
                     const std::function<void(const std::vector<int64_t>&)>& emit) {
  size_t n = lad.size();
  std::vector<int64_t> suffix_min(n + 1, 0), suffix_max(n + 1, 0);
  for (size_t i = n; i-- > 0;) {
    suffix_min[i] = suffix_min[i + 1] + lad[i].kmin;
    suffix_max[i] = suffix_max[i + 1] + lad[i].kmax;
  }
  std::vector<int64_t> cur(n, 0);
  std::function<void(size_t, int64_t)> rec = [&](size_t d, int64_t remaining) {
    if (d == n) {
      emit(cur);
      return;
    }
    int64_t hi = std::min(lad[d].kmax, remaining - suffix_min[d + 1]);
    int64_t lo = std::max(lad[d].kmin, remaining - suffix_max[d + 1]);
    for (int64_t k = hi; k >= lo; --k) {
      cur[d] = k;
      rec(d + 1, remaining - k);
    }
  };
  if (sum >= suffix_min[0] && sum <= suffix_max[0]) rec(0, sum);
}

int64_t group_cost(const OptimizerInput& in, const GroupShape& g,
                   const std::vector<Rate>& shares) {
  Rate largest{};
  for (Rate s : shares) largest = std::max(largest, s);
  int coded = slices_for_rate(largest, in.modulation, in.grid);
  if (in.objective == Objective::coded_link) return coded;
  int64_t cost = static_cast<int64_t>(coded) * g.tail_links;
  for (size_t i = 0; i < shares.size(); ++i) {
    cost += static_cast<int64_t>(slices_for_rate(shares[i], in.modulation, in.grid)) *
            g.feeder_links[i];
  }
  return cost;
}

OptimizeResult optimize_exhaustive(const OptimizerInput& in, Rate protected_sum) {
  OptimizeResult best;
  best.cost = kInf;
  for (Config& c : enumerate_configs(in, protected_sum)) {
    int64_t cost = evaluate_config(in, c);
    if (cost < best.cost) {
      best.cost = cost;
      best.optima.clear();
    }
    if (cost == best.cost) best.optima.push_back(std::move(c));
  }
  return best;
}

// Per-group table: for each reachable share sum, the cheapest cost and every
// tuple achieving it.
struct GroupTable {
  int64_t smin = 0;
  std::map<int64_t, int64_t> cost;                            // sum -> min cost
  std::map<int64_t, std::vector<std::vector<int64_t>>> ties;  // sum -> tuples
};

OptimizeResult optimize_grouped(const OptimizerInput& in,
                                const std::vector<Ladder>& lad, int64_t total_steps) {
  std::vector<GroupTable> tables;
  for (const GroupShape& g : in.groups) {
    std::vector<Ladder> sub;
    for (int m : g.members) sub.push_back(lad[m]);
    GroupTable table;
    int64_t gmin = 0, gmax = 0;
    for (const Ladder& l : sub) {
      gmin += l.kmin;
      gmax += l.kmax;
    }
    for (int64_t s = gmin; s <= gmax; ++s) {
      enumerate_steps(sub, s, [&](const std::vector<int64_t>& tuple) {
        std::vector<Rate> shares;
        for (int64_t k : tuple) shares.push_back(Rate::from_cgbps(k * in.step.cgbps));
        int64_t c = group_cost(in, g, shares);
        auto it = table.cost.find(s);
        if (it == table.cost.end() || c < it->second) {
          table.cost[s] = c;
          table.ties[s] = {tuple};
        } else if (c == it->second) {
          table.ties[s].push_back(tuple);
        }
      });
    }
    table.smin = gmin;
    tables.push_back(std::move(table));
  }

  size_t gcount = in.groups.size();
  std::vector<std::map<int64_t, int64_t>> best(gcount + 1);
  best[gcount][0] = 0;
  for (size_t g = gcount; g-- > 0;) {
    for (const auto& [s, c] : tables[g].cost) {
      for (const auto& [rest, tail_cost] : best[g + 1]) {
        int64_t total = c + tail_cost;
        auto [it, fresh] = best[g].try_emplace(s + rest, total);
        if (!fresh && total < it->second) it->second = total;
      }
    }
  }

  auto opt = best[0].find(total_steps);
  if (opt == best[0].end()) {
    return {kInf, {}};
  }

  OptimizeResult result;
  result.cost = opt->second;
  Config current(in.rates.size(), Rate{});
  std::function<void(size_t, int64_t, int64_t)> walk = [&](size_t g, int64_t remaining,
                                                           int64_t budget) {
    if (g == gcount) {
      if (remaining == 0 && budget == 0) result.optima.push_back(current);
      return;
    }
    for (const auto& [s, c] : tables[g].cost) {
      auto rest = best[g + 1].find(remaining - s);
      if (rest == best[g + 1].end() || c + rest->second != budget) continue;
      for (const std::vector<int64_t>& tuple : tables[g].ties.at(s)) {
        for (size_t i = 0; i < tuple.size(); ++i) {
          current[in.groups[g].members[i]] = Rate::from_cgbps(tuple[i] * in.step.cgbps);
        }
        walk(g + 1, remaining - s, budget - c);
      }
    }
  };
  walk(0, total_steps, result.cost);
  std::sort(result.optima.begin(), result.optima.end(), std::greater<>());
  return result;
}

}  // namespace

Objective parse_objective(std::string_view name) {
  if (name == "coded-link") return Objective::coded_link;
  if (name == "network") return Objective::network;
  throw validation_error("unknown objective '" + std::string(name) +
                         "' (expected 'coded-link' or 'network')");
}

std::string_view objective_name(Objective o) {
  return o == Objective::coded_link ? "coded-link" : "network";
}

Rate required_protected_sum(const OptimizerInput& in, int64_t target_bp) {
  if (target_bp < 0 || target_bp > 10000) {
    throw validation_error("target must be between 0 and 1");
  }
  if (in.step.cgbps <= 0) throw validation_error("step must be positive");
  int64_t total = 0;
  for (Rate r : in.rates) total += r.cgbps;

  int64_t num = target_bp * total;
  int64_t grid = in.step.cgbps;
  if (num % 10000 == 0 && (num / 10000) % grid == 0) {
    return Rate::from_cgbps(num / 10000);
  }
  int64_t lo = num / (10000 * grid) * grid;
  int64_t hi = lo + grid;
  if (in.round_to_step) {
    int64_t snapped = (2 * num + 10000 * grid) / (2 * 10000 * grid) * grid;
    return Rate::from_cgbps(std::clamp(snapped, int64_t{0}, total));
  }
  throw infeasible_error(
      "target " + format_scaled_decimal(target_bp, 4) + " of " +
      Rate::from_cgbps(total).to_string() +
      " Gb/s total is off the step grid; nearest attainable protected sums are " +
      Rate::from_cgbps(lo).to_string() + " and " + Rate::from_cgbps(hi).to_string() +
      " Gb/s");
}

std::vector<Config> enumerate_configs(const OptimizerInput& in, Rate protected_sum) {
  std::vector<Ladder> lad = build_ladders(in);
  if (protected_sum.cgbps < 0 || !protected_sum.multiple_of(in.step)) {
    throw validation_error("protected sum " + protected_sum.to_string() +
                           " is not a multiple of the step");
  }
  std::vector<Config> out;
  enumerate_steps(lad, protected_sum.cgbps / in.step.cgbps,
                  [&](const std::vector<int64_t>& steps) {
                    Config c;
                    for (int64_t k : steps) {
                      c.push_back(Rate::from_cgbps(k * in.step.cgbps));
                    }
                    out.push_back(std::move(c));
                  });
  return out;
}

int64_t evaluate_config(const OptimizerInput& in, const Config& config) {
  check_groups(in);
  if (config.size() != in.rates.size()) {
    throw validation_error("config does not match the demand count");
  }
  for (size_t d = 0; d < config.size(); ++d) {
    if (config[d].cgbps < 0 || config[d] > in.rates[d] ||
        !config[d].multiple_of(in.step)) {
      throw validation_error("protected rate " + config[d].to_string() +
                             " of demand #" + std::to_string(d) +
                             " is off the grid");
    }
  }
  int64_t cost = 0;
  for (const GroupShape& g : in.groups) {
    std::vector<Rate> shares;
    for (int m : g.members) shares.push_back(config[m]);
    cost += group_cost(in, g, shares);
  }
  return cost;
}

OptimizeResult optimize(const OptimizerInput& in, int64_t target_bp) {
  std::vector<Ladder> lad = build_ladders(in);
  check_groups(in);
  Rate required = required_protected_sum(in, target_bp);
  int64_t steps = required.cgbps / in.step.cgbps;

  int64_t smin = 0, smax = 0;
  for (const Ladder& l : lad) {
    smin += l.kmin;
    smax += l.kmax;
  }
  auto unreachable = [&] {
    return infeasible_error(
        "no configuration reaches a protected sum of " + required.to_string() +
        " Gb/s; attainable sums run from " +
        Rate::from_cgbps(smin * in.step.cgbps).to_string() + " to " +
        Rate::from_cgbps(smax * in.step.cgbps).to_string() + " Gb/s");
  };
  if (steps < smin || steps > smax) throw unreachable();

  OptimizeResult result = in.rates.size() <= 8
                              ? optimize_exhaustive(in, required)
                              : optimize_grouped(in, lad, steps);
  if (result.cost >= kInf || result.optima.empty()) throw unreachable();
  return result;
}

OptimizerInput without_coding(const OptimizerInput& in) {
  check_groups(in);
  size_t n = in.rates.size();
  std::vector<int> protection_links(n, 0);
  for (const GroupShape& g : in.groups) {
    for (size_t i = 0; i < g.members.size(); ++i) {
      protection_links[g.members[i]] = g.feeder_links[i] + g.tail_links;
    }
  }
  OptimizerInput out = in;
  out.groups.clear();
  for (size_t d = 0; d < n; ++d) {
    out.groups.push_back({{static_cast<int>(d)}, {0}, protection_links[d]});
  }
  return out;
}

std::vector<SweepRow> sweep_targets(const OptimizerInput& in,
                                    std::span<const int64_t> targets_bp) {
  OptimizerInput baseline_in = without_coding(in);
  std::vector<SweepRow> rows;
  for (int64_t target : targets_bp) {
    SweepRow row;
    row.target_bp = target;
    try {
      row.best = optimize(in, target);
      row.baseline = optimize(baseline_in, target);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::internal) throw;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eonplan
