// SPDX-License-Identifier: Apache-2.0
#include "eonplan/scenario_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

namespace eonplan {

Scenario random_scenario(uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scenario s;
  s.name = "random-" + std::to_string(seed);
  s.modulation =
      modulation_preset(std::uniform_int_distribution<int>(0, 1)(rng) ? "16qam-pm"
                                                                      : "qpsk-pm");

  constexpr int kNodes = 8;
  std::vector<std::string> nodes;
  for (int i = 1; i <= kNodes; ++i) nodes.push_back("N" + std::to_string(i));

  std::vector<int> ring(kNodes);
  std::iota(ring.begin(), ring.end(), 0);
  std::shuffle(ring.begin(), ring.end(), rng);

  std::set<std::pair<int, int>> used;
  std::vector<Link> links;
  auto add = [&](int a, int b) {
    auto [lo, hi] = std::minmax(a, b);
    if (lo == hi || !used.insert({lo, hi}).second) return;
    links.push_back({"", nodes[lo], nodes[hi], kDefaultSliceCount});
  };
  for (int i = 0; i < kNodes; ++i) add(ring[i], ring[(i + 1) % kNodes]);

  std::uniform_int_distribution<int> pick(0, kNodes - 1);
  for (int chords = std::uniform_int_distribution<int>(2, 6)(rng); chords > 0;
       --chords) {
    add(pick(rng), pick(rng));
  }
  s.topology = Topology::build(nodes, std::move(links));

  int demand_count = std::uniform_int_distribution<int>(2, 4)(rng);
  std::uniform_int_distribution<int> rate_steps(1, 16);
  for (int d = 0; d < demand_count; ++d) {
    Demand demand;
    demand.id = "d" + std::to_string(d + 1);
    int src = pick(rng);
    int dst = pick(rng);
    while (dst == src) dst = pick(rng);
    demand.src = nodes[src];
    demand.dst = nodes[dst];
    demand.rate = Rate::from_gbps(25 * rate_steps(rng));
    s.demands.push_back(std::move(demand));
  }
  return s;
}

}  // namespace eonplan
