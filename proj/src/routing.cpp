// SPDX-License-Identifier: Apache-2.0
#include "eonplan/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace eonplan {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

struct Arc {
  std::string tail;
  std::string head;
  int link_index;
  int cost;
};

void check_endpoint(const Topology& t, const std::string& node) {
  if (!t.has_node(node)) {
    throw validation_error("unknown node '" + node + "'");
  }
}

// Hop distances from `from` to every node.
std::map<std::string, int> bfs_distances(const Topology& t, const std::string& from) {
  std::map<std::string, int> dist;
  dist[from] = 0;
  std::deque<std::string> queue = {from};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (int li : t.incident_links(cur)) {
      const Link& link = t.links()[li];
      const std::string& other = link.a == cur ? link.b : link.a;
      if (!dist.contains(other)) {
        dist[other] = dist[cur] + 1;
        queue.push_back(other);
      }
    }
  }
  return dist;
}

}  // namespace

Path shortest_path(const Topology& t, const std::string& src, const std::string& dst) {
  check_endpoint(t, src);
  check_endpoint(t, dst);
  if (src == dst) return {src};

  auto dist_to_dst = bfs_distances(t, dst);
  if (!dist_to_dst.contains(src)) {
    throw infeasible_error("no path from '" + src + "' to '" + dst + "'");
  }

  // Walk downhill toward dst, preferring the smallest neighbor id at each
  // step; this yields the lexicographically smallest shortest path.
  Path path = {src};
  std::string cur = src;
  while (cur != dst) {
    int need = dist_to_dst.at(cur) - 1;
    const std::string* next = nullptr;
    for (int li : t.incident_links(cur)) {
      const Link& link = t.links()[li];
      const std::string& other = link.a == cur ? link.b : link.a;
      auto it = dist_to_dst.find(other);
      if (it != dist_to_dst.end() && it->second == need &&
          (next == nullptr || other < *next)) {
        next = &other;
      }
    }
    if (next == nullptr) {
      throw internal_error("shortest-path reconstruction lost the distance gradient");
    }
    path.push_back(*next);
    cur = *next;
  }
  return path;
}

PathPair disjoint_pair(const Topology& t, const std::string& src, const std::string& dst) {
  check_endpoint(t, src);
  check_endpoint(t, dst);
  if (src == dst) {
    throw validation_error("disjoint pair needs distinct endpoints");
  }

  Path first = shortest_path(t, src, dst);  // throws "unreachable" when disconnected

  // Directed arcs traversed by the first path, keyed by link index.
  std::map<int, std::pair<std::string, std::string>> used;  // link -> (tail, head)
  for (size_t i = 0; i + 1 < first.size(); ++i) {
    const Link* link = t.link_between(first[i], first[i + 1]);
    int li = static_cast<int>(link - t.links().data());
    used[li] = {first[i], first[i + 1]};
  }

  // Residual graph: every unused link both ways at cost 1; used links only
  // backwards at cost -1. Node paths cannot name a specific parallel link, so
  // only the lowest-id link per node pair participates; extra parallels add
  // capacity, not disjointness.
  std::vector<Arc> arcs;
  for (size_t li = 0; li < t.links().size(); ++li) {
    const Link& link = t.links()[li];
    if (t.link_between(link.a, link.b) != &link) continue;
    auto it = used.find(static_cast<int>(li));
    if (it == used.end()) {
      arcs.push_back({link.a, link.b, static_cast<int>(li), 1});
      arcs.push_back({link.b, link.a, static_cast<int>(li), 1});
    } else {
      arcs.push_back({it->second.second, it->second.first, static_cast<int>(li), -1});
    }
  }
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& x, const Arc& y) {
    if (x.tail != y.tail) return x.tail < y.tail;
    if (x.head != y.head) return x.head < y.head;
    return x.link_index < y.link_index;
  });

  // Bellman-Ford; negative arcs exist but no negative cycles (the first path
  // is shortest).
  std::map<std::string, int> dist;
  std::map<std::string, int> parent_arc;
  for (const std::string& node : t.nodes()) dist[node] = kUnreached;
  dist[src] = 0;
  for (size_t round = 0; round < t.nodes().size(); ++round) {
    bool changed = false;
    for (size_t ai = 0; ai < arcs.size(); ++ai) {
      const Arc& arc = arcs[ai];
      if (dist[arc.tail] == kUnreached) continue;
      if (dist[arc.tail] + arc.cost < dist[arc.head]) {
        dist[arc.head] = dist[arc.tail] + arc.cost;
        parent_arc[arc.head] = static_cast<int>(ai);
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (dist[dst] == kUnreached) {
    throw infeasible_error("no link-disjoint path pair from '" + src + "' to '" + dst +
                           "' (a cut link separates them)");
  }

  // Second path arcs, walked back through the parent tree.
  std::set<std::pair<int, bool>> second_arcs;  // (link index, forward along link.a->b)
  std::string cur = dst;
  while (cur != src) {
    const Arc& arc = arcs[parent_arc.at(cur)];
    const Link& link = t.links()[arc.link_index];
    second_arcs.insert({arc.link_index, arc.tail == link.a});
    cur = arc.tail;
  }

  // Union of the two paths with opposite traversals cancelled.
  std::set<std::pair<int, bool>> flow;
  for (const auto& [li, ends] : used) {
    const Link& link = t.links()[li];
    flow.insert({li, ends.first == link.a});
  }
  for (const auto& [li, forward] : second_arcs) {
    auto opposite = std::make_pair(li, !forward);
    if (flow.contains(opposite)) {
      flow.erase(opposite);
    } else {
      flow.insert({li, forward});
    }
  }

  // Decompose the 2-unit flow into two paths, taking the smallest-id next hop
  // at every branch.
  std::map<std::string, std::vector<std::pair<std::string, int>>> out;  // tail -> (head, link)
  for (const auto& [li, forward] : flow) {
    const Link& link = t.links()[li];
    const std::string& tail = forward ? link.a : link.b;
    const std::string& head = forward ? link.b : link.a;
    out[tail].push_back({head, li});
  }
  for (auto& [_, heads] : out) std::sort(heads.begin(), heads.end());

  auto extract_path = [&]() {
    Path path = {src};
    std::set<std::string> visited = {src};
    std::string node = src;
    while (node != dst) {
      auto it = out.find(node);
      if (it == out.end() || it->second.empty()) {
        throw internal_error("path-pair flow decomposition ran out of arcs");
      }
      auto [head, li] = it->second.front();
      it->second.erase(it->second.begin());
      if (!visited.insert(head).second && head != dst) {
        throw internal_error("path-pair flow decomposition produced a non-simple path");
      }
      path.push_back(head);
      node = head;
    }
    return path;
  };

  Path p1 = extract_path();
  Path p2 = extract_path();
  if (p2.size() < p1.size() || (p2.size() == p1.size() && p2 < p1)) {
    std::swap(p1, p2);
  }
  return PathPair{std::move(p1), std::move(p2)};
}

bool verify_disjoint(const PathPair& pair, const Topology& t) {
  auto working = t.links_on_path(pair.working);
  auto protection = t.links_on_path(pair.protection);
  std::set<std::string> working_set(working.begin(), working.end());
  return std::none_of(protection.begin(), protection.end(),
                      [&](const std::string& id) { return working_set.contains(id); });
}

}  // namespace eonplan
