// SPDX-License-Identifier: Apache-2.0
#include "eonplan/coding.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "eonplan/errors.hpp"

namespace eonplan {

namespace {

bool is_simple(const Path& p) {
  std::set<std::string> seen(p.begin(), p.end());
  return seen.size() == p.size();
}

void check_member(const ProtectionSignal& s, const Topology& t) {
  const std::string& id = s.demand_id;
  if (s.working.size() < 2 || s.protection.size() < 2) {
    throw validation_error("demand '" + id + "': paths need at least two nodes");
  }
  if (s.working.front() != s.protection.front() ||
      s.working.back() != s.protection.back()) {
    throw validation_error("demand '" + id +
                           "': working and protection endpoints differ");
  }
  if (!is_simple(s.working) || !is_simple(s.protection)) {
    throw validation_error("demand '" + id + "': path revisits a node");
  }
  if (s.rate.cgbps < 0 || s.protected_rate.cgbps < 0) {
    throw validation_error("demand '" + id + "': negative rate");
  }
  if (s.protected_rate > s.rate) {
    throw validation_error("demand '" + id + "': protected share " +
                           s.protected_rate.to_string() + " exceeds rate " +
                           s.rate.to_string());
  }
  t.links_on_path(s.working);
  t.links_on_path(s.protection);
}

// Longest common suffix, in nodes, over the members' protection paths.
size_t common_suffix_nodes(std::span<const ProtectionSignal> members) {
  size_t limit = members[0].protection.size();
  for (const ProtectionSignal& s : members) {
    limit = std::min(limit, s.protection.size());
  }
  size_t len = 0;
  while (len < limit) {
    const Path& first = members[0].protection;
    const std::string& want = first[first.size() - 1 - len];
    bool all = std::all_of(members.begin(), members.end(),
                           [&](const ProtectionSignal& s) {
                             return s.protection[s.protection.size() - 1 - len] == want;
                           });
    if (!all) break;
    ++len;
  }
  return len;
}

std::set<std::string> link_set(const Topology& t, const Path& p) {
  auto ids = t.links_on_path(p);
  return {ids.begin(), ids.end()};
}

// First link id present in both sets, if any.
const std::string* first_shared(const std::set<std::string>& a,
                                const std::set<std::string>& b) {
  for (const std::string& id : a) {
    if (b.count(id)) return &*b.find(id);
  }
  return nullptr;
}

}  // namespace

std::string find_encode_node(std::span<const ProtectionSignal> members) {
  if (members.empty()) {
    throw validation_error("coding group has no members");
  }
  const std::string& dst = members[0].protection.back();
  for (const ProtectionSignal& s : members) {
    if (s.protection.back() != dst) {
      throw validation_error("demand '" + s.demand_id + "' ends at '" +
                             s.protection.back() + "', not '" + dst +
                             "'; coded signals must share a destination");
    }
  }
  size_t suffix = common_suffix_nodes(members);
  const Path& p = members[0].protection;
  return p[p.size() - suffix];
}

CodingGroup make_group(std::vector<ProtectionSignal> members, const Topology& t) {
  if (members.empty()) {
    throw validation_error("coding group has no members");
  }
  std::set<std::string> ids;
  for (const ProtectionSignal& s : members) {
    if (!ids.insert(s.demand_id).second) {
      throw validation_error("demand '" + s.demand_id +
                             "' appears twice in one coding group");
    }
    check_member(s, t);
  }

  CodingGroup g;
  g.encode_node = find_encode_node(members);
  size_t suffix = common_suffix_nodes(members);
  const Path& p0 = members[0].protection;
  g.tail.assign(p0.end() - suffix, p0.end());
  for (const ProtectionSignal& s : members) {
    const Path& p = s.protection;
    g.feeders.emplace_back(p.begin(), p.end() - suffix + 1);
  }
  g.members = std::move(members);
  return g;
}

Feasibility coding_feasible(const CodingGroup& g, const Topology& t) {
  std::set<std::string> tail = link_set(t, g.tail);
  std::vector<std::set<std::string>> feeders;
  std::vector<std::set<std::string>> workings;
  for (size_t i = 0; i < g.members.size(); ++i) {
    feeders.push_back(link_set(t, g.feeders[i]));
    workings.push_back(link_set(t, g.members[i].working));
  }

  for (size_t i = 0; i < g.members.size(); ++i) {
    const std::string& id = g.members[i].demand_id;
    if (const std::string* l = first_shared(workings[i], tail)) {
      return {false, "working path of '" + id + "' shares link '" + *l +
                         "' with the coded tail"};
    }
    for (size_t j = 0; j < g.members.size(); ++j) {
      if (const std::string* l = first_shared(workings[i], feeders[j])) {
        return {false, "working path of '" + id + "' shares link '" + *l +
                           "' with the feeder of '" + g.members[j].demand_id + "'"};
      }
      if (j == i) continue;
      if (const std::string* l = first_shared(workings[i], workings[j])) {
        return {false, "working paths of '" + id + "' and '" +
                           g.members[j].demand_id + "' share link '" + *l + "'"};
      }
    }
  }
  return {true, ""};
}

std::vector<ChannelRequest> coded_channel_requests(const CodingGroup& g,
                                                   const ModulationFormat& m,
                                                   const GridSpec& grid) {
  std::vector<ChannelRequest> out;
  std::vector<Rate> shares;
  std::string coded_owner;
  for (size_t i = 0; i < g.members.size(); ++i) {
    const ProtectionSignal& s = g.members[i];
    if (!coded_owner.empty()) coded_owner += '+';
    coded_owner += s.demand_id;
    if (s.protected_rate.cgbps == 0) continue;
    shares.push_back(s.protected_rate);
    out.push_back({s.demand_id + ":feeder", g.feeders[i],
                   slices_for_rate(s.protected_rate, m, grid)});
  }
  int coded = shares.empty() ? 0 : coded_slices(shares, m, grid);
  out.push_back({coded_owner + ":coded", g.tail, coded});
  return out;
}

std::vector<Rate> delivered_after_failure(const CodingGroup& g, const Topology& t,
                                          const std::string& failed_link) {
  if (!t.find_link(failed_link)) {
    throw validation_error("unknown link '" + failed_link + "'");
  }
  auto hit = [&](const Path& p) {
    auto ids = t.links_on_path(p);
    return std::find(ids.begin(), ids.end(), failed_link) != ids.end();
  };

  bool tail_hit = hit(g.tail);
  std::vector<bool> feeder_hit, working_hit;
  for (size_t i = 0; i < g.members.size(); ++i) {
    feeder_hit.push_back(hit(g.feeders[i]));
    working_hit.push_back(hit(g.members[i].working));
  }

  std::vector<Rate> delivered;
  for (size_t i = 0; i < g.members.size(); ++i) {
    const ProtectionSignal& s = g.members[i];
    if (!working_hit[i]) {
      delivered.push_back(s.rate);
      continue;
    }
    if (s.protected_rate.cgbps == 0) {
      delivered.push_back(Rate::from_cgbps(0));
      continue;
    }
    bool decodable = !tail_hit;
    for (size_t j = 0; decodable && j < g.members.size(); ++j) {
      if (g.members[j].protected_rate.cgbps == 0) continue;
      if (feeder_hit[j]) decodable = false;
      if (j != i && working_hit[j]) decodable = false;
    }
    delivered.push_back(decodable ? s.protected_rate : Rate::from_cgbps(0));
  }
  return delivered;
}

std::vector<Rate> worst_case_delivered(const CodingGroup& g, const Topology& t) {
  std::vector<Rate> worst;
  for (const ProtectionSignal& s : g.members) worst.push_back(s.rate);
  for (const Link& link : t.links()) {
    std::vector<Rate> d = delivered_after_failure(g, t, link.id);
    for (size_t i = 0; i < worst.size(); ++i) {
      worst[i] = std::min(worst[i], d[i]);
    }
  }
  return worst;
}

std::vector<CodingGroup> greedy_pair_groups(std::vector<ProtectionSignal> signals,
                                            const Topology& t) {
  size_t n = signals.size();
  std::vector<bool> taken(n, false);
  std::vector<CodingGroup> pairs;

  auto id_key = [&](size_t x, size_t y) {
    std::pair<std::string, std::string> k{signals[x].demand_id, signals[y].demand_id};
    if (k.second < k.first) std::swap(k.first, k.second);
    return k;
  };

  for (;;) {
    int best_i = -1, best_j = -1;
    size_t best_links = 0;
    for (size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      for (size_t j = i + 1; j < n; ++j) {
        if (taken[j]) continue;
        if (signals[i].protection.back() != signals[j].protection.back()) continue;
        std::array<ProtectionSignal, 2> pair{signals[i], signals[j]};
        size_t shared = common_suffix_nodes(pair) - 1;
        if (shared < 1) continue;
        CodingGroup candidate = make_group({signals[i], signals[j]}, t);
        if (!coding_feasible(candidate, t).ok) continue;

        bool better = shared > best_links;
        if (shared == best_links && best_i >= 0) {
          better = id_key(i, j) < id_key(best_i, best_j);
        }
        if (better) {
          best_links = shared;
          best_i = static_cast<int>(i);
          best_j = static_cast<int>(j);
        }
      }
    }
    if (best_i < 0) break;
    taken[best_i] = taken[best_j] = true;
    pairs.push_back(make_group({signals[best_i], signals[best_j]}, t));
  }

  for (size_t i = 0; i < n; ++i) {
    if (!taken[i]) pairs.push_back(make_group({signals[i]}, t));
  }
  return pairs;
}

}  // namespace eonplan
