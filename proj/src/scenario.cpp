// SPDX-License-Identifier: Apache-2.0
#include "eonplan/scenario.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eonplan/errors.hpp"
#include "eonplan/routing.hpp"

namespace eonplan {

namespace {

const std::set<std::string, std::less<>> kScenarioKeys = {
    "name",       "modulation", "slice_width_ghz", "overhead",
    "default_link_slices", "multigraph", "step_gbps", "targets",
    "objective",  "pairwise_only", "nodes", "links", "demands", "coding_groups"};

const std::set<std::string, std::less<>> kDemandKeys = {
    "id", "src", "dst", "rate_gbps", "working", "protection", "min_protected_gbps"};

Path read_path(const toml::Value& v) {
  Path p = v.as_string_array();
  if (p.size() < 2) {
    throw validation_error(v.where() + ": a path needs at least two nodes");
  }
  return p;
}

bool is_simple(const Path& p) {
  std::set<std::string> seen(p.begin(), p.end());
  return seen.size() == p.size();
}

Demand parse_demand(const toml::Value& entry) {
  const toml::Table& t = entry.as_table();
  for (const auto& [key, value] : t.entries()) {
    if (!kDemandKeys.count(key)) {
      throw validation_error(value.where() + ": unknown key '" + key +
                             "' in demand");
    }
  }
  auto require = [&](const char* key) -> const toml::Value& {
    const toml::Value* v = t.find(key);
    if (!v) {
      throw validation_error(entry.where() + ": demand is missing key '" +
                             std::string(key) + "'");
    }
    return *v;
  };

  Demand d;
  d.id = require("id").as_string();
  if (d.id.empty()) {
    throw validation_error(entry.where() + ": demand id must not be empty");
  }
  d.src = require("src").as_string();
  d.dst = require("dst").as_string();
  d.rate = Rate::from_cgbps(require("rate_gbps").as_scaled(2));
  if (const toml::Value* v = t.find("min_protected_gbps")) {
    d.min_protected = Rate::from_cgbps(v->as_scaled(2));
  }
  const toml::Value* working = t.find("working");
  const toml::Value* protection = t.find("protection");
  if (!working != !protection) {
    throw validation_error(entry.where() + ": demand '" + d.id +
                           "' must give working and protection paths together");
  }
  if (working) {
    d.working = read_path(*working);
    d.protection = read_path(*protection);
  }
  return d;
}

void validate_demand(const Demand& d, const Scenario& s, const std::string& where) {
  auto fail = [&](const std::string& msg) {
    throw validation_error(where + ": demand '" + d.id + "': " + msg);
  };
  if (!s.topology.has_node(d.src)) fail("unknown source node '" + d.src + "'");
  if (!s.topology.has_node(d.dst)) fail("unknown destination node '" + d.dst + "'");
  if (d.src == d.dst) fail("source and destination are the same node");
  if (d.rate.cgbps <= 0) fail("rate must be positive");
  if (!d.rate.multiple_of(s.step)) {
    fail("rate " + d.rate.to_string() + " is not a multiple of the " +
         s.step.to_string() + " Gb/s step");
  }
  if (d.min_protected.cgbps < 0 || d.min_protected > d.rate) {
    fail("min_protected must lie between 0 and the rate");
  }
  if (!d.has_explicit_paths()) return;

  for (const Path* p : {&d.working, &d.protection}) {
    const char* which = p == &d.working ? "working" : "protection";
    if (p->front() != d.src || p->back() != d.dst) {
      fail(std::string(which) + " path must run from '" + d.src + "' to '" + d.dst +
           "'");
    }
    if (!is_simple(*p)) fail(std::string(which) + " path revisits a node");
    try {
      s.topology.links_on_path(*p);
    } catch (const Error& e) {
      fail(std::string(which) + " path: " + e.what());
    }
  }
  auto w = s.topology.links_on_path(d.working);
  auto p = s.topology.links_on_path(d.protection);
  for (const std::string& link : w) {
    if (std::find(p.begin(), p.end(), link) != p.end()) {
      fail("working and protection paths share link '" + link + "'");
    }
  }
}

void parse_coding_groups(const toml::Value& v, Scenario& s) {
  std::map<std::string, std::string> dst_by_id;
  std::set<std::string> grouped;
  for (const Demand& d : s.demands) dst_by_id[d.id] = d.dst;

  for (const toml::Value& entry : v.as_array()) {
    std::vector<std::string> members = entry.as_string_array();
    if (members.empty()) {
      throw validation_error(entry.where() + ": empty coding group");
    }
    if (s.pairwise_only && members.size() > 2) {
      throw validation_error(entry.where() + ": coding group with " +
                             std::to_string(members.size()) +
                             " members exceeds the pairwise-only limit");
    }
    const std::string* dst = nullptr;
    for (const std::string& id : members) {
      auto it = dst_by_id.find(id);
      if (it == dst_by_id.end()) {
        throw validation_error(entry.where() + ": coding group names unknown demand '" +
                               id + "'");
      }
      if (!grouped.insert(id).second) {
        throw validation_error(entry.where() + ": demand '" + id +
                               "' appears in more than one coding group");
      }
      if (dst && *dst != it->second) {
        throw validation_error(entry.where() + ": coding group mixes destinations '" +
                               *dst + "' and '" + it->second + "'");
      }
      dst = &it->second;
    }
    s.coding_groups.push_back(std::move(members));
  }
}

}  // namespace

Scenario parse_scenario(const toml::Document& doc) {
  const toml::Table& root = doc.root;
  for (const auto& [key, value] : root.entries()) {
    if (!kScenarioKeys.count(key)) {
      throw validation_error(value.where() + ": unknown key '" + key + "'");
    }
  }

  Scenario s;
  if (const toml::Value* v = root.find("name")) s.name = v->as_string();

  const toml::Value* modulation = root.find("modulation");
  if (!modulation) {
    throw validation_error(std::string(*doc.source_name) + ": missing key 'modulation'");
  }
  try {
    s.modulation = modulation_preset(modulation->as_string());
  } catch (const Error& e) {
    throw validation_error(modulation->where() + ": " + e.what());
  }

  if (const toml::Value* v = root.find("slice_width_ghz")) {
    int64_t width = v->as_scaled(2);
    if (width <= 0) {
      throw validation_error(v->where() + ": slice width must be positive");
    }
    s.grid.slice_width_cghz = width;
  }
  if (const toml::Value* v = root.find("overhead")) {
    int64_t e4 = v->as_number_e4();
    if (e4 < 10000) {
      throw validation_error(v->where() + ": overhead must be at least 1");
    }
    int64_t g = std::gcd(e4, int64_t{10000});
    s.grid.overhead_num = e4 / g;
    s.grid.overhead_den = 10000 / g;
  }
  if (const toml::Value* v = root.find("step_gbps")) {
    int64_t step = v->as_scaled(2);
    if (step <= 0) throw validation_error(v->where() + ": step must be positive");
    s.step = Rate::from_cgbps(step);
  }
  if (const toml::Value* v = root.find("objective")) {
    try {
      s.objective = parse_objective(v->as_string());
    } catch (const Error& e) {
      throw validation_error(v->where() + ": " + e.what());
    }
  }
  if (const toml::Value* v = root.find("pairwise_only")) {
    s.pairwise_only = v->as_bool();
  }
  if (const toml::Value* v = root.find("targets")) {
    s.targets_bp.clear();
    for (const toml::Value& t : v->as_array()) {
      int64_t bp = t.as_number_e4();
      if (bp < 0 || bp > 10000) {
        throw validation_error(t.where() + ": target must lie between 0 and 1");
      }
      s.targets_bp.push_back(bp);
    }
    if (s.targets_bp.empty()) {
      throw validation_error(v->where() + ": targets must not be empty");
    }
  }

  s.topology = Topology::from_document(root);

  const toml::Value* demands = root.find("demands");
  if (!demands || demands->as_array().empty()) {
    throw validation_error(std::string(*doc.source_name) + ": no demands");
  }
  std::set<std::string> ids;
  for (const toml::Value& entry : demands->as_array()) {
    Demand d = parse_demand(entry);
    if (!ids.insert(d.id).second) {
      throw validation_error(entry.where() + ": duplicate demand id '" + d.id + "'");
    }
    validate_demand(d, s, entry.where());
    s.demands.push_back(std::move(d));
  }

  if (const toml::Value* v = root.find("coding_groups")) {
    parse_coding_groups(*v, s);
  }
  return s;
}

Scenario parse_scenario_text(std::string_view text, std::string_view source_name) {
  return parse_scenario(toml::parse(text, source_name));
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(toml::parse_file(path));
}

}  // namespace eonplan
