// SPDX-License-Identifier: Apache-2.0
#include "eonplan/topology.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace eonplan {

int Topology::node_index(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return -1;
  return static_cast<int>(it - nodes_.begin());
}

bool Topology::has_node(std::string_view id) const { return node_index(id) >= 0; }

const Link* Topology::find_link(std::string_view link_id) const {
  for (const Link& link : links_) {
    if (link.id == link_id) return &link;
  }
  return nullptr;
}

const Link* Topology::link_between(std::string_view a, std::string_view b) const {
  const Link* best = nullptr;
  for (const Link& link : links_) {
    if (link.joins(a, b) && (best == nullptr || link.id < best->id)) {
      best = &link;
    }
  }
  return best;
}

std::span<const int> Topology::incident_links(std::string_view node) const {
  int idx = node_index(node);
  if (idx < 0) {
    throw validation_error("unknown node '" + std::string(node) + "'");
  }
  return incident_[idx];
}

std::vector<std::string> Topology::links_on_path(std::span<const std::string> path) const {
  std::vector<std::string> out;
  for (const std::string& node : path) {
    if (!has_node(node)) {
      throw validation_error("path references unknown node '" + node + "'");
    }
  }
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const Link* link = link_between(path[i], path[i + 1]);
    if (link == nullptr) {
      throw validation_error("path step " + path[i] + " -> " + path[i + 1] +
                             " has no link");
    }
    out.push_back(link->id);
  }
  return out;
}

Topology Topology::build(std::vector<std::string> nodes, std::vector<Link> links,
                         bool multigraph) {
  Topology t;
  t.multigraph_ = multigraph;

  std::sort(nodes.begin(), nodes.end());
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i] == nodes[i + 1]) {
      throw validation_error("duplicate node id '" + nodes[i] + "'");
    }
  }
  if (nodes.empty()) {
    throw validation_error("topology has no nodes");
  }
  t.nodes_ = std::move(nodes);

  std::set<std::string> link_ids;
  std::set<std::pair<std::string, std::string>> pairs;
  for (Link& link : links) {
    if (link.a == link.b) {
      throw validation_error("link '" + link.id + "': endpoints must be distinct");
    }
    for (const std::string* end : {&link.a, &link.b}) {
      if (t.node_index(*end) < 0) {
        throw validation_error("link endpoint '" + *end + "' is not a declared node");
      }
    }
    if (link.slice_count < 1) {
      throw validation_error("link '" + link.id + "': slice count must be >= 1");
    }
    if (link.id.empty()) {
      link.id = std::min(link.a, link.b) + "-" + std::max(link.a, link.b);
    }
    if (!link_ids.insert(link.id).second) {
      throw validation_error("duplicate link id '" + link.id + "'");
    }
    auto pair = std::minmax(link.a, link.b);
    if (!pairs.insert({pair.first, pair.second}).second && !multigraph) {
      throw validation_error("parallel link between '" + link.a + "' and '" + link.b +
                             "' (set multigraph = true to allow)");
    }
  }
  t.links_ = std::move(links);

  t.incident_.assign(t.nodes_.size(), {});
  for (size_t li = 0; li < t.links_.size(); ++li) {
    t.incident_[t.node_index(t.links_[li].a)].push_back(static_cast<int>(li));
    t.incident_[t.node_index(t.links_[li].b)].push_back(static_cast<int>(li));
  }
  for (size_t ni = 0; ni < t.nodes_.size(); ++ni) {
    auto& inc = t.incident_[ni];
    const std::string& self = t.nodes_[ni];
    std::sort(inc.begin(), inc.end(), [&](int x, int y) {
      const Link& lx = t.links_[x];
      const Link& ly = t.links_[y];
      const std::string& nx = lx.a == self ? lx.b : lx.a;
      const std::string& ny = ly.a == self ? ly.b : ly.a;
      if (nx != ny) return nx < ny;
      return lx.id < ly.id;
    });
  }

  // Reachability from the first node decides the connectivity flag.
  std::vector<char> seen(t.nodes_.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int li : t.incident_[cur]) {
      const Link& link = t.links_[li];
      int other = t.node_index(t.nodes_[cur] == link.a ? link.b : link.a);
      if (!seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  t.connected_ = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  return t;
}

Topology Topology::from_document(const toml::Table& doc) {
  const toml::Value* nodes_value = doc.find("nodes");
  if (nodes_value == nullptr) {
    throw validation_error("scenario is missing 'nodes'");
  }
  std::vector<std::string> nodes = nodes_value->as_string_array();

  int default_slices = kDefaultSliceCount;
  if (const toml::Value* v = doc.find("default_link_slices")) {
    default_slices = static_cast<int>(v->as_int());
    if (default_slices < 1) {
      throw validation_error(v->where() + ": default_link_slices must be >= 1");
    }
  }
  bool multigraph = false;
  if (const toml::Value* v = doc.find("multigraph")) {
    multigraph = v->as_bool();
  }

  const toml::Value* links_value = doc.find("links");
  if (links_value == nullptr) {
    throw validation_error("scenario is missing 'links'");
  }
  std::vector<Link> links;
  for (const toml::Value& entry : links_value->as_array()) {
    const toml::Table& table = entry.as_table();
    Link link;
    link.slice_count = default_slices;
    for (const auto& [key, value] : table.entries()) {
      if (key == "a") {
        link.a = value.as_string();
      } else if (key == "b") {
        link.b = value.as_string();
      } else if (key == "slices") {
        link.slice_count = static_cast<int>(value.as_int());
      } else if (key == "id") {
        link.id = value.as_string();
      } else {
        throw validation_error(value.where() + ": unknown key '" + key + "' in link");
      }
    }
    if (link.a.empty() || link.b.empty()) {
      throw validation_error(entry.where() + ": link needs both 'a' and 'b'");
    }
    links.push_back(std::move(link));
  }

  try {
    return build(std::move(nodes), std::move(links), multigraph);
  } catch (const Error& e) {
    // Re-anchor structural complaints at the links entry for locatability.
    throw Error(e.kind(), links_value->where() + ": " + e.what());
  }
}

}  // namespace eonplan
