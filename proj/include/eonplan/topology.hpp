// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eonplan/toml.hpp"

namespace eonplan {

// A node path, as a sequence of node ids.
using Path = std::vector<std::string>;

struct Link {
  std::string id;
  std::string a;
  std::string b;
  int slice_count = 0;

  bool joins(std::string_view x, std::string_view y) const {
    return (a == x && b == y) || (a == y && b == x);
  }
};

// Undirected fiber network. Immutable once built; safe to share across
// threads.
class Topology {
 public:
  // Builds from in-memory pieces. Links without an id get "<a>-<b>" with the
  // endpoints in lexicographic order.
  static Topology build(std::vector<std::string> nodes, std::vector<Link> links,
                        bool multigraph = false);

  // Reads the `nodes` / `links` keys of a scenario document. Unrelated keys
  // are ignored here; scenario parsing handles strictness.
  static Topology from_document(const toml::Table& doc);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  bool has_node(std::string_view id) const;
  const Link* find_link(std::string_view link_id) const;

  // Lowest-id link joining a and b, or nullptr.
  const Link* link_between(std::string_view a, std::string_view b) const;

  // Neighbors of `node`, sorted by (neighbor id, link id); each entry is an
  // index into links().
  std::span<const int> incident_links(std::string_view node) const;

  bool connected() const { return connected_; }
  bool multigraph() const { return multigraph_; }

  // Link ids traversed by `path`, in order. Throws if consecutive nodes are
  // not adjacent or a node is unknown.
  std::vector<std::string> links_on_path(std::span<const std::string> path) const;

 private:
  std::vector<std::string> nodes_;       // sorted
  std::vector<Link> links_;              // insertion order
  std::vector<std::vector<int>> incident_;  // parallel to nodes_
  bool connected_ = true;
  bool multigraph_ = false;

  int node_index(std::string_view id) const;  // -1 when missing
};

// Default number of slices per fiber when a scenario does not say otherwise.
inline constexpr int kDefaultSliceCount = 320;

}  // namespace eonplan
