// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eonplan/topology.hpp"

namespace eonplan {

// Spectrum wanted by one optical channel along a fixed route. A zero demand
// (an unprotected remainder) is legal and allocates nothing, as is a
// zero-link path (a channel that never leaves its node).
struct ChannelRequest {
  std::string owner;
  Path path;
  int slice_demand = 0;
};

struct Allocation {
  int64_t id = -1;
  std::string owner;
  std::vector<std::string> links;
  int start = 0;
  int count = 0;

  bool empty() const { return count == 0 || links.empty(); }
};

// Per-link slice occupancy. Enforces the flexgrid constraints: a channel
// gets one contiguous range of slice indices, the same range on every link
// of its path, and no slice is shared. Single-writer; clone per optimizer
// worker instead of sharing.
class SpectrumState {
 public:
  explicit SpectrumState(const Topology& t);

  // Lowest-start contiguous window free on every link of the path.
  // Throws infeasible when blocked, naming the most occupied link.
  Allocation assign_first_fit(const ChannelRequest& request);

  // Frees a previous allocation. Empty allocations release trivially.
  void release(const Allocation& allocation);

  int link_usage(const std::string& link_id) const;
  int link_capacity(const std::string& link_id) const;

  // Owner of one slice, if occupied.
  std::optional<std::string> slice_owner(const std::string& link_id, int slice) const;

  const Topology& topology() const { return *topology_; }

 private:
  struct LinkGrid {
    std::vector<int64_t> owner_by_slice;  // -1 == free
  };

  const LinkGrid& grid(const std::string& link_id) const;

  const Topology* topology_;
  std::map<std::string, LinkGrid> grids_;
  std::map<int64_t, Allocation> active_;
  int64_t next_id_ = 0;
};

// "link,occupied,total" rows for every link, in topology order.
std::string usage_csv(const SpectrumState& state);

}  // namespace eonplan
