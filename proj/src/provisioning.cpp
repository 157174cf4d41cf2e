// SPDX-License-Identifier: Apache-2.0
#include "eonplan/provisioning.hpp"

#include <algorithm>
#include <sstream>

namespace eonplan {

SpectrumState::SpectrumState(const Topology& t) : topology_(&t) {
  for (const Link& link : t.links()) {
    grids_[link.id].owner_by_slice.assign(link.slice_count, -1);
  }
}

const SpectrumState::LinkGrid& SpectrumState::grid(const std::string& link_id) const {
  auto it = grids_.find(link_id);
  if (it == grids_.end()) {
    throw validation_error("unknown link '" + link_id + "'");
  }
  return it->second;
}

Allocation SpectrumState::assign_first_fit(const ChannelRequest& request) {
  if (request.slice_demand < 0) {
    throw validation_error("channel '" + request.owner + "': negative slice demand");
  }
  std::vector<std::string> link_ids = topology_->links_on_path(request.path);
  if (request.slice_demand == 0 || link_ids.empty()) {
    return Allocation{-1, request.owner, {}, 0, 0};
  }

  std::vector<const LinkGrid*> path_grids;
  path_grids.reserve(link_ids.size());
  for (const std::string& id : link_ids) {
    path_grids.push_back(&grid(id));
  }
  // Continuity limits the usable range to the shortest link on the path.
  int usable = static_cast<int>(path_grids.front()->owner_by_slice.size());
  for (const LinkGrid* g : path_grids) {
    usable = std::min<int>(usable, static_cast<int>(g->owner_by_slice.size()));
  }

  auto window_free = [&](int start) {
    for (const LinkGrid* g : path_grids) {
      for (int s = start; s < start + request.slice_demand; ++s) {
        if (g->owner_by_slice[s] != -1) return false;
      }
    }
    return true;
  };

  for (int start = 0; start + request.slice_demand <= usable; ++start) {
    if (!window_free(start)) continue;
    Allocation alloc{next_id_++, request.owner, link_ids, start, request.slice_demand};
    for (const std::string& id : link_ids) {
      auto& slots = grids_[id].owner_by_slice;
      std::fill(slots.begin() + start, slots.begin() + start + request.slice_demand,
                alloc.id);
    }
    active_[alloc.id] = alloc;
    return alloc;
  }

  // Blocked: name the most occupied link on the path.
  const std::string* tightest = &link_ids.front();
  int tightest_free = -1;
  for (const std::string& id : link_ids) {
    const auto& slots = grid(id).owner_by_slice;
    int free = static_cast<int>(std::count(slots.begin(), slots.end(), -1));
    if (tightest_free < 0 || free < tightest_free) {
      tightest_free = free;
      tightest = &id;
    }
  }
  throw infeasible_error("spectrum blocked for channel '" + request.owner + "' (" +
                         std::to_string(request.slice_demand) +
                         " slices); tightest link '" + *tightest + "' has " +
                         std::to_string(tightest_free) + " free slices");
}

void SpectrumState::release(const Allocation& allocation) {
  if (allocation.empty()) return;
  auto it = active_.find(allocation.id);
  if (it == active_.end()) {
    throw validation_error("release of unknown allocation (owner '" + allocation.owner +
                           "')");
  }
  const Allocation& held = it->second;
  for (const std::string& id : held.links) {
    auto& slots = grids_[id].owner_by_slice;
    std::fill(slots.begin() + held.start, slots.begin() + held.start + held.count,
              static_cast<int64_t>(-1));
  }
  active_.erase(it);
}

int SpectrumState::link_usage(const std::string& link_id) const {
  const auto& slots = grid(link_id).owner_by_slice;
  return static_cast<int>(std::count_if(slots.begin(), slots.end(),
                                        [](int64_t owner) { return owner != -1; }));
}

int SpectrumState::link_capacity(const std::string& link_id) const {
  return static_cast<int>(grid(link_id).owner_by_slice.size());
}

std::optional<std::string> SpectrumState::slice_owner(const std::string& link_id,
                                                      int slice) const {
  const auto& slots = grid(link_id).owner_by_slice;
  if (slice < 0 || slice >= static_cast<int>(slots.size())) {
    throw validation_error("slice index out of range on link '" + link_id + "'");
  }
  int64_t owner = slots[slice];
  if (owner == -1) return std::nullopt;
  return active_.at(owner).owner;
}

std::string usage_csv(const SpectrumState& state) {
  std::ostringstream out;
  out << "link,occupied,total\n";
  for (const Link& link : state.topology().links()) {
    out << link.id << ',' << state.link_usage(link.id) << ',' << link.slice_count
        << '\n';
  }
  return out.str();
}

}  // namespace eonplan
