// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "eonplan/provisioning.hpp"
#include "eonplan/routing.hpp"
#include "eonplan/slices.hpp"
#include "eonplan/topology.hpp"

namespace eonplan {

// One demand's contribution to a coding group: its route pair, its full
// rate, and the share of that rate carried on the protection side. The
// share is what enters the XOR; the remainder is unprotected.
struct ProtectionSignal {
  std::string demand_id;
  Path working;
  Path protection;
  Rate rate;
  Rate protected_rate;
};

// Signals whose protection copies are XORed together. All members end at
// the same node. The encode node is where the members' protection paths
// merge; each member feeds it over its own prefix (the feeder) and one
// coded channel runs from there to the destination (the tail). A singleton
// group degenerates to plain 1+1: the tail is the whole protection path and
// the feeder is empty.
struct CodingGroup {
  std::vector<ProtectionSignal> members;
  std::string encode_node;
  Path tail;                  // encode_node .. destination
  std::vector<Path> feeders;  // parallel to members; source .. encode_node
};

// First node of the longest common suffix of the members' protection paths.
// Requires at least one member; members must share a destination.
std::string find_encode_node(std::span<const ProtectionSignal> members);

// Builds the group geometry. Validates that every member's route pair is
// simple, adjacent in the topology, endpoint-consistent, and that all
// members terminate at one destination. Throws validation errors naming the
// offending demand.
CodingGroup make_group(std::vector<ProtectionSignal> members, const Topology& t);

struct Feasibility {
  bool ok = true;
  std::string reason;
};

// Whether every member survives any single-link failure of its working path
// with an intact decode: the failure must not also take out the coded tail,
// any member's feeder, or another member's working path. Checked on the
// group geometry alone, treating every member as a full participant, so one
// answer covers every split of the protected shares.
Feasibility coding_feasible(const CodingGroup& g, const Topology& t);

// Spectrum the group occupies: one channel per member with a nonzero share
// along its feeder, plus the coded channel along the tail, sized by the
// largest share. Channel owners are "<demand>:feeder" and
// "<id,+id,..>:coded".
std::vector<ChannelRequest> coded_channel_requests(const CodingGroup& g,
                                                   const ModulationFormat& m,
                                                   const GridSpec& grid);

// Rate each member still receives at the destination when `failed_link` is
// cut, in member order. A member with an intact working path keeps its full
// rate; one whose working path is cut recovers its protected share iff the
// tail, every participating feeder, and every other participant's working
// path avoid the failed link.
std::vector<Rate> delivered_after_failure(const CodingGroup& g, const Topology& t,
                                          const std::string& failed_link);

// Minimum of delivered_after_failure over every link in the topology.
std::vector<Rate> worst_case_delivered(const CodingGroup& g, const Topology& t);

// Pairs signals that end at the same node, preferring the pair whose
// protection paths share the longest tail (at least one link) and breaking
// ties toward the lexicographically smallest demand-id pair. Pairs that fail
// coding_feasible are skipped. Unpaired signals become singleton groups.
// Groups come out pairs first (formation order), then singletons (input
// order); members keep their input order.
std::vector<CodingGroup> greedy_pair_groups(std::vector<ProtectionSignal> signals,
                                            const Topology& t);

}  // namespace eonplan
