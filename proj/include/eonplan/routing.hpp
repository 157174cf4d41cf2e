// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "eonplan/topology.hpp"

namespace eonplan {

// Working/protection route pair for 1+1 dedicated protection. The two paths
// never share a link; they may share intermediate nodes.
struct PathPair {
  Path working;
  Path protection;
};

// Minimum-hop simple path from src to dst. Among equal-hop paths the
// lexicographically smallest node sequence wins, so results are stable.
Path shortest_path(const Topology& t, const std::string& src, const std::string& dst);

// Link-disjoint path pair with minimum combined hop count, computed with the
// shortest-pair-of-paths method (successive shortest paths over a residual
// graph with reversed negative arcs). Survives trap topologies where removing
// the first shortest path disconnects the graph. The shorter path becomes the
// working route; ties break lexicographically.
PathPair disjoint_pair(const Topology& t, const std::string& src, const std::string& dst);

// True iff the two paths share no link.
bool verify_disjoint(const PathPair& pair, const Topology& t);

}  // namespace eonplan
