#pragma once

// Metric certificates on vertex links.
//
// Curvature test: a piecewise-euclidean complex is non-positively
// curved when every vertex link has girth at least 2pi, where cycle
// lengths add up corner angles and only injective (simple) cycles
// count. Girth is computed exactly: angles are rationals scaled to a
// common integer grid, and for every link edge we combine it with the
// shortest path between its ends that avoids that one edge instance
// (self-loops and parallel edges are their own short cycles).

#include <optional>
#include <vector>

#include "npcx/link.hpp"

namespace npcx {

struct GirthResult {
  bool has_cycle = false;
  Rat girth;  // units of pi, meaningful only when has_cycle
};

GirthResult shortest_injective_cycle(const LinkGraph& lk);

bool link_connected(const LinkGraph& lk);
bool link_bipartite(const LinkGraph& lk);

// Fewest link edges between two nodes, -1 if unreachable.
int link_hop_distance(const LinkGraph& lk, int from_node, int to_node);

struct VertexGirth {
  int vertex = -1;
  bool has_cycle = false;
  Rat girth;
};

struct NpcCertificate {
  bool pass = false;    // every link girth >= 2pi
  bool strict = false;  // every link girth > 2pi (or acyclic)
  std::vector<VertexGirth> links;
};

NpcCertificate check_npc(const PE2Complex& c);

// A rose is a set of loop edges at one common vertex. The separation
// certificate asks every pair of its 2r link points to be at least
// min_hops link edges apart; with all-pi/3 corners, 6 hops is angular
// distance 2pi, which makes the wedge locally convex with room to
// spare.
struct RoseSeparation {
  bool pass = false;
  int vertex = -1;
  int min_hops = -1;  // smallest pairwise hop distance, -1 if some pair
                      // is disconnected (counts as separated)
  std::vector<int> nodes;  // the link points examined
};

RoseSeparation check_rose_separation(const PE2Complex& c,
                                     const std::vector<int>& rose_edges,
                                     int min_hops = 6);

}  // namespace npcx
