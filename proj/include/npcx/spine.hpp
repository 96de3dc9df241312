#pragma once

// The spine of a 2-complex: a bipartite graph with one vertex per edge
// cell (its barycenter) and one per face cell, and one spine edge per
// (face, slot) pair, oriented from the face barycenter to the
// barycenter of the edge in that slot.
//
// A spanning forest is fixed deterministically (breadth first from the
// lexicographically least edge-barycenter, neighbors in sorted order),
// and the non-tree edges, sorted by (face id, slot), form a basis of
// H_1 of the spine.
//
// Vertex links map into the spine: the link node of an edge-end goes to
// that edge's barycenter, and the link edge of corner (f, t) crosses
// spine edges (f, t) and (f, t+1) through the face barycenter. Loops in
// a link therefore have H_1 classes in the spine, expressed in the
// non-tree basis.

#include <string>
#include <vector>

#include "npcx/link.hpp"

namespace npcx {

struct SpineVertex {
  bool is_face = false;
  int cell = -1;  // edge index or face index in the complex
  std::string id;
};

struct SpineEdge {
  int from = -1;  // face-barycenter vertex
  int to = -1;    // edge-barycenter vertex
  int face = -1;
  int slot = -1;
};

class SpineGraph {
 public:
  std::vector<SpineVertex> vertices;
  std::vector<SpineEdge> edges;
  std::vector<bool> in_tree;
  std::vector<int> basis;          // basis position -> spine edge index
  std::vector<int> nontree_index;  // spine edge index -> basis position or -1

  int edge_vertex(int edge_cell) const { return edge_vertex_.at(edge_cell); }
  int face_vertex(int face_cell) const { return face_vertex_.at(face_cell); }
  int spine_edge(int face, int slot) const;

  int h1_rank() const { return static_cast<int>(basis.size()); }
  int components() const { return components_; }

 private:
  friend SpineGraph build_spine(const PE2Complex& c);
  std::vector<int> edge_vertex_;
  std::vector<int> face_vertex_;
  std::vector<std::vector<int>> slot_edge_;  // face -> slot -> spine edge
  int components_ = 0;
};

SpineGraph build_spine(const PE2Complex& c);

// Signed crossing vector, in the non-tree basis, of the loop traced in
// the spine by a closed cycle in the link of one vertex. The cycle is a
// node sequence of the link graph: steps[i] is the link edge from
// nodes[i] to nodes[i+1] (cyclically), and forward[i] says whether that
// edge is traversed u -> v.
struct LinkCycle {
  std::vector<int> nodes;
  std::vector<int> steps;
  std::vector<bool> forward;
};

std::vector<Int> h1_class(const PE2Complex& c, const LinkGraph& lk,
                          const SpineGraph& sp, const LinkCycle& cycle);

// True when some edge cell underlies exactly one node of the cycle;
// such a cycle crosses that barycenter's star exactly once, so its
// crossing vector, hence its H_1 class, cannot vanish.
bool has_once_visited_edge_cell(const LinkGraph& lk, const LinkCycle& cycle);

// Local injectivity of the link-to-spine map: at every link node the
// incident corner half-edges must enter pairwise distinct spine edges.
bool link_spine_immersion(const PE2Complex& c, const LinkGraph& lk,
                          const SpineGraph& sp);

// An integer cochain supported on the non-tree edges.
struct SpineCocycle {
  std::vector<Int> values;  // one per basis element
};

Int cocycle_on_edge(const SpineGraph& sp, const SpineCocycle& z,
                    int spine_edge);

}  // namespace npcx
