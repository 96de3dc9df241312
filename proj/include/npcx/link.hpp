#pragma once

// Vertex links.
//
// The link of a vertex v is a graph with one node per edge-end incident
// to v (a loop at v contributes both of its ends) and one link edge per
// face corner based at v. A corner between consecutive boundary sides
// s_t, s_{t+1} joins the end through which s_t arrives at v to the end
// through which s_{t+1} leaves, and is weighted by the corner angle (in
// units of pi).

#include <string>
#include <vector>

#include "npcx/complex.hpp"

namespace npcx {

struct LinkNode {
  int edge = -1;
  bool plus = true;  // true: head end of the edge, false: tail end
};

struct LinkEdge {
  int u = -1;
  int v = -1;
  Rat angle;  // units of pi
  int face = -1;
  int corner = -1;
};

struct LinkGraph {
  int vertex = -1;
  std::vector<LinkNode> nodes;
  std::vector<LinkEdge> edges;

  int node_index(int edge, bool plus) const;
  std::vector<std::vector<int>> incidence() const;  // node -> edge indices
};

LinkGraph build_link(const PE2Complex& c, int vertex);
std::vector<LinkGraph> build_links(const PE2Complex& c);

// "a_1+" style name of a link node.
std::string link_node_name(const PE2Complex& c, const LinkGraph& lk, int node);

// Graphviz rendering with named nodes and angle-labelled edges.
std::string link_dot(const PE2Complex& c, const LinkGraph& lk);

// The graph content of the DOT rendering, for round-trip checks.
struct LinkDotData {
  struct Arc {
    int u = -1;
    int v = -1;
    Rat angle;
    friend bool operator==(const Arc&, const Arc&) = default;
  };
  std::string title;
  std::vector<std::string> labels;  // node labels in node order
  std::vector<Arc> arcs;
  friend bool operator==(const LinkDotData&, const LinkDotData&) = default;
};
LinkDotData link_dot_data(const PE2Complex& c, const LinkGraph& lk);
// Reads back exactly the subset of DOT that link_dot emits.
LinkDotData parse_link_dot(const std::string& text);

}  // namespace npcx
