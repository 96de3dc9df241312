#include "npcx/spine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace npcx {

int SpineGraph::spine_edge(int face, int slot) const {
  return slot_edge_.at(face).at(slot);
}

SpineGraph build_spine(const PE2Complex& c) {
  SpineGraph sp;
  sp.edge_vertex_.resize(c.edges.size());
  sp.face_vertex_.resize(c.faces.size());
  for (size_t e = 0; e < c.edges.size(); ++e) {
    sp.edge_vertex_[e] = static_cast<int>(sp.vertices.size());
    sp.vertices.push_back({false, static_cast<int>(e), "e:" + c.edges[e].id});
  }
  for (size_t f = 0; f < c.faces.size(); ++f) {
    sp.face_vertex_[f] = static_cast<int>(sp.vertices.size());
    sp.vertices.push_back({true, static_cast<int>(f), "f:" + c.faces[f].id});
  }
  sp.slot_edge_.resize(c.faces.size());
  for (size_t f = 0; f < c.faces.size(); ++f) {
    const FaceCell& face = c.faces[f];
    for (size_t t = 0; t < face.sides.size(); ++t) {
      sp.slot_edge_[f].push_back(static_cast<int>(sp.edges.size()));
      sp.edges.push_back({sp.face_vertex_[f], sp.edge_vertex_[face.sides[t].edge],
                          static_cast<int>(f), static_cast<int>(t)});
    }
  }

  // Adjacency with deterministic neighbor order.
  struct Arc {
    std::string other_id;
    std::string face_id;
    int slot;
    int edge;
    int other;
    bool operator<(const Arc& rhs) const {
      return std::tie(other_id, face_id, slot) <
             std::tie(rhs.other_id, rhs.face_id, rhs.slot);
    }
  };
  std::vector<std::vector<Arc>> adj(sp.vertices.size());
  for (size_t i = 0; i < sp.edges.size(); ++i) {
    const SpineEdge& e = sp.edges[i];
    const std::string& fid = c.faces[e.face].id;
    adj[e.from].push_back({sp.vertices[e.to].id, fid, e.slot,
                           static_cast<int>(i), e.to});
    adj[e.to].push_back({sp.vertices[e.from].id, fid, e.slot,
                         static_cast<int>(i), e.from});
  }
  for (auto& arcs : adj) std::sort(arcs.begin(), arcs.end());

  std::vector<int> order(sp.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    // Edge barycenters first, then lexicographic id.
    if (sp.vertices[a].is_face != sp.vertices[b].is_face)
      return !sp.vertices[a].is_face;
    return sp.vertices[a].id < sp.vertices[b].id;
  });

  sp.in_tree.assign(sp.edges.size(), false);
  std::vector<bool> visited(sp.vertices.size(), false);
  for (int root : order) {
    if (visited[root]) continue;
    ++sp.components_;
    visited[root] = true;
    std::deque<int> q{root};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Arc& arc : adj[u]) {
        if (visited[arc.other]) continue;
        visited[arc.other] = true;
        sp.in_tree[arc.edge] = true;
        q.push_back(arc.other);
      }
    }
  }

  std::vector<int> nontree;
  for (size_t i = 0; i < sp.edges.size(); ++i)
    if (!sp.in_tree[i]) nontree.push_back(static_cast<int>(i));
  std::sort(nontree.begin(), nontree.end(), [&](int a, int b) {
    const SpineEdge& ea = sp.edges[a];
    const SpineEdge& eb = sp.edges[b];
    return std::tie(c.faces[ea.face].id, ea.slot) <
           std::tie(c.faces[eb.face].id, eb.slot);
  });
  sp.basis = std::move(nontree);
  sp.nontree_index.assign(sp.edges.size(), -1);
  for (size_t i = 0; i < sp.basis.size(); ++i)
    sp.nontree_index[sp.basis[i]] = static_cast<int>(i);
  return sp;
}

namespace {

void check_cycle_shape(const LinkGraph& lk, const LinkCycle& cycle) {
  const size_t n = cycle.steps.size();
  if (n == 0 || cycle.nodes.size() != n || cycle.forward.size() != n)
    throw ComplexError("link cycle: inconsistent sizes");
  for (size_t i = 0; i < n; ++i) {
    const LinkEdge& e = lk.edges.at(cycle.steps[i]);
    int from = cycle.nodes[i];
    int to = cycle.nodes[(i + 1) % n];
    int eu = cycle.forward[i] ? e.u : e.v;
    int ev = cycle.forward[i] ? e.v : e.u;
    if (eu != from || ev != to)
      throw ComplexError("link cycle: step " + std::to_string(i) +
                         " does not join its nodes");
  }
}

}  // namespace

std::vector<Int> h1_class(const PE2Complex& c, const LinkGraph& lk,
                          const SpineGraph& sp, const LinkCycle& cycle) {
  check_cycle_shape(lk, cycle);
  std::vector<Int> cls(sp.h1_rank(), 0);
  auto add = [&](int spine_edge, int sign) {
    int b = sp.nontree_index[spine_edge];
    if (b >= 0) cls[b] += sign;
  };
  for (size_t i = 0; i < cycle.steps.size(); ++i) {
    const LinkEdge& e = lk.edges[cycle.steps[i]];
    int m = static_cast<int>(c.faces[e.face].sides.size());
    int in_edge = sp.spine_edge(e.face, e.corner);
    int out_edge = sp.spine_edge(e.face, (e.corner + 1) % m);
    // Traversing the corner u -> v runs against spine edge (f, t) and
    // along spine edge (f, t+1).
    if (cycle.forward[i]) {
      add(in_edge, -1);
      add(out_edge, +1);
    } else {
      add(out_edge, -1);
      add(in_edge, +1);
    }
  }
  return cls;
}

bool has_once_visited_edge_cell(const LinkGraph& lk, const LinkCycle& cycle) {
  std::map<int, int> count;
  for (int node : cycle.nodes) ++count[lk.nodes.at(node).edge];
  for (const auto& [cell, n] : count)
    if (n == 1) return true;
  return false;
}

bool link_spine_immersion(const PE2Complex& c, const LinkGraph& lk,
                          const SpineGraph& sp) {
  std::vector<std::vector<int>> images(lk.nodes.size());
  for (const LinkEdge& e : lk.edges) {
    int m = static_cast<int>(c.faces[e.face].sides.size());
    images[e.u].push_back(sp.spine_edge(e.face, e.corner));
    images[e.v].push_back(sp.spine_edge(e.face, (e.corner + 1) % m));
  }
  for (auto& im : images) {
    std::sort(im.begin(), im.end());
    if (std::adjacent_find(im.begin(), im.end()) != im.end()) return false;
  }
  return true;
}

Int cocycle_on_edge(const SpineGraph& sp, const SpineCocycle& z,
                    int spine_edge) {
  int b = sp.nontree_index.at(spine_edge);
  if (b < 0) return 0;
  return z.values.at(b);
}

}  // namespace npcx
