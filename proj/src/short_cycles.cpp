#include "npcx/short_cycles.hpp"

#include <algorithm>
#include <set>

namespace npcx {

namespace {

struct Enumerator {
  const LinkGraph& lk;
  const std::vector<std::vector<int>>& inc;
  int max_len;
  int root = 0;
  std::vector<int> path_nodes;
  std::vector<int> path_edges;
  std::vector<bool> on_path;
  std::vector<bool> edge_used;
  std::set<std::vector<int>> seen;
  std::vector<LinkCycle> out;

  Enumerator(const LinkGraph& g, const std::vector<std::vector<int>>& i,
             int ml)
      : lk(g), inc(i), max_len(ml), on_path(g.nodes.size(), false),
        edge_used(g.edges.size(), false) {}

  void record() {
    std::vector<int> fwd = path_edges;
    std::vector<int> bwd(fwd.rbegin(), fwd.rend());
    const std::vector<int>& key = std::min(fwd, bwd);
    if (!seen.insert(key).second) return;
    LinkCycle cyc;
    cyc.nodes = path_nodes;
    cyc.steps = path_edges;
    for (size_t i = 0; i < cyc.steps.size(); ++i) {
      const LinkEdge& e = lk.edges[cyc.steps[i]];
      int from = cyc.nodes[i];
      cyc.forward.push_back(e.u == from);
    }
    out.push_back(std::move(cyc));
  }

  void dfs(int u) {
    for (int ei : inc[u]) {
      if (edge_used[ei]) continue;
      const LinkEdge& e = lk.edges[ei];
      if (e.u == e.v) continue;  // handled as length-1 cycles upfront
      int v = e.u == u ? e.v : e.u;
      if (v == root) {
        if (path_edges.size() >= 1) {
          path_edges.push_back(ei);
          record();
          path_edges.pop_back();
        }
        continue;
      }
      if (v < root || on_path[v]) continue;
      if (static_cast<int>(path_edges.size()) + 2 > max_len) continue;
      path_nodes.push_back(v);
      path_edges.push_back(ei);
      on_path[v] = true;
      edge_used[ei] = true;
      dfs(v);
      on_path[v] = false;
      edge_used[ei] = false;
      path_nodes.pop_back();
      path_edges.pop_back();
    }
  }
};

}  // namespace

std::vector<LinkCycle> enumerate_short_cycles(const LinkGraph& lk,
                                              int max_len) {
  const auto inc = lk.incidence();
  Enumerator en(lk, inc, max_len);
  if (max_len >= 1) {
    for (size_t ei = 0; ei < lk.edges.size(); ++ei) {
      const LinkEdge& e = lk.edges[ei];
      if (e.u != e.v) continue;
      LinkCycle cyc;
      cyc.nodes = {e.u};
      cyc.steps = {static_cast<int>(ei)};
      cyc.forward = {true};
      en.out.push_back(std::move(cyc));
    }
  }
  if (max_len >= 2) {
    for (size_t r = 0; r < lk.nodes.size(); ++r) {
      en.root = static_cast<int>(r);
      en.path_nodes = {en.root};
      en.on_path.assign(lk.nodes.size(), false);
      en.on_path[en.root] = true;
      en.dfs(en.root);
    }
  }
  std::sort(en.out.begin(), en.out.end(),
            [](const LinkCycle& a, const LinkCycle& b) {
              if (a.steps.size() != b.steps.size())
                return a.steps.size() < b.steps.size();
              return a.steps < b.steps;
            });
  return en.out;
}

}  // namespace npcx
