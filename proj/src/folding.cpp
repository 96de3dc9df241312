#include <npcx/folding.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace npcx {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

FoldResult fold_subgroup(int ambient_rank, const std::vector<FreeWord>& words) {
  if (ambient_rank < 0)
    throw std::invalid_argument("fold_subgroup: negative ambient rank");

  // Wedge of circles at vertex 0, one circle per word, one edge per
  // letter, oriented along the positive reading of its generator.
  struct Edge {
    int from, to, gen;
  };
  std::vector<Edge> edge_list;
  int next_vertex = 1;
  for (const FreeWord& w : words) {
    int cur = 0;
    long long remaining = w.length();
    for (const auto& run : w.runs()) {
      if (run.gen < 0 || run.gen >= ambient_rank)
        throw std::invalid_argument("fold_subgroup: letter outside alphabet");
      const long long reps = run.exp > 0 ? run.exp : -run.exp;
      for (long long r = 0; r < reps; ++r) {
        --remaining;
        const int nxt = remaining == 0 ? 0 : next_vertex++;
        if (run.exp > 0)
          edge_list.push_back({cur, nxt, run.gen});
        else
          edge_list.push_back({nxt, cur, run.gen});
        cur = nxt;
      }
    }
  }

  UnionFind uf(next_vertex);
  // Fold until every vertex has at most one outgoing and one incoming
  // edge per generator: conflicting edge pairs merge their far ends.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const Edge& e : edge_list) {
      const int u = uf.find(e.from), v = uf.find(e.to);
      auto [ito, inserted_o] = out.try_emplace({u, e.gen}, v);
      if (!inserted_o && ito->second != v) {
        uf.unite(ito->second, v);
        changed = true;
        break;
      }
      auto [iti, inserted_i] = in.try_emplace({v, e.gen}, u);
      if (!inserted_i && iti->second != u) {
        uf.unite(iti->second, u);
        changed = true;
        break;
      }
    }
  }

  std::set<int> vertex_set;
  std::set<std::tuple<int, int, int>> folded_edges;
  vertex_set.insert(uf.find(0));
  for (const Edge& e : edge_list) {
    const int u = uf.find(e.from), v = uf.find(e.to);
    vertex_set.insert(u);
    vertex_set.insert(v);
    folded_edges.insert({u, e.gen, v});
  }

  FoldResult res;
  res.vertices = static_cast<long long>(vertex_set.size());
  res.edges = static_cast<long long>(folded_edges.size());
  res.rank = res.edges - res.vertices + 1;
  res.basis = res.rank == static_cast<long long>(words.size());
  return res;
}

}  // namespace npcx
