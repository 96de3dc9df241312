#include "npcx/link_metrics.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <queue>

namespace npcx {

namespace {

// Common denominator of all corner angles, so path lengths become exact
// integers.
Int weight_scale(const LinkGraph& lk) {
  Int l = 1;
  for (const auto& e : lk.edges) l = boost::multiprecision::lcm(l, rat_den(e.angle));
  return l;
}

std::vector<Int> integer_weights(const LinkGraph& lk, const Int& scale) {
  std::vector<Int> w;
  w.reserve(lk.edges.size());
  for (const auto& e : lk.edges)
    w.push_back(rat_num(e.angle) * (scale / rat_den(e.angle)));
  return w;
}

// Shortest weighted path from s to t that never uses edge instance
// `banned`; returns unset when t is unreachable.
std::optional<Int> dijkstra_avoiding(const LinkGraph& lk,
                                     const std::vector<std::vector<int>>& inc,
                                     const std::vector<Int>& w, int s, int t,
                                     int banned) {
  const size_t n = lk.nodes.size();
  std::vector<Int> dist(n);
  std::vector<bool> reached(n, false), done(n, false);
  using Item = std::pair<Int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  reached[s] = true;
  pq.push({Int(0), s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == t) return d;
    for (int ei : inc[u]) {
      if (ei == banned) continue;
      const LinkEdge& e = lk.edges[ei];
      int v = e.u == u ? e.v : e.u;
      Int nd = d + w[ei];
      if (!reached[v] || nd < dist[v]) {
        dist[v] = nd;
        reached[v] = true;
        pq.push({nd, v});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GirthResult shortest_injective_cycle(const LinkGraph& lk) {
  GirthResult res;
  if (lk.edges.empty()) return res;
  const Int scale = weight_scale(lk);
  const std::vector<Int> w = integer_weights(lk, scale);
  const auto inc = lk.incidence();
  std::optional<Int> best;
  for (size_t i = 0; i < lk.edges.size(); ++i) {
    const LinkEdge& e = lk.edges[i];
    std::optional<Int> cand;
    if (e.u == e.v) {
      cand = w[i];
    } else {
      auto d = dijkstra_avoiding(lk, inc, w, e.u, e.v, static_cast<int>(i));
      if (d) cand = *d + w[i];
    }
    if (cand && (!best || *cand < *best)) best = *cand;
  }
  if (best) {
    res.has_cycle = true;
    res.girth = Rat(*best, scale);
  }
  return res;
}

bool link_connected(const LinkGraph& lk) {
  if (lk.nodes.empty()) return true;
  const auto inc = lk.incidence();
  std::vector<bool> seen(lk.nodes.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  size_t count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int ei : inc[u]) {
      const LinkEdge& e = lk.edges[ei];
      int v = e.u == u ? e.v : e.u;
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push_back(v);
      }
    }
  }
  return count == lk.nodes.size();
}

bool link_bipartite(const LinkGraph& lk) {
  std::vector<int> color(lk.nodes.size(), -1);
  const auto inc = lk.incidence();
  for (size_t start = 0; start < lk.nodes.size(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> q{static_cast<int>(start)};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int ei : inc[u]) {
        const LinkEdge& e = lk.edges[ei];
        int v = e.u == u ? e.v : e.u;
        if (v == u) return false;  // self-loop
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int link_hop_distance(const LinkGraph& lk, int from_node, int to_node) {
  if (from_node == to_node) return 0;
  const auto inc = lk.incidence();
  std::vector<int> dist(lk.nodes.size(), -1);
  dist[from_node] = 0;
  std::deque<int> q{from_node};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int ei : inc[u]) {
      const LinkEdge& e = lk.edges[ei];
      int v = e.u == u ? e.v : e.u;
      if (dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      if (v == to_node) return dist[v];
      q.push_back(v);
    }
  }
  return -1;
}

NpcCertificate check_npc(const PE2Complex& c) {
  NpcCertificate cert;
  cert.pass = true;
  cert.strict = true;
  const Rat two(2);
  for (size_t v = 0; v < c.vertices.size(); ++v) {
    LinkGraph lk = build_link(c, static_cast<int>(v));
    GirthResult g = shortest_injective_cycle(lk);
    cert.links.push_back({static_cast<int>(v), g.has_cycle, g.girth});
    if (g.has_cycle) {
      if (g.girth < two) cert.pass = false;
      if (g.girth <= two) cert.strict = false;
    }
  }
  if (!cert.pass) cert.strict = false;
  return cert;
}

RoseSeparation check_rose_separation(const PE2Complex& c,
                                     const std::vector<int>& rose_edges,
                                     int min_hops) {
  if (rose_edges.empty())
    throw ComplexError("check_rose_separation: empty rose");
  int vertex = c.edges.at(rose_edges[0]).tail;
  for (int e : rose_edges) {
    const EdgeCell& ec = c.edges.at(e);
    if (ec.tail != ec.head)
      throw ComplexError("check_rose_separation: edge '" + ec.id +
                         "' is not a loop");
    if (ec.tail != vertex)
      throw ComplexError("check_rose_separation: rose edges sit at "
                         "different vertices");
  }
  RoseSeparation rep;
  rep.vertex = vertex;
  LinkGraph lk = build_link(c, vertex);
  for (int e : rose_edges) {
    rep.nodes.push_back(lk.node_index(e, true));
    rep.nodes.push_back(lk.node_index(e, false));
  }
  rep.pass = true;
  for (size_t i = 0; i < rep.nodes.size(); ++i)
    for (size_t j = i + 1; j < rep.nodes.size(); ++j) {
      int d = link_hop_distance(lk, rep.nodes[i], rep.nodes[j]);
      if (d == -1) continue;  // separated components
      if (rep.min_hops == -1 || d < rep.min_hops) rep.min_hops = d;
      if (d < min_hops) rep.pass = false;
    }
  return rep;
}

}  // namespace npcx
