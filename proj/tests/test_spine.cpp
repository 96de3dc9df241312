#include "doctest.h"

#include <set>

#include "npcx/short_cycles.hpp"
#include "npcx/templates.hpp"

using namespace npcx;

namespace {

bool nonzero(const std::vector<Int>& v) {
  for (const Int& x : v)
    if (x != 0) return true;
  return false;
}

LinkGraph fan(int nodes, const std::vector<std::pair<int, int>>& arcs) {
  LinkGraph lk;
  for (int i = 0; i < nodes; ++i) lk.nodes.push_back({i, true});
  for (auto [u, v] : arcs) lk.edges.push_back({u, v, Rat(1, 3), 0, 0});
  return lk;
}

}  // namespace

TEST_CASE("spine counts and first homology rank") {
  PE2Complex x = build_xk(1);
  SpineGraph sp = build_spine(x);
  CHECK(sp.vertices.size() == 32);  // 16 edge + 16 face barycenters
  CHECK(sp.edges.size() == 48);
  CHECK(sp.components() == 1);
  CHECK(sp.h1_rank() == 17);  // 48 - 32 + 1

  PE2Complex x3 = build_xk(3);
  SpineGraph sp3 = build_spine(x3);
  CHECK(sp3.components() == 1);
  CHECK(sp3.h1_rank() ==
        static_cast<int>(sp3.edges.size() - sp3.vertices.size() + 1));
}

TEST_CASE("spanning forest is deterministic") {
  PE2Complex x = build_xk(2);
  SpineGraph a = build_spine(x);
  SpineGraph b = build_spine(x);
  CHECK(a.in_tree == b.in_tree);
  CHECK(a.basis == b.basis);
  size_t tree_edges = 0;
  for (bool t : a.in_tree) tree_edges += t;
  CHECK(tree_edges == a.vertices.size() - 1);
}

TEST_CASE("links map to the spine by an immersion") {
  for (const PE2Complex& c :
       {build_xk(1), build_xk(2), build_pillow(), build_gamma_k(2)}) {
    SpineGraph sp = build_spine(c);
    for (size_t v = 0; v < c.vertices.size(); ++v)
      CHECK(link_spine_immersion(c, build_link(c, static_cast<int>(v)), sp));
  }
}

TEST_CASE("cycle enumeration against hand counts") {
  // Triangle with a pendant self-loop.
  LinkGraph tri = fan(3, {{0, 1}, {1, 2}, {2, 0}});
  tri.edges.push_back({2, 2, Rat(1, 3), 0, 0});
  auto cycles = enumerate_short_cycles(tri, 6);
  CHECK(cycles.size() == 2);
  CHECK(cycles[0].steps.size() == 1);
  CHECK(cycles[1].steps.size() == 3);

  // Complete graph on four nodes: four triangles and three squares.
  LinkGraph k4 =
      fan(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(enumerate_short_cycles(k4, 3).size() == 4);
  CHECK(enumerate_short_cycles(k4, 4).size() == 7);

  // Two parallel edges plus a disjoint loop-free path: one bigon.
  LinkGraph par = fan(4, {{0, 1}, {0, 1}, {2, 3}});
  auto pc = enumerate_short_cycles(par, 6);
  CHECK(pc.size() == 1);
  CHECK(pc[0].steps.size() == 2);
}

TEST_CASE("short cycles of the template links are essential") {
  for (int k : {1, 2}) {
    PE2Complex x = build_xk(k);
    LinkGraph lk = build_link(x, 0);
    SpineGraph sp = build_spine(x);
    auto cycles = enumerate_short_cycles(lk, 6);
    size_t fours = 0;
    for (const LinkCycle& cyc : cycles) {
      size_t len = cyc.steps.size();
      CHECK((len == 4 || len == 6));
      if (len == 4) ++fours;
      CHECK(nonzero(h1_class(x, lk, sp, cyc)));
    }
    CHECK(fours == static_cast<size_t>(8 * k * (2 * k - 1)));
  }
}

TEST_CASE("pillow bigon is homologically essential") {
  PE2Complex p = build_pillow();
  SpineGraph sp = build_spine(p);
  CHECK(sp.h1_rank() == 2);
  LinkGraph lk = build_link(p, 0);
  auto cycles = enumerate_short_cycles(lk, 6);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].steps.size() == 2);
  CHECK(nonzero(h1_class(p, lk, sp, cycles[0])));
  CHECK(has_once_visited_edge_cell(lk, cycles[0]));
}

TEST_CASE("reversing a cycle negates its class") {
  PE2Complex x = build_xk(1);
  LinkGraph lk = build_link(x, 0);
  SpineGraph sp = build_spine(x);
  auto cycles = enumerate_short_cycles(lk, 4);
  REQUIRE(!cycles.empty());
  const LinkCycle& c = cycles.front();
  LinkCycle rev;
  size_t n = c.steps.size();
  rev.nodes.push_back(c.nodes[0]);
  for (size_t i = 1; i < n; ++i) rev.nodes.push_back(c.nodes[n - i]);
  for (size_t i = 0; i < n; ++i) {
    rev.steps.push_back(c.steps[n - 1 - i]);
    rev.forward.push_back(!c.forward[n - 1 - i]);
  }
  auto cls = h1_class(x, lk, sp, c);
  auto rcls = h1_class(x, lk, sp, rev);
  for (size_t i = 0; i < cls.size(); ++i) CHECK(cls[i] == -rcls[i]);
}
