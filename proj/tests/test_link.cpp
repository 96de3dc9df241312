#include "doctest.h"

#include "npcx/link_metrics.hpp"
#include "npcx/templates.hpp"

using namespace npcx;

TEST_CASE("link sizes for the triangle templates") {
  for (int k : {1, 2, 3}) {
    PE2Complex x = build_xk(k);
    LinkGraph lk = build_link(x, 0);
    CHECK(lk.nodes.size() == static_cast<size_t>(16 * k + 16));
    CHECK(lk.edges.size() == static_cast<size_t>(48 * k));
    CHECK(link_connected(lk));
    CHECK(link_bipartite(lk));
  }
}

TEST_CASE("triangle template links have short essential cycles") {
  // The base complexes are deliberately not non-positively curved: the
  // girth of the vertex link is 4pi/3, realized by four-corner cycles.
  for (int k : {1, 2}) {
    PE2Complex x = build_xk(k);
    GirthResult g = shortest_injective_cycle(build_link(x, 0));
    REQUIRE(g.has_cycle);
    CHECK(g.girth == Rat(4, 3));
    CHECK(!check_npc(x).pass);
  }
}

TEST_CASE("pillow fails the curvature test with a corner bigon") {
  PE2Complex p = build_pillow();
  NpcCertificate cert = check_npc(p);
  CHECK(!cert.pass);
  for (const auto& v : cert.links) {
    REQUIRE(v.has_cycle);
    CHECK(v.girth == Rat(2, 3));
  }
}

TEST_CASE("square mapping-torus templates sit exactly at the threshold") {
  for (int k : {1, 2, 3}) {
    NpcCertificate plain = check_npc(build_gamma_k(k));
    CHECK(plain.pass);
    CHECK(!plain.strict);
    CHECK(plain.links[0].girth == Rat(2));

    // Cutting squares along diagonals subdivides link edges metrically,
    // so the certificate is unchanged.
    NpcCertificate sub = check_npc(build_gamma_k_subdivided(k));
    CHECK(sub.pass);
    CHECK(!sub.strict);
    CHECK(sub.links[0].girth == Rat(2));
  }
}

TEST_CASE("complex without faces passes strictly") {
  PE2Complex c;
  int v1 = c.add_vertex("v1");
  int v2 = c.add_vertex("v2");
  c.add_edge("e", v1, v2, unit_length(), "e");
  NpcCertificate cert = check_npc(c);
  CHECK(cert.pass);
  CHECK(cert.strict);
  CHECK(!cert.links[0].has_cycle);
}

TEST_CASE("opposite ends of the distinguished verticals are six apart") {
  for (int k : {1, 2, 3}) {
    PE2Complex x = build_xk(k);
    LinkGraph lk = build_link(x, 0);
    for (int j = 1; j <= k; ++j) {
      int e = x.edge_index("n_1_" + std::to_string(j));
      REQUIRE(e >= 0);
      int plus = lk.node_index(e, true);
      int minus = lk.node_index(e, false);
      CHECK(link_hop_distance(lk, plus, minus) >= 6);
    }
  }
}

TEST_CASE("rose separation certificate") {
  PE2Complex x = build_xk(2);
  // In the base complex the two distinguished verticals share horizontal
  // neighbors, so their wedge is far from six-separated.
  std::vector<int> rose{x.edge_index("n_1_1"), x.edge_index("n_1_2")};
  RoseSeparation rep = check_rose_separation(x, rose, 6);
  CHECK(!rep.pass);
  CHECK(rep.min_hops == 2);

  CHECK_THROWS_AS(
      check_rose_separation(build_pillow(), {0}, 6), ComplexError);
}

TEST_CASE("link dot export names ends") {
  PE2Complex x = build_xk(1);
  LinkGraph lk = build_link(x, 0);
  std::string dot = link_dot(x, lk);
  CHECK(dot.find("a_1+") != std::string::npos);
  CHECK(dot.find("n_1_1-") != std::string::npos);
  CHECK(dot.find("1/3pi") != std::string::npos);
}
