#include "doctest.h"

#include <filesystem>

#include "npcx/complex_io.hpp"
#include "npcx/templates.hpp"

using namespace npcx;

namespace {

PE2Complex one_triangle() {
  PE2Complex c;
  int v1 = c.add_vertex("v1");
  int v2 = c.add_vertex("v2");
  int v3 = c.add_vertex("v3");
  int e1 = c.add_edge("e1", v1, v2, unit_length(), "e1");
  int e2 = c.add_edge("e2", v2, v3, unit_length(), "e2");
  int e3 = c.add_edge("e3", v3, v1, unit_length(), "e3");
  c.add_face("f", ShapeTag::EquilateralTriangle,
             {{e1, true}, {e2, true}, {e3, true}},
             {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  return c;
}

}  // namespace

TEST_CASE("exact rational and length round trips") {
  CHECK(rat_str(Rat(1, 3)) == "1/3");
  CHECK(rat_str(Rat(-4, 2)) == "-2");
  CHECK(parse_rat("7/3") == Rat(7, 3));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);

  CHECK(length_str(unit_length()) == "1");
  CHECK(length_str(sqrt2_length()) == "1*sqrt2");
  CHECK(sqrt2_length() * sqrt2_length() == Length(Rat(2)));
  CHECK(Length(Rat(3), -1) == Length(Rat(3, 2), 1));  // 3/sqrt2 == (3/2)sqrt2
  CHECK(parse_length("5/2*sqrt2") == Length(Rat(5, 2), 1));
  CHECK_THROWS_AS(parse_length("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_length("2*sqrt3"), std::invalid_argument);
}

TEST_CASE("triangle template counts and validation") {
  for (int k : {1, 2, 3}) {
    PE2Complex x = build_xk(k);
    CHECK(x.vertices.size() == 1);
    CHECK(x.edges.size() == static_cast<size_t>(8 + 8 * k));
    CHECK(x.faces.size() == static_cast<size_t>(16 * k));
    CHECK(x.euler_characteristic() == 8 * k - 7);
    CHECK_NOTHROW(x.validate());
  }

  // Every vertical loop bounds exactly four triangles: two from each
  // family, entering through opposite ends.
  PE2Complex x = build_xk(2);
  for (const auto& e : x.edges) {
    if (e.id[0] != 'n' && e.id[0] != 'p') continue;
    int uses = 0;
    for (const auto& f : x.faces)
      for (const auto& d : f.sides)
        if (d.edge == x.edge_index(e.id)) ++uses;
    CHECK(uses == 4);
  }
}

TEST_CASE("bigon endpoint pattern") {
  CHECK(o8_endpoints(1) == std::pair<int, int>{1, 1});
  CHECK(o8_endpoints(2) == std::pair<int, int>{2, 1});
  CHECK(o8_endpoints(3) == std::pair<int, int>{2, 2});
  CHECK(o8_endpoints(4) == std::pair<int, int>{3, 2});
  CHECK(o8_endpoints(5) == std::pair<int, int>{3, 3});
  CHECK(o8_endpoints(6) == std::pair<int, int>{4, 3});
  CHECK(o8_endpoints(7) == std::pair<int, int>{4, 4});
  CHECK(o8_endpoints(8) == std::pair<int, int>{1, 4});
  // Each n feeds two bigons and each p closes two.
  std::vector<int> n_count(5, 0), p_count(5, 0);
  for (int i = 1; i <= 8; ++i) {
    auto [m, mp] = o8_endpoints(i);
    ++n_count[m];
    ++p_count[mp];
  }
  for (int m = 1; m <= 4; ++m) {
    CHECK(n_count[m] == 2);
    CHECK(p_count[m] == 2);
  }
}

TEST_CASE("validation rejects malformed complexes") {
  PE2Complex c = one_triangle();
  CHECK_NOTHROW(c.validate());

  SUBCASE("broken boundary") {
    c.faces[0].sides[1].forward = false;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("boundary breaks"),
                         ComplexError);
  }
  SUBCASE("angle sum off") {
    c.faces[0].angles = {Rat(1, 3), Rat(1, 3), Rat(1, 4)};
    c.faces[0].shape = ShapeTag::GeneralConvexPolygon;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("angle sum"),
                         ComplexError);
  }
  SUBCASE("angle out of range") {
    c.faces[0].angles = {Rat(3, 2), Rat(-1, 4), Rat(-1, 4)};
    c.faces[0].shape = ShapeTag::GeneralConvexPolygon;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("outside"),
                         ComplexError);
  }
  SUBCASE("duplicate edge id") {
    c.add_edge("e1", 0, 1, unit_length(), "e1");
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("duplicate edge"),
                         ComplexError);
  }
  SUBCASE("triangle tag with long side") {
    c.edges[2].length = Length(Rat(2));
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("non-unit"),
                         ComplexError);
  }
  SUBCASE("wrong angle count") {
    c.faces[0].angles.push_back(Rat(1, 3));
    CHECK_THROWS_AS(c.validate(), ComplexError);
  }
}

TEST_CASE("pillow is a sphere") {
  PE2Complex p = build_pillow();
  CHECK(p.vertices.size() == 3);
  CHECK(p.edges.size() == 3);
  CHECK(p.faces.size() == 2);
  CHECK(p.euler_characteristic() == 2);
}

TEST_CASE("square and subdivided square templates") {
  for (int k : {1, 2, 3}) {
    PE2Complex g = build_gamma_k(k);
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.size() == static_cast<size_t>(k + 1));
    CHECK(g.faces.size() == static_cast<size_t>(k));
    CHECK(g.euler_characteristic() == 0);

    PE2Complex gs = build_gamma_k_subdivided(k);
    CHECK(gs.vertices.size() == 1);
    CHECK(gs.edges.size() == static_cast<size_t>(2 * k + 1));
    CHECK(gs.faces.size() == static_cast<size_t>(2 * k));
    CHECK(gs.euler_characteristic() == 0);
    for (int i = 1; i <= k; ++i) {
      int xi = gs.edge_index("x_" + std::to_string(i));
      REQUIRE(xi >= 0);
      CHECK(gs.edges[xi].length == sqrt2_length());
    }
  }
}

TEST_CASE("serialization round trips byte for byte") {
  for (const PE2Complex& c :
       {build_xk(2), build_pillow(), build_gamma_k_subdivided(3)}) {
    std::string text = write_complex(c);
    PE2Complex back = parse_complex(text);
    CHECK(write_complex(back) == text);
    CHECK(back.vertices.size() == c.vertices.size());
    CHECK(back.edges.size() == c.edges.size());
    CHECK(back.faces.size() == c.faces.size());
  }

  auto path = std::filesystem::temp_directory_path() / "npcx_io_test.cx";
  PE2Complex c = build_xk(1);
  save_complex(c, path);
  PE2Complex back = load_complex(path);
  CHECK(write_complex(back) == write_complex(c));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(parse_complex("nonsense"), ComplexError);
  CHECK_THROWS_AS(parse_complex("pe2complex 1\nedge e a b l 1\n"),
                  ComplexError);
}

TEST_CASE("amalgamation glues along a shared one-complex") {
  PE2Complex a = one_triangle();
  PE2Complex b = one_triangle();
  // Share the edge e1 (and its endpoints v1, v2).
  Subcomplex1 sa{{0, 1}, {0}};
  Subcomplex1 sb{{0, 1}, {0}};
  PE2Complex glued = amalgamate(a, b, sa, sb);
  CHECK(glued.vertices.size() == 4);
  CHECK(glued.edges.size() == 5);
  CHECK(glued.faces.size() == 2);
  CHECK(glued.euler_characteristic() == 1);
  CHECK(glued.vertex_index("B:v3") >= 0);
  CHECK(glued.edge_index("B:e2") >= 0);
  CHECK(glued.face_index("B:f") >= 0);

  SUBCASE("label mismatch is rejected") {
    b.edges[0].label = "other";
    CHECK_THROWS_WITH_AS(amalgamate(a, b, sa, sb),
                         doctest::Contains("label mismatch"), ComplexError);
  }
  SUBCASE("length mismatch is rejected") {
    b.edges[0].length = Length(Rat(2));
    b.faces[0].shape = ShapeTag::GeneralConvexPolygon;
    CHECK_THROWS_WITH_AS(amalgamate(a, b, sa, sb),
                         doctest::Contains("length mismatch"), ComplexError);
  }
  SUBCASE("orientation mismatch is rejected") {
    std::swap(b.edges[0].tail, b.edges[0].head);
    b.faces[0].sides[0].forward = false;
    // b is still valid on its own, but e1 now runs v2 -> v1.
    CHECK_NOTHROW(b.validate());
    CHECK_THROWS_WITH_AS(amalgamate(a, b, sa, sb),
                         doctest::Contains("endpoints"), ComplexError);
  }
  SUBCASE("subcomplex must be closed under endpoints") {
    Subcomplex1 bad{{0}, {0}};
    CHECK_THROWS_WITH_AS(amalgamate(a, b, bad, bad),
                         doctest::Contains("outside the subcomplex"),
                         ComplexError);
  }
}

TEST_CASE("deleting open cells removes incident faces only") {
  PE2Complex x = build_xk(1);
  int a1 = x.edge_index("a_1");
  REQUIRE(a1 >= 0);
  PE2Complex y = delete_open_cells(x, {a1});
  CHECK(y.vertices.size() == 1);
  CHECK(y.edges.size() == 15);
  CHECK(y.faces.size() == 14);
  CHECK(y.edge_index("a_1") == -1);
  CHECK(y.face_index("A_1_1") == -1);  // used a_1 as its middle side
  CHECK(y.face_index("B_5_1") == -1);  // used a_1 as its leading side
  CHECK(y.face_index("A_2_1") >= 0);
  CHECK_NOTHROW(y.validate());
}

TEST_CASE("scaling multiplies lengths and drops unit tags") {
  PE2Complex g = build_gamma_k(2);
  PE2Complex s = scale(g, sqrt2_length());
  CHECK(s.edges[0].length == sqrt2_length());
  CHECK(s.faces[0].shape == ShapeTag::GeneralConvexPolygon);
  CHECK(s.euler_characteristic() == g.euler_characteristic());
  PE2Complex same = scale(g, unit_length());
  CHECK(write_complex(same) == write_complex(g));
}
