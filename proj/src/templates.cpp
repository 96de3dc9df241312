#include "npcx/templates.hpp"

#include <stdexcept>
#include <string>

namespace npcx {

std::pair<int, int> o8_endpoints(int i) {
  if (i < 1 || i > 8) throw std::invalid_argument("o8_endpoints: i not in 1..8");
  int s = (i + 1) / 2;
  if (i % 2 == 1) return {s, s};
  return {s % 4 + 1, s};
}

PE2Complex build_xk(int k) {
  if (k < 1) throw std::invalid_argument("build_xk: k must be >= 1");
  PE2Complex c;
  int v = c.add_vertex("v");
  std::vector<int> a(9, -1);
  for (int i = 1; i <= 8; ++i) {
    std::string id = "a_" + std::to_string(i);
    a[i] = c.add_edge(id, v, v, unit_length(), id);
  }
  // n[m][j], p[m][j] for m = 1..4, j = 1..k.
  std::vector<std::vector<int>> n(5, std::vector<int>(k + 1, -1));
  std::vector<std::vector<int>> p(5, std::vector<int>(k + 1, -1));
  for (int j = 1; j <= k; ++j)
    for (int m = 1; m <= 4; ++m) {
      std::string suf = "_" + std::to_string(m) + "_" + std::to_string(j);
      n[m][j] = c.add_edge("n" + suf, v, v, unit_length(), "n" + suf);
      p[m][j] = c.add_edge("p" + suf, v, v, unit_length(), "p" + suf);
    }
  const std::vector<Rat> third(3, Rat(1, 3));
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= 8; ++i) {
      auto [m, mp] = o8_endpoints(i);
      std::string suf = "_" + std::to_string(i) + "_" + std::to_string(j);
      c.add_face("A" + suf, ShapeTag::EquilateralTriangle,
                 {{n[m][j], true}, {a[i], true}, {p[mp][j], false}}, third);
      int ih = i + 4 <= 8 ? i + 4 : i - 4;
      c.add_face("B" + suf, ShapeTag::EquilateralTriangle,
                 {{a[ih], true}, {p[mp][j], true}, {n[m][j], false}}, third);
    }
  c.validate();
  return c;
}

PE2Complex build_pillow() {
  PE2Complex c;
  int u1 = c.add_vertex("u1");
  int u2 = c.add_vertex("u2");
  int u3 = c.add_vertex("u3");
  int e1 = c.add_edge("e1", u1, u2, unit_length(), "e1");
  int e2 = c.add_edge("e2", u2, u3, unit_length(), "e2");
  int e3 = c.add_edge("e3", u3, u1, unit_length(), "e3");
  const std::vector<Rat> third(3, Rat(1, 3));
  c.add_face("front", ShapeTag::EquilateralTriangle,
             {{e1, true}, {e2, true}, {e3, true}}, third);
  c.add_face("back", ShapeTag::EquilateralTriangle,
             {{e1, true}, {e2, true}, {e3, true}}, third);
  c.validate();
  return c;
}

PE2Complex build_gamma_k(int k) {
  if (k < 1) throw std::invalid_argument("build_gamma_k: k must be >= 1");
  PE2Complex c;
  int v = c.add_vertex("v");
  int t = c.add_edge("t", v, v, unit_length(), "t");
  std::vector<int> a(k + 1, -1);
  a[0] = t;
  for (int i = 1; i <= k; ++i) {
    std::string id = "a_" + std::to_string(i);
    a[i] = c.add_edge(id, v, v, unit_length(), id);
  }
  const std::vector<Rat> half(4, Rat(1, 2));
  for (int i = 1; i <= k; ++i)
    c.add_face("S_" + std::to_string(i), ShapeTag::UnitSquare,
               {{a[i - 1], true}, {a[i], false}, {t, false}, {a[i], true}},
               half);
  c.validate();
  return c;
}

PE2Complex build_gamma_k_subdivided(int k) {
  if (k < 1)
    throw std::invalid_argument("build_gamma_k_subdivided: k must be >= 1");
  PE2Complex c;
  int v = c.add_vertex("v");
  int t = c.add_edge("t", v, v, unit_length(), "t");
  std::vector<int> a(k + 1, -1), x(k + 1, -1);
  a[0] = t;
  for (int i = 1; i <= k; ++i) {
    std::string id = "a_" + std::to_string(i);
    a[i] = c.add_edge(id, v, v, unit_length(), id);
  }
  for (int i = 1; i <= k; ++i) {
    std::string id = "x_" + std::to_string(i);
    x[i] = c.add_edge(id, v, v, sqrt2_length(), id);
  }
  // Each square S_i is cut along x_i = a_{i-1} a_i^-1 into two right
  // isosceles triangles; the right angle sits between the unit legs.
  for (int i = 1; i <= k; ++i) {
    std::string suf = std::to_string(i);
    c.add_face("S_" + suf + "_legs", ShapeTag::GeneralConvexPolygon,
               {{a[i - 1], true}, {a[i], false}, {x[i], false}},
               {Rat(1, 2), Rat(1, 4), Rat(1, 4)});
    c.add_face("S_" + suf + "_hyp", ShapeTag::GeneralConvexPolygon,
               {{a[i], true}, {x[i], true}, {t, false}},
               {Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  }
  c.validate();
  return c;
}

}  // namespace npcx
