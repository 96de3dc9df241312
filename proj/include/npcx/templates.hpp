#pragma once

// Builders for the complexes the toolkit studies.
//
// build_xk(k): one vertex v, eight horizontal unit loops a_1..a_8, and
// for each level j = 1..k eight vertical unit loops n_1_j..n_4_j,
// p_1_j..p_4_j, filled with 16k equilateral triangles. Triangles come
// in two families per (i, j) with i = 1..8:
//
//   A_i_j with boundary n_m_j  a_i      p_m'_j^-1
//   B_i_j with boundary a_i+4  p_m'_j   n_m_j^-1     (a-index mod 8)
//
// where (m, m') = o8_endpoints(i) pairs the verticals so that each n_m
// feeds two A-triangles and each p_m' closes two B-triangles; the eight
// (n, p) pairs form an octagonal pattern over the a-loops.
//
// build_gamma_k(k): one vertex, unit loops t, a_1..a_k, and k unit
// squares S_i with boundary a_{i-1} a_i^-1 t^-1 a_i (a_0 = t). The
// loops x_i = a_{i-1} a_i^-1 generate a free fiber and conjugation by
// t^-1 acts on it by x_i -> x_1 x_2 .. x_i.
//
// build_gamma_k_subdivided(k): the same space with each square cut
// along its diagonal x_i (a new loop of length sqrt 2) into two right
// isosceles triangles. The x_i then live as edges in the complex,
// which lets other complexes be glued onto their wedge.
//
// build_pillow(): two equilateral triangles glued along their whole
// boundary; its links have girth 2pi/3, a deliberate curvature test
// failure.

#include <utility>

#include "npcx/complex.hpp"

namespace npcx {

// Vertical endpoints (m, m') of the i-th bigon, i = 1..8.
std::pair<int, int> o8_endpoints(int i);

PE2Complex build_xk(int k);
PE2Complex build_pillow();
PE2Complex build_gamma_k(int k);
PE2Complex build_gamma_k_subdivided(int k);

}  // namespace npcx
