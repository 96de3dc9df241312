#include "npcx/covering.hpp"

#include <algorithm>
#include <set>

namespace npcx {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<std::vector<Int>> essential_classes(
    const PE2Complex& c, const LinkGraph& lk, const SpineGraph& sp,
    const std::vector<LinkCycle>& cycles) {
  std::set<std::vector<Int>> canon;
  for (const LinkCycle& cyc : cycles) {
    std::vector<Int> cls = h1_class(c, lk, sp, cyc);
    auto first = std::find_if(cls.begin(), cls.end(),
                              [](const Int& x) { return x != 0; });
    if (first == cls.end())
      throw ComplexError(
          "essential_classes: a short link cycle is null-homologous in the "
          "spine; the cover construction does not apply");
    if (*first < 0)
      for (Int& x : cls) x = -x;
    canon.insert(std::move(cls));
  }
  return {canon.begin(), canon.end()};
}

std::vector<Int> choose_pairing(const std::vector<std::vector<Int>>& classes,
                                int rank) {
  std::vector<Int> lambda(rank, 0);
  std::vector<const std::vector<Int>*> done;
  for (const auto& cls : classes) {
    if (static_cast<int>(cls.size()) != rank)
      throw ComplexError("choose_pairing: class has wrong rank");
    if (dot(lambda, cls) != 0) {
      done.push_back(&cls);
      continue;
    }
    size_t idx = 0;
    while (idx < cls.size() && cls[idx] == 0) ++idx;
    if (idx == cls.size())
      throw ComplexError("choose_pairing: zero class");
    while (true) {
      lambda[idx] += 1;
      bool ok = dot(lambda, cls) != 0;
      for (const auto* prev : done)
        if (ok && dot(lambda, *prev) == 0) ok = false;
      if (ok) break;
    }
    done.push_back(&cls);
  }
  Int g = 0;
  for (const Int& x : lambda) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : lambda) x /= g;
  return lambda;
}

Int max_pairing(const std::vector<Int>& lambda,
                const std::vector<std::vector<Int>>& classes) {
  Int best = 0;
  for (const auto& cls : classes) {
    Int v = boost::multiprecision::abs(dot(lambda, cls));
    best = std::max(best, v);
  }
  return best;
}

Int walk_pairing_bound(const PE2Complex& c, const LinkGraph& lk,
                       const SpineGraph& sp, const SpineCocycle& z,
                       int max_edges) {
  const size_t ne = lk.edges.size();
  if (ne == 0) return 0;
  // Directed instances: 2 * ne states; state 2i runs u -> v, 2i+1 back.
  std::vector<Int> delta(2 * ne);
  for (size_t i = 0; i < ne; ++i) {
    const LinkEdge& e = lk.edges[i];
    int m = static_cast<int>(c.faces[e.face].sides.size());
    Int in = cocycle_on_edge(sp, z, sp.spine_edge(e.face, e.corner));
    Int out = cocycle_on_edge(sp, z, sp.spine_edge(e.face, (e.corner + 1) % m));
    delta[2 * i] = out - in;
    delta[2 * i + 1] = in - out;
  }
  auto state_end = [&](size_t s) {
    const LinkEdge& e = lk.edges[s / 2];
    return s % 2 == 0 ? e.v : e.u;
  };
  const auto inc = lk.incidence();
  // successors[s]: directed instances leaving the end of s, other than
  // the immediate reversal of s.
  std::vector<std::vector<int>> successors(2 * ne);
  for (size_t s = 0; s < 2 * ne; ++s) {
    int at = state_end(s);
    for (int ei : inc[at]) {
      const LinkEdge& e = lk.edges[ei];
      if (static_cast<size_t>(ei) == s / 2) continue;
      if (e.u == at) successors[s].push_back(2 * ei);
      if (e.v == at) successors[s].push_back(2 * ei + 1);
    }
  }
  std::vector<Int> hi = delta, lo = delta;
  Int best = 0;
  for (const Int& d : delta)
    best = std::max(best, Int(boost::multiprecision::abs(d)));
  for (int step = 2; step <= max_edges; ++step) {
    std::vector<Int> nhi(2 * ne), nlo(2 * ne);
    std::vector<bool> reach(2 * ne, false);
    for (size_t s = 0; s < 2 * ne; ++s)
      for (int t : successors[s]) {
        Int h = hi[s] + delta[t];
        Int l = lo[s] + delta[t];
        if (!reach[t]) {
          reach[t] = true;
          nhi[t] = h;
          nlo[t] = l;
        } else {
          nhi[t] = std::max(nhi[t], h);
          nlo[t] = std::min(nlo[t], l);
        }
      }
    for (size_t t = 0; t < 2 * ne; ++t)
      if (reach[t]) {
        best = std::max(best, nhi[t]);
        best = std::max(best, Int(-nlo[t]));
      }
    hi = std::move(nhi);
    lo = std::move(nlo);
  }
  return best;
}

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Int choose_sheet_count(const Int& m_bound, int levels,
                       const Int& pairing_max) {
  Int floor = std::max(Int((m_bound + 1) * levels), pairing_max);
  Int n = floor + 1;
  while (!is_prime(n)) ++n;
  return n;
}

std::string lift_id(const std::string& base_id, int sheet) {
  return base_id + "^(" + std::to_string(sheet) + ")";
}

PE2Complex build_branched_cover(const PE2Complex& base, const SpineGraph& sp,
                                const SpineCocycle& z, int sheets) {
  if (base.vertices.size() != 1)
    throw ComplexError(
        "build_branched_cover: the construction branches over a single "
        "vertex");
  if (sheets < 1) throw ComplexError("build_branched_cover: sheets < 1");
  PE2Complex cover;
  int v = cover.add_vertex(base.vertices[0].id);
  // edge_lift[e][p-1] = index of e^(p) in the cover.
  std::vector<std::vector<int>> edge_lift(base.edges.size());
  for (size_t e = 0; e < base.edges.size(); ++e)
    for (int p = 1; p <= sheets; ++p)
      edge_lift[e].push_back(cover.add_edge(lift_id(base.edges[e].id, p), v, v,
                                            base.edges[e].length,
                                            base.edges[e].id));
  for (size_t f = 0; f < base.faces.size(); ++f) {
    const FaceCell& face = base.faces[f];
    for (int p = 1; p <= sheets; ++p) {
      std::vector<DirectedEdgeRef> sides;
      sides.reserve(face.sides.size());
      for (size_t t = 0; t < face.sides.size(); ++t) {
        Int shift = cocycle_on_edge(
            sp, z, sp.spine_edge(static_cast<int>(f), static_cast<int>(t)));
        Int sheet0 = (Int(p - 1) + shift) % sheets;
        if (sheet0 < 0) sheet0 += sheets;
        int q = static_cast<int>(sheet0) + 1;
        sides.push_back({edge_lift[face.sides[t].edge][q - 1],
                         face.sides[t].forward});
      }
      cover.add_face(lift_id(face.id, p), face.shape, std::move(sides),
                     face.angles);
    }
  }
  cover.validate();
  return cover;
}

bool cover_counts_ok(const PE2Complex& base, const PE2Complex& cover,
                     int sheets) {
  return cover.vertices.size() == base.vertices.size() &&
         cover.edges.size() == base.edges.size() * sheets &&
         cover.faces.size() == base.faces.size() * sheets;
}

namespace {

// Splits "<base>^(p)" into its base id and sheet; false if not a lift id.
bool split_lift(const std::string& id, std::string& base_id, int& sheet) {
  auto open = id.rfind("^(");
  if (open == std::string::npos || id.back() != ')') return false;
  base_id = id.substr(0, open);
  try {
    sheet = std::stoi(id.substr(open + 2, id.size() - open - 3));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

bool deck_rotation_ok(const PE2Complex& cover, int sheets) {
  // The sheet rotation p -> p + 1 must permute edges compatibly with
  // every attaching map.
  std::vector<int> rot(cover.edges.size(), -1);
  for (size_t e = 0; e < cover.edges.size(); ++e) {
    std::string base_id;
    int p = 0;
    if (!split_lift(cover.edges[e].id, base_id, p)) return false;
    int target = cover.edge_index(lift_id(base_id, p % sheets + 1));
    if (target < 0) return false;
    rot[e] = target;
  }
  for (const FaceCell& f : cover.faces) {
    std::string base_id;
    int p = 0;
    if (!split_lift(f.id, base_id, p)) return false;
    int rf = cover.face_index(lift_id(base_id, p % sheets + 1));
    if (rf < 0) return false;
    const FaceCell& g = cover.faces[rf];
    if (g.sides.size() != f.sides.size()) return false;
    for (size_t t = 0; t < f.sides.size(); ++t)
      if (g.sides[t].edge != rot[f.sides[t].edge] ||
          g.sides[t].forward != f.sides[t].forward)
        return false;
  }
  return true;
}

bool projection_ok(const PE2Complex& base, const PE2Complex& cover) {
  // Forgetting sheets must send every lifted face onto its base face;
  // edge labels in the cover store the base edge id.
  for (const FaceCell& f : cover.faces) {
    std::string base_id;
    int p = 0;
    if (!split_lift(f.id, base_id, p)) return false;
    int bf = base.face_index(base_id);
    if (bf < 0) return false;
    const FaceCell& g = base.faces[bf];
    if (g.sides.size() != f.sides.size() || g.angles != f.angles) return false;
    for (size_t t = 0; t < f.sides.size(); ++t) {
      if (cover.edges[f.sides[t].edge].label != base.edges[g.sides[t].edge].id)
        return false;
      if (f.sides[t].forward != g.sides[t].forward) return false;
    }
  }
  return true;
}

}  // namespace npcx
