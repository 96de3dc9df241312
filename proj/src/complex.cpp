#include "npcx/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace npcx {

std::string shape_tag_str(ShapeTag t) {
  switch (t) {
    case ShapeTag::EquilateralTriangle: return "triangle";
    case ShapeTag::UnitSquare: return "square";
    case ShapeTag::GeneralConvexPolygon: return "polygon";
  }
  throw ComplexError("shape_tag_str: unknown tag");
}

ShapeTag parse_shape_tag(const std::string& s) {
  if (s == "triangle") return ShapeTag::EquilateralTriangle;
  if (s == "square") return ShapeTag::UnitSquare;
  if (s == "polygon") return ShapeTag::GeneralConvexPolygon;
  throw ComplexError("parse_shape_tag: unknown tag '" + s + "'");
}

namespace {

template <typename Cell>
int find_by_id(const std::vector<Cell>& cells, const std::string& id) {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].id == id) return static_cast<int>(i);
  return -1;
}

}  // namespace

int PE2Complex::vertex_index(const std::string& id) const {
  return find_by_id(vertices, id);
}
int PE2Complex::edge_index(const std::string& id) const {
  return find_by_id(edges, id);
}
int PE2Complex::face_index(const std::string& id) const {
  return find_by_id(faces, id);
}

int PE2Complex::add_vertex(const std::string& id) {
  vertices.push_back({id});
  return static_cast<int>(vertices.size()) - 1;
}

int PE2Complex::add_edge(const std::string& id, int tail, int head, Length len,
                         const std::string& label) {
  edges.push_back({id, tail, head, std::move(len), label});
  return static_cast<int>(edges.size()) - 1;
}

int PE2Complex::add_face(const std::string& id, ShapeTag shape,
                         std::vector<DirectedEdgeRef> sides,
                         std::vector<Rat> angles) {
  faces.push_back({id, shape, std::move(sides), std::move(angles)});
  return static_cast<int>(faces.size()) - 1;
}

void PE2Complex::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.id.empty()) throw ComplexError("vertex with empty id");
    if (!seen.insert(v.id).second)
      throw ComplexError("duplicate vertex id '" + v.id + "'");
  }
  seen.clear();
  const int nv = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.id.empty()) throw ComplexError("edge with empty id");
    if (!seen.insert(e.id).second)
      throw ComplexError("duplicate edge id '" + e.id + "'");
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
      throw ComplexError("edge '" + e.id + "' has a bad endpoint index");
    if (!e.length.positive())
      throw ComplexError("edge '" + e.id + "' has non-positive length");
    if (e.label.empty())
      throw ComplexError("edge '" + e.id + "' has an empty label");
  }
  seen.clear();
  const int ne = static_cast<int>(edges.size());
  for (const auto& f : faces) {
    if (f.id.empty()) throw ComplexError("face with empty id");
    if (!seen.insert(f.id).second)
      throw ComplexError("duplicate face id '" + f.id + "'");
    const size_t m = f.sides.size();
    if (m < 3)
      throw ComplexError("face '" + f.id + "' has fewer than 3 sides");
    if (f.angles.size() != m)
      throw ComplexError("face '" + f.id + "' has " +
                         std::to_string(f.angles.size()) + " angles for " +
                         std::to_string(m) + " sides");
    for (const auto& d : f.sides)
      if (d.edge < 0 || d.edge >= ne)
        throw ComplexError("face '" + f.id + "' references a bad edge index");
    for (size_t t = 0; t < m; ++t) {
      if (side_head(f.sides[t]) != side_tail(f.sides[(t + 1) % m]))
        throw ComplexError("face '" + f.id + "' boundary breaks at side " +
                           std::to_string(t));
    }
    Rat sum = 0;
    for (const auto& a : f.angles) {
      if (!(a > 0) || !(a < 1))
        throw ComplexError("face '" + f.id +
                           "' has a corner angle outside (0, pi)");
      sum += a;
    }
    if (sum != Rat(static_cast<long long>(m) - 2))
      throw ComplexError("face '" + f.id + "' angle sum is " + rat_str(sum) +
                         " pi, expected " + std::to_string(m - 2) + " pi");
    switch (f.shape) {
      case ShapeTag::EquilateralTriangle: {
        if (m != 3)
          throw ComplexError("face '" + f.id + "' tagged triangle with " +
                             std::to_string(m) + " sides");
        for (const auto& a : f.angles)
          if (a != Rat(1, 3))
            throw ComplexError("face '" + f.id +
                               "' tagged triangle has a non pi/3 angle");
        for (const auto& d : f.sides)
          if (edges[d.edge].length != unit_length())
            throw ComplexError("face '" + f.id +
                               "' tagged triangle has a non-unit side");
        break;
      }
      case ShapeTag::UnitSquare: {
        if (m != 4)
          throw ComplexError("face '" + f.id + "' tagged square with " +
                             std::to_string(m) + " sides");
        for (const auto& a : f.angles)
          if (a != Rat(1, 2))
            throw ComplexError("face '" + f.id +
                               "' tagged square has a non pi/2 angle");
        for (const auto& d : f.sides)
          if (edges[d.edge].length != unit_length())
            throw ComplexError("face '" + f.id +
                               "' tagged square has a non-unit side");
        break;
      }
      case ShapeTag::GeneralConvexPolygon:
        break;
    }
  }
}

long long PE2Complex::euler_characteristic() const {
  return static_cast<long long>(vertices.size()) -
         static_cast<long long>(edges.size()) +
         static_cast<long long>(faces.size());
}

void subcomplex_validate(const PE2Complex& c, const Subcomplex1& s) {
  const int nv = static_cast<int>(c.vertices.size());
  const int ne = static_cast<int>(c.edges.size());
  std::unordered_set<int> vset;
  for (int v : s.vertices) {
    if (v < 0 || v >= nv) throw ComplexError("subcomplex: bad vertex index");
    if (!vset.insert(v).second)
      throw ComplexError("subcomplex: repeated vertex index");
  }
  std::unordered_set<int> eset;
  for (int e : s.edges) {
    if (e < 0 || e >= ne) throw ComplexError("subcomplex: bad edge index");
    if (!eset.insert(e).second)
      throw ComplexError("subcomplex: repeated edge index");
    if (!vset.count(c.edges[e].tail) || !vset.count(c.edges[e].head))
      throw ComplexError("subcomplex: edge '" + c.edges[e].id +
                         "' has an endpoint outside the subcomplex");
  }
}

PE2Complex amalgamate(const PE2Complex& a, const PE2Complex& b,
                      const Subcomplex1& sa, const Subcomplex1& sb,
                      const std::string& b_prefix) {
  subcomplex_validate(a, sa);
  subcomplex_validate(b, sb);
  if (sa.vertices.size() != sb.vertices.size() ||
      sa.edges.size() != sb.edges.size())
    throw ComplexError("amalgamate: subcomplexes have different cell counts");

  // Positional identification of the b-side locus with the a-side locus.
  std::unordered_map<int, int> vmap;  // b vertex index -> a vertex index
  for (size_t i = 0; i < sb.vertices.size(); ++i)
    vmap[sb.vertices[i]] = sa.vertices[i];
  std::unordered_map<int, int> emap;  // b edge index -> a edge index
  for (size_t i = 0; i < sb.edges.size(); ++i) {
    const EdgeCell& ea = a.edges[sa.edges[i]];
    const EdgeCell& eb = b.edges[sb.edges[i]];
    if (ea.label != eb.label)
      throw ComplexError("amalgamate: label mismatch '" + ea.label + "' vs '" +
                         eb.label + "'");
    if (ea.length != eb.length)
      throw ComplexError("amalgamate: length mismatch on label '" + ea.label +
                         "'");
    if (vmap.at(eb.tail) != ea.tail || vmap.at(eb.head) != ea.head)
      throw ComplexError(
          "amalgamate: edge '" + eb.id +
          "' endpoints do not match its partner under the identification");
    emap[sb.edges[i]] = sa.edges[i];
  }

  PE2Complex out = a;
  for (size_t i = 0; i < b.vertices.size(); ++i) {
    int bi = static_cast<int>(i);
    if (vmap.count(bi)) continue;
    vmap[bi] = out.add_vertex(b_prefix + b.vertices[i].id);
  }
  for (size_t i = 0; i < b.edges.size(); ++i) {
    int bi = static_cast<int>(i);
    if (emap.count(bi)) continue;
    const EdgeCell& e = b.edges[i];
    emap[bi] = out.add_edge(b_prefix + e.id, vmap.at(e.tail), vmap.at(e.head),
                            e.length, e.label);
  }
  for (const auto& f : b.faces) {
    std::vector<DirectedEdgeRef> sides;
    sides.reserve(f.sides.size());
    for (const auto& d : f.sides) sides.push_back({emap.at(d.edge), d.forward});
    out.add_face(b_prefix + f.id, f.shape, std::move(sides), f.angles);
  }

  if (out.vertices.size() != a.vertices.size() + b.vertices.size() -
                                 sa.vertices.size() ||
      out.edges.size() != a.edges.size() + b.edges.size() - sa.edges.size() ||
      out.faces.size() != a.faces.size() + b.faces.size())
    throw ComplexError("amalgamate: cell count postcondition failed");
  out.validate();
  return out;
}

PE2Complex delete_open_cells(const PE2Complex& c,
                             const std::vector<int>& edge_indices) {
  std::unordered_set<int> dead(edge_indices.begin(), edge_indices.end());
  for (int e : dead)
    if (e < 0 || e >= static_cast<int>(c.edges.size()))
      throw ComplexError("delete_open_cells: bad edge index");

  PE2Complex out;
  out.vertices = c.vertices;
  std::vector<int> emap(c.edges.size(), -1);
  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (dead.count(static_cast<int>(i))) continue;
    emap[i] = static_cast<int>(out.edges.size());
    out.edges.push_back(c.edges[i]);
  }
  for (const auto& f : c.faces) {
    bool keep = true;
    for (const auto& d : f.sides)
      if (dead.count(d.edge)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    FaceCell nf = f;
    for (auto& d : nf.sides) d.edge = emap[d.edge];
    out.faces.push_back(std::move(nf));
  }
  out.validate();
  return out;
}

PE2Complex scale(const PE2Complex& c, const Length& factor) {
  if (!factor.positive())
    throw ComplexError("scale: factor must be positive");
  PE2Complex out = c;
  if (factor == unit_length()) return out;
  for (auto& e : out.edges) e.length = e.length * factor;
  // Angles are scale-invariant but the unit-side shape tags are not.
  for (auto& f : out.faces) f.shape = ShapeTag::GeneralConvexPolygon;
  out.validate();
  return out;
}

void relabel_edge(PE2Complex& c, int edge, const std::string& new_id,
                  const std::string& new_label) {
  if (edge < 0 || edge >= static_cast<int>(c.edges.size()))
    throw ComplexError("relabel_edge: bad edge index");
  c.edges[edge].id = new_id;
  c.edges[edge].label = new_label;
}

}  // namespace npcx
