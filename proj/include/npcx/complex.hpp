#pragma once

// Piecewise-euclidean 2-complexes with exact combinatorial data.
//
// A complex is a list of vertices, edges and faces. Edges are oriented
// (tail -> head) and carry an exact length and a label; labels name the
// "species" of an edge (lifts in a cover share the label of the base
// edge) while ids are unique. Faces are attached along closed edge
// paths; the corner angles are exact rational multiples of pi.
//
// Corner convention: for a face with sides s_0 .. s_{m-1}, corner t sits
// between s_t and s_{t+1 mod m}, at the vertex where s_t arrives and
// s_{t+1} leaves. angles[t] is the interior angle of that corner, in
// units of pi.

#include <string>
#include <vector>

#include "npcx/length.hpp"
#include "npcx/rational.hpp"

namespace npcx {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ShapeTag {
  EquilateralTriangle,   // three unit sides, all angles pi/3
  UnitSquare,            // four unit sides, all angles pi/2
  GeneralConvexPolygon,  // angles in (0, pi), any positive side lengths
};

std::string shape_tag_str(ShapeTag t);
ShapeTag parse_shape_tag(const std::string& s);

struct DirectedEdgeRef {
  int edge = -1;
  bool forward = true;

  friend bool operator==(const DirectedEdgeRef& a, const DirectedEdgeRef& b) {
    return a.edge == b.edge && a.forward == b.forward;
  }
};

struct VertexCell {
  std::string id;
};

struct EdgeCell {
  std::string id;
  int tail = -1;
  int head = -1;
  Length length;
  std::string label;
};

struct FaceCell {
  std::string id;
  ShapeTag shape = ShapeTag::GeneralConvexPolygon;
  std::vector<DirectedEdgeRef> sides;
  std::vector<Rat> angles;  // units of pi, one per corner
};

class PE2Complex {
 public:
  std::vector<VertexCell> vertices;
  std::vector<EdgeCell> edges;
  std::vector<FaceCell> faces;

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int face_index(const std::string& id) const;

  int add_vertex(const std::string& id);
  int add_edge(const std::string& id, int tail, int head, Length len,
               const std::string& label);
  int add_face(const std::string& id, ShapeTag shape,
               std::vector<DirectedEdgeRef> sides, std::vector<Rat> angles);

  // Vertex at which the directed side arrives / from which it leaves.
  int side_head(const DirectedEdgeRef& d) const {
    const EdgeCell& e = edges[d.edge];
    return d.forward ? e.head : e.tail;
  }
  int side_tail(const DirectedEdgeRef& d) const {
    const EdgeCell& e = edges[d.edge];
    return d.forward ? e.tail : e.head;
  }

  // Checks all structural invariants; throws ComplexError with a
  // description of the first violation.
  void validate() const;

  long long euler_characteristic() const;
};

// A 1-subcomplex given by indices into a parent complex; must be closed
// under endpoints (validated by subcomplex_validate).
struct Subcomplex1 {
  std::vector<int> vertices;
  std::vector<int> edges;
};

void subcomplex_validate(const PE2Complex& c, const Subcomplex1& s);

// Glues a and b along isomorphic 1-subcomplexes. The isomorphism is
// positional: sa.vertices[i] is identified with sb.vertices[i] and
// sa.edges[i] with sb.edges[i] (orientation, label and length must
// match). Cells of a keep their ids; non-identified cells of b are
// prefixed with b_prefix to keep ids unique.
PE2Complex amalgamate(const PE2Complex& a, const PE2Complex& b,
                      const Subcomplex1& sa, const Subcomplex1& sb,
                      const std::string& b_prefix = "B:");

// Removes the open edges (and every face whose boundary uses one of
// them) while keeping all vertices.
PE2Complex delete_open_cells(const PE2Complex& c,
                             const std::vector<int>& edge_indices);

// Multiplies every edge length by the given factor. A non-unit factor
// retags unit shapes as general polygons (angles are scale-invariant).
PE2Complex scale(const PE2Complex& c, const Length& factor);

// Renames one edge (id and label); used when preparing a glueing locus.
void relabel_edge(PE2Complex& c, int edge, const std::string& new_id,
                  const std::string& new_label);

}  // namespace npcx
