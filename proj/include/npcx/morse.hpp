#pragma once

// Height structure on the triangle-family complexes.
//
// Edges are horizontal (labels a_*) or vertical at a level j >= 1
// (labels n_*_j and p_*_j); every triangle has one horizontal side and
// two vertical sides of one level. Collapsing each level-j vertical to
// a letter t_j defines a map onto the free group on t_1..t_k whose
// kernel is generated by the horizontal loops.
//
// Within the vertex link, the corners between two vertical sides (the
// apexes) span two disjoint subgraphs per level: the plus part on the
// heads of the verticals and the minus part on their tails. When every
// such part is a point or a segment, the kernel is free on the
// horizontal loops and the level letters act on it by automorphisms;
// extract_monodromy computes those automorphisms by propagating kernel
// words along the plus parts (each apex relation moves one horizontal
// letter across) and then reading one image per horizontal loop off the
// minus apexes. A mirrored pass over the minus parts produces the
// inverse automorphisms, and both composites are verified on the basis
// together with every face relator.

#include <optional>

#include "npcx/link.hpp"
#include "npcx/spine.hpp"
#include "npcx/words.hpp"

namespace npcx {

// 0 for horizontal edges, level j >= 1 for verticals; throws on labels
// outside the a/n/p naming scheme.
int edge_letter(const EdgeCell& e);

struct DirectionalLink {
  int letter = 0;
  bool plus = true;
  std::vector<int> nodes;  // link node indices
  std::vector<int> edges;  // apex link edges spanned by those nodes
  bool connected = false;
  bool cycle = false;
  bool segment = false;  // a path, possibly a single node
};

std::vector<DirectionalLink> directional_links(const PE2Complex& c,
                                               const LinkGraph& lk);

struct HeightCertificate {
  bool levels_ok = false;    // vertical levels are exactly 1..k
  bool shapes_ok = false;    // every face is one horizontal + two verticals
  bool parts_ok = false;     // every directional part is a point or segment
  std::vector<DirectionalLink> parts;
  bool ok() const { return levels_ok && shapes_ok && parts_ok; }
};

HeightCertificate check_height(const PE2Complex& c);

// The directional parts traversed as link cycles (deterministic start
// and orientation), for complexes where every part is a circle: on the
// k-level template these are the 2k middle cycles of 8 apex corners,
// and in an N-sheeted cover each lifts to a single circle of 8N corners
// exactly when the pairing keeps them essential. Throws if some part is
// not a circle.
std::vector<LinkCycle> middle_cycles(const PE2Complex& c,
                                     const LinkGraph& lk);

struct Monodromy {
  std::vector<std::string> kernel_names;  // horizontal edge ids, sorted
  std::vector<std::string> base_names;    // t_1..t_k
  SemidirectAction action;
  // Kernel word carried by each vertical loop, sorted by edge id.
  std::vector<std::pair<std::string, FreeWord>> vertical_words;
};

struct MonodromyCertificate {
  bool inverses_ok = false;
  bool relators_ok = false;
  size_t relators_checked = 0;
  bool rose_normalized = false;  // every rose petal carries the empty word
};

// rose_edges: one vertical loop per level, the petal mapped to (1, t_j).
// Throws unless the height certificate holds and every verification
// passes; cert (if given) receives the detailed outcome.
Monodromy extract_monodromy(const PE2Complex& c,
                            const std::vector<int>& rose_edges,
                            MonodromyCertificate* cert = nullptr);

// The image of one edge loop: (u_h, 1) for horizontal h, (w_e, t_j) for
// a vertical e, as computed by the extraction.
SemidirectElement edge_image(const Monodromy& m, const PE2Complex& c,
                             int edge, bool forward);

std::string monodromy_str(const Monodromy& m);
Monodromy parse_monodromy(const std::string& text);

}  // namespace npcx
