#pragma once
// Symbolic presentations and segment graphs of groups.
//
// Free-by-free blocks, terminal pairs (a distorted subgroup inside a
// group, together with the enveloping amalgam square), and chains of
// blocks glued base-to-kernel assemble here into two parallel segment
// graphs of groups: the top row doubles the iterated amalgam of the
// blocks over the terminal group, the bottom row doubles the matching
// tower of direct products. Everything stays at the presentation level:
// relators are emitted mechanically and cross-checked by rank
// bookkeeping, never by solving word problems.
//
// The module also hosts the coordinate-level embedding g = ab |->
// ((a,b), theta(b)) into (A x| B) x C and the sampled intersection
// property tests it satisfies: the image meets the first factor exactly
// in A and the diagonal exactly in the image of B.
#include <npcx/folding.hpp>
#include <npcx/morse.hpp>
#include <npcx/words.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace npcx {

struct Presentation {
  struct Letter {
    int gen = 0;
    long long exp = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  using Word = std::vector<Letter>;

  std::string name;
  std::vector<std::string> gens;
  std::vector<Word> rels;

  std::string text() const;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};
Presentation parse_presentation(const std::string& text);

// One free-by-free block A x| B with named generators and verified
// action.
struct BlockSpec {
  std::string name;
  std::vector<std::string> kernel_names;
  std::vector<std::string> base_names;
  SemidirectAction action;
};
BlockSpec block_from_monodromy(const Monodromy& m, const std::string& name);
BlockSpec staircase_block(int k, const std::string& name);

// Presentation of A x| B: kernel and base generators plus one
// conjugation relator t x t^-1 phi_t(x)^-1 per (base, kernel) pair.
Presentation block_presentation(const BlockSpec& b);

// Terminal pair: a subgroup basis A_0 inside a group S, an enveloping
// group H_0 also containing A_0, a group T receiving both S and H_0,
// with the generator-level inclusion data. The intersection conditions
// the square satisfies are supplied by the construction that produced
// it; `note` records their status.
struct TerminalSpec {
  std::string name;
  std::string note;
  Presentation S, H0, T;
  std::vector<Presentation::Word> a0_in_S;   // basis of A_0 inside S
  std::vector<Presentation::Word> a0_in_H0;  // the same basis inside H_0
  std::vector<Presentation::Word> S_in_T;    // generator images of S in T
  std::vector<Presentation::Word> H0_in_T;   // generator images of H_0 in T
  double growth_exponent = 0.0;  // recorded distortion data for reports
};
// S = F_k x| F(t) for the staircase action; A_0 is the kernel, whose
// distortion is polynomial of degree k.
TerminalSpec terminal_staircase(int k);
// S is the extracted free-by-free group of a cover pipeline; A_0 is the
// kernel, whose distortion is exponential.
TerminalSpec terminal_monodromy(const Monodromy& m);
// Placeholder terminal carried as data only: the presentation and the
// growth exponent are recorded without any internal verification.
TerminalSpec terminal_snowflake(double alpha);

// Graph of groups whose underlying graph is a segment: edge i joins
// vertices i and i+1, and each edge group is free with an explicit
// basis mapped into both endpoint groups.
struct GraphOfGroups {
  struct Vertex {
    std::string label;
    Presentation group;
    std::string scale;  // symbolic metric tag "(sqrt2)^j"
  };
  struct Edge {
    std::string label;
    int rank = 0;
    std::vector<Presentation::Word> left_images;
    std::vector<Presentation::Word> right_images;
  };
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool valid() const;      // shape and inclusion words are well-formed
  bool symmetric() const;  // labels/ranks are mirror-symmetric
  // Relators of all vertex groups (generators namespaced "v<i>.") plus
  // one identification relator per edge-basis element.
  Presentation fundamental_presentation(const std::string& name) const;
};

struct RankBookkeeping {
  long long gens = 0;
  long long rels = 0;
  friend bool operator==(const RankBookkeeping&,
                         const RankBookkeeping&) = default;
};
RankBookkeeping expected_counts(const GraphOfGroups& g);
RankBookkeeping actual_counts(const Presentation& p);

// Chain assembly: blocks[i] glues its base to the previous kernel
// (block 0 to the terminal basis A_0), producing the iterated amalgams
// H_n and L_n, the product tower G_n, and the two doubles as segment
// graphs of groups with fundamental presentations C_n and D_n.
struct ChainAssembly {
  GraphOfGroups top, bottom;
  Presentation Hn, Ln, Gn, Cn, Dn;
  RankBookkeeping cn_expected, cn_actual;
  RankBookkeeping dn_expected, dn_actual;
};
ChainAssembly assemble_chain(const std::vector<BlockSpec>& blocks,
                             const TerminalSpec& terminal);

// Basis-to-basis injection B -> C, one codomain word per B generator;
// the images must fold to a free basis of the subgroup they generate.
struct ThetaMap {
  int domain_rank = 0;
  int codomain_rank = 0;
  std::vector<FreeWord> images;
};
bool theta_is_basis(const ThetaMap& t);

// Normal form of a word over the combined alphabet (kernel generators
// first, then base generators) as a semidirect pair.
SemidirectElement semidirect_normal_form(const FreeWord& combined,
                                         const SemidirectAction& action);

struct EmbeddedElement {
  SemidirectElement g;  // coordinate in A x| B
  FreeWord c;           // coordinate word in C
  friend bool operator==(const EmbeddedElement&,
                         const EmbeddedElement&) = default;
};
// ab |-> ((a,b), theta(b)); throws unless theta folds to a basis.
EmbeddedElement embed_phi(const SemidirectAction& action,
                          const SemidirectElement& g, const ThetaMap& theta);

struct SampleReport {
  std::string name;
  std::uint64_t seed = 0;
  int samples = 0;
  int violations = 0;
};
// Replays the product computation of the embedding in (A x| B) x C
// coordinates on random pairs.
SampleReport embed_homomorphism_test(const SemidirectAction& action,
                                     const ThetaMap& theta, int samples,
                                     std::uint64_t seed);
// First-factor intersection: the C coordinate is trivial exactly when
// the base part is.
SampleReport bass_factor_test(const SemidirectAction& action,
                              const ThetaMap& theta, int samples,
                              std::uint64_t seed);
// Diagonal intersection: pure base elements land on the diagonal, and
// elements with nontrivial kernel part never do.
SampleReport bass_diagonal_test(const SemidirectAction& action,
                                const ThetaMap& theta, int samples,
                                std::uint64_t seed);

}  // namespace npcx
