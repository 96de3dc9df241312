#pragma once
// Curvature-safe glueing of extracted blocks onto a base complex.
//
// A chain base is a complex with a distinguished rose of loop edges
// whose link points are widely separated (the glueing locus). Each
// block -- the deleted-cell complex of a cover pipeline run -- carries
// its own separated rose of the same rank; the block is rescaled so
// the petal lengths match, its petals are relabelled to the locus
// labels, and the two complexes are amalgamated along the roses. The
// curvature certificate is recomputed from scratch after every
// glueing, and strictness is tracked when the base itself was strict.
#include <npcx/complex.hpp>
#include <npcx/link_metrics.hpp>
#include <npcx/report.hpp>

#include <string>
#include <vector>

namespace npcx {

struct ChainBase {
  PE2Complex complex;
  std::vector<std::string> rose;  // ids of loop edges at one vertex
  bool strict = false;            // the base's own certificate
};
// Squares-cut-along-diagonals mapping torus; the rose is the wedge of
// the k diagonals (length sqrt 2). Its girth is exactly 2pi, so chains
// over it certify non-positive curvature but never strictness.
ChainBase gamma_base(int k);
// A pipeline block as base; the rose is its separated petal set and
// strictness is recomputed on the deleted complex.
ChainBase pipeline_base(const CoverPipelineResult& r);

struct ChainStage {
  std::string name;  // id prefix of the cells this stage added
  int rank = 0;      // rose rank consumed by the glueing
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  NpcCertificate npc;  // certificate of the glued complex
};

struct ChainCertificate {
  PE2Complex complex;             // final glued complex
  std::vector<std::string> rose;  // the shared rose, unchanged ids
  std::vector<ChainStage> stages;
  bool npc_ok = false;
  bool strict_ok = false;  // base strict and every stage strict
};

// Glues the blocks one after another onto the distinguished rose.
// Rank mismatches and malformed loci throw ComplexError; failed
// curvature certificates are reported through npc_ok / strict_ok.
ChainCertificate chain_blocks(
    const ChainBase& base, const std::vector<const CoverPipelineResult*>& blocks);

}  // namespace npcx
