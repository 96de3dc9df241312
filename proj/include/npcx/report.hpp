#pragma once

// End-to-end cover pipeline and machine-readable run reports.
//
// run_cover_pipeline goes from the k-level triangle template to a
// verified branched cover: enumerate the short link cycles, pair their
// spine classes with a deterministically chosen cochain, take the
// smallest admissible prime sheet count, build the cover, certify
// curvature (link girth at least 8 corners of pi/3 each), pick and
// certify a separated rose of vertical petals, delete one horizontal
// edge to cut the directional circles into segments, and extract the
// verified level-by-level monodromy of the result.
//
// Reports are deterministic JSON documents (insertion-ordered keys, no
// timings, no addresses), so rerunning a pipeline must reproduce the
// report byte for byte; report_json/report_str are the single point of
// serialization for that comparison.

#include <string>
#include <vector>

#include <json.hpp>

#include "npcx/covering.hpp"
#include "npcx/link_metrics.hpp"
#include "npcx/morse.hpp"

namespace npcx {

struct CoverPipelineResult {
  int k = 0;
  PE2Complex base;
  PE2Complex cover;
  PE2Complex deleted;  // cover minus one horizontal edge and its faces

  // Pairing data.
  int short_cycle_count = 0;
  int class_count = 0;
  std::vector<Int> lambda;
  Int m_bound;      // no-backtrack walk bound on cochain sums
  Int pairing_max;  // largest |<lambda, class>|
  int sheets = 0;

  // Cover certificates.
  bool counts_ok = false;
  bool deck_ok = false;
  bool projection_ok = false;
  bool link_connected = false;
  bool link_bipartite = false;
  bool no_short_cycles = false;  // no injective link cycle of <= 6 edges
  bool circles_ok = false;       // middle circles lift to single 8N-circles
  NpcCertificate npc;            // metric girth certificate, must be strict
  Rat cover_girth;

  // Rose.
  std::vector<std::string> rose_ids;  // one vertical lift per level
  RoseSeparation rose;

  // Deleted complex.
  std::string deleted_edge;
  int kernel_rank = 0;  // surviving horizontal edges
  Int euler;            // should equal (1 - kernel_rank) * (1 - k)
  bool euler_ok = false;
  HeightCertificate height;  // directional parts must be segments
  MonodromyCertificate monodromy_cert;
  Monodromy monodromy;

  bool all_ok() const;
};

CoverPipelineResult run_cover_pipeline(int k);

// Insertion-ordered JSON document of everything above except the cell
// lists of the three complexes (sizes and certificates only).
nlohmann::ordered_json report_json(const CoverPipelineResult& r);
std::string report_str(const CoverPipelineResult& r);

}  // namespace npcx
