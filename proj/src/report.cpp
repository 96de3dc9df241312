#include "npcx/report.hpp"

#include <algorithm>

#include "npcx/short_cycles.hpp"
#include "npcx/templates.hpp"

namespace npcx {

bool CoverPipelineResult::all_ok() const {
  return counts_ok && deck_ok && projection_ok && link_connected &&
         link_bipartite && no_short_cycles && circles_ok && npc.pass &&
         npc.strict &&
         rose.pass && euler_ok && height.ok() && monodromy_cert.inverses_ok &&
         monodromy_cert.relators_ok && monodromy_cert.rose_normalized;
}

CoverPipelineResult run_cover_pipeline(int k) {
  CoverPipelineResult r;
  r.k = k;
  r.base = build_xk(k);

  LinkGraph base_lk = build_link(r.base, 0);
  SpineGraph sp = build_spine(r.base);
  std::vector<LinkCycle> cycles = enumerate_short_cycles(base_lk, 6);
  r.short_cycle_count = static_cast<int>(cycles.size());
  // The pairing must also keep the 2k middle circles essential mod N,
  // so that each lifts to one long circle in the cover.
  for (LinkCycle& m : middle_cycles(r.base, base_lk))
    cycles.push_back(std::move(m));
  std::vector<std::vector<Int>> classes =
      essential_classes(r.base, base_lk, sp, cycles);
  r.class_count = static_cast<int>(classes.size());
  r.lambda = choose_pairing(classes, sp.h1_rank());
  SpineCocycle z{r.lambda};
  r.m_bound = walk_pairing_bound(r.base, base_lk, sp, z, 6);
  r.pairing_max = max_pairing(r.lambda, classes);
  r.sheets = static_cast<int>(
      to_i64(choose_sheet_count(r.m_bound, k, r.pairing_max)));

  r.cover = build_branched_cover(r.base, sp, z, r.sheets);
  r.counts_ok = cover_counts_ok(r.base, r.cover, r.sheets);
  r.deck_ok = deck_rotation_ok(r.cover, r.sheets);
  r.projection_ok = projection_ok(r.base, r.cover);

  LinkGraph cover_lk = build_link(r.cover, 0);
  r.link_connected = link_connected(cover_lk);
  r.link_bipartite = link_bipartite(cover_lk);
  r.no_short_cycles = enumerate_short_cycles(cover_lk, 6).empty();
  r.npc = check_npc(r.cover);
  if (!r.npc.links.empty() && r.npc.links[0].has_cycle)
    r.cover_girth = r.npc.links[0].girth;

  // Each directional circle of the base must lift to a single circle
  // of 8N corners; this is what the deletion later cuts into segments.
  r.circles_ok = true;
  for (const LinkCycle& cyc : middle_cycles(r.cover, cover_lk))
    if (cyc.steps.size() != 8 * static_cast<size_t>(r.sheets))
      r.circles_ok = false;

  // Rose: the first vertical of each level, lifted to sheets spread by
  // more than the walk bound so no short link path joins two petals.
  std::vector<int> rose_edges;
  for (int j = 1; j <= k; ++j) {
    Int sheet = (r.m_bound + 1) * j % r.sheets;
    int p = static_cast<int>(to_i64(sheet));
    if (p == 0) p = r.sheets;
    std::string id = lift_id("n_1_" + std::to_string(j), p);
    int e = r.cover.edge_index(id);
    if (e < 0) throw ComplexError("run_cover_pipeline: missing rose lift");
    r.rose_ids.push_back(id);
    rose_edges.push_back(e);
  }
  r.rose = check_rose_separation(r.cover, rose_edges, 6);

  // Delete the least horizontal edge; its star contains one apex of
  // each directional circle, which therefore all become segments.
  int doomed = -1;
  for (size_t e = 0; e < r.cover.edges.size(); ++e) {
    if (edge_letter(r.cover.edges[e]) != 0) continue;
    if (doomed < 0 || r.cover.edges[e].id < r.cover.edges[doomed].id)
      doomed = static_cast<int>(e);
  }
  if (doomed < 0) throw ComplexError("run_cover_pipeline: no horizontal edge");
  r.deleted_edge = r.cover.edges[doomed].id;
  r.deleted = delete_open_cells(r.cover, {doomed});

  for (const auto& e : r.deleted.edges)
    if (edge_letter(e) == 0) ++r.kernel_rank;
  r.euler = r.deleted.euler_characteristic();
  r.euler_ok = r.euler == Int(1 - r.kernel_rank) * Int(1 - k);

  r.height = check_height(r.deleted);
  std::vector<int> rose_in_deleted;
  for (const std::string& id : r.rose_ids) {
    int e = r.deleted.edge_index(id);
    if (e < 0) throw ComplexError("run_cover_pipeline: rose petal deleted");
    rose_in_deleted.push_back(e);
  }
  r.monodromy =
      extract_monodromy(r.deleted, rose_in_deleted, &r.monodromy_cert);
  return r;
}

namespace {

nlohmann::ordered_json sizes(const PE2Complex& c) {
  return {{"vertices", c.vertices.size()},
          {"edges", c.edges.size()},
          {"faces", c.faces.size()}};
}

}  // namespace

nlohmann::ordered_json report_json(const CoverPipelineResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = "cover-pipeline";
  j["k"] = r.k;
  j["base"] = sizes(r.base);
  j["short_cycles"] = r.short_cycle_count;
  j["classes"] = r.class_count;
  nlohmann::ordered_json lam = nlohmann::ordered_json::array();
  for (const Int& x : r.lambda) lam.push_back(to_i64(x));
  j["lambda"] = std::move(lam);
  j["walk_bound"] = to_i64(r.m_bound);
  j["pairing_max"] = to_i64(r.pairing_max);
  j["sheets"] = r.sheets;
  j["cover"] = sizes(r.cover);
  nlohmann::ordered_json certs;
  certs["counts"] = r.counts_ok;
  certs["deck_rotation"] = r.deck_ok;
  certs["projection"] = r.projection_ok;
  certs["link_connected"] = r.link_connected;
  certs["link_bipartite"] = r.link_bipartite;
  certs["no_short_cycles"] = r.no_short_cycles;
  certs["middle_circles"] = r.circles_ok;
  certs["npc"] = r.npc.pass;
  certs["npc_strict"] = r.npc.strict;
  certs["girth"] = rat_str(r.cover_girth);
  certs["rose_separated"] = r.rose.pass;
  certs["rose_min_hops"] = r.rose.min_hops;
  j["certificates"] = std::move(certs);
  j["rose"] = r.rose_ids;
  j["deleted_edge"] = r.deleted_edge;
  j["deleted"] = sizes(r.deleted);
  j["kernel_rank"] = r.kernel_rank;
  j["euler"] = to_i64(r.euler);
  j["euler_ok"] = r.euler_ok;
  j["height_ok"] = r.height.ok();
  nlohmann::ordered_json mono;
  mono["inverses"] = r.monodromy_cert.inverses_ok;
  mono["relators_checked"] = r.monodromy_cert.relators_checked;
  mono["relators"] = r.monodromy_cert.relators_ok;
  mono["rose_normalized"] = r.monodromy_cert.rose_normalized;
  mono["document"] = monodromy_str(r.monodromy);
  j["monodromy"] = std::move(mono);
  j["all_ok"] = r.all_ok();
  return j;
}

std::string report_str(const CoverPipelineResult& r) {
  return report_json(r).dump(2) + "\n";
}

}  // namespace npcx
