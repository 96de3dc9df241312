// Batch front-end: builds the template and cover complexes, runs the
// certificate pipelines, assembles chain presentations, measures
// distortion growth, and exports artifacts. Every output lands under
// --out with a stable filename; the process exits 0 only when all
// certificates requested by the subcommand pass.

#include <CLI11.hpp>
#include <json.hpp>

#include <npcx/bs.hpp>
#include <npcx/chain.hpp>
#include <npcx/complex_io.hpp>
#include <npcx/distortion.hpp>
#include <npcx/link.hpp>
#include <npcx/link_metrics.hpp>
#include <npcx/morse.hpp>
#include <npcx/presentation.hpp>
#include <npcx/rational.hpp>
#include <npcx/report.hpp>
#include <npcx/templates.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace npcx;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// One pipeline run per rank and process; reruns are deterministic, so
// sharing the result only saves time.
const CoverPipelineResult& pipeline(int k) {
  static std::map<int, CoverPipelineResult> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, run_cover_pipeline(k)).first;
  return it->second;
}

ordered_json npc_json(const NpcCertificate& cert) {
  ordered_json links = ordered_json::array();
  for (const auto& l : cert.links)
    links.push_back({{"vertex", l.vertex},
                     {"has_cycle", l.has_cycle},
                     {"girth_over_pi", l.has_cycle ? rat_str(l.girth) : ""}});
  return {{"pass", cert.pass}, {"strict", cert.strict}, {"links", links}};
}

ordered_json fit_json(const GrowthTable& t, const FitResult& f) {
  return {{"table", t.name},
          {"rows", t.rows.size()},
          {"exact_rows", t.exact_rows()},
          {"cap", t.cap},
          {"monotone", t.monotone()},
          {"fit",
           {{"ok", f.ok},
            {"error", f.error},
            {"constant", f.constant},
            {"depth", f.depth},
            {"slope", f.slope},
            {"base", f.base}}}};
}

ordered_json sample_json(const SampleReport& r, const std::string& action) {
  return {{"name", r.name},
          {"action", action},
          {"samples", r.samples},
          {"seed", r.seed},
          {"violations", r.violations}};
}

std::string side_text(const GraphOfGroups& g) {
  std::ostringstream os;
  os << "# " << g.name << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "# vertex " << i << " label " << g.vertices[i].label << " scale "
       << g.vertices[i].scale << "\n";
    os << g.vertices[i].group.text() << "\n";
  }
  for (const auto& e : g.edges)
    os << "# edge " << e.label << " rank " << e.rank << "\n";
  return os.str();
}

// The presentation-level chain the CLI assembles: n blocks whose ranks
// stay chainable (all degree 1 except optionally the last).
ChainAssembly cli_chain(int n, int last_degree) {
  std::vector<BlockSpec> blocks;
  for (int i = 1; i <= n; ++i) {
    const int degree = i == n ? last_degree : 1;
    blocks.push_back(staircase_block(degree, "B" + std::to_string(i)));
  }
  return assemble_chain(blocks, terminal_staircase(1));
}

int cmd_build_xk(int k, const fs::path& out) {
  const PE2Complex x = build_xk(k);
  const LinkGraph lk = build_link(x, 0);
  const NpcCertificate cert = check_npc(x);
  const bool connected = link_connected(lk);
  const bool bipartite = link_bipartite(lk);

  save_complex(x, out / ("xk_" + std::to_string(k) + ".complex"));
  ordered_json j = {{"k", k},
                    {"vertices", x.vertices.size()},
                    {"edges", x.edges.size()},
                    {"faces", x.faces.size()},
                    {"link_nodes", lk.nodes.size()},
                    {"link_edges", lk.edges.size()},
                    {"link_connected", connected},
                    {"link_bipartite", bipartite},
                    {"npc", npc_json(cert)}};
  write_file(out / ("xk_" + std::to_string(k) + ".json"), j.dump(2) + "\n");
  std::cout << "template k=" << k << ": " << x.edges.size() << " edges, "
            << x.faces.size() << " faces, link "
            << (cert.pass ? "pass" : "fail") << "\n";
  return cert.pass && connected && bipartite ? 0 : 1;
}

int cmd_check_npc(const fs::path& in, bool strict, const fs::path& out) {
  const PE2Complex c = load_complex(in);
  const NpcCertificate cert = check_npc(c);
  ordered_json j = {{"input", in.string()},
                    {"strict_requested", strict},
                    {"npc", npc_json(cert)}};
  write_file(out / "npc.json", j.dump(2) + "\n");
  std::cout << "npc: " << (cert.pass ? "pass" : "fail")
            << (cert.strict ? " (strict)" : "") << "\n";
  return cert.pass && (!strict || cert.strict) ? 0 : 1;
}

int cmd_pipeline_yk(int k, const fs::path& out) {
  const CoverPipelineResult& r = pipeline(k);
  const std::string suffix = std::to_string(k);
  write_file(out / ("pipeline_y" + suffix + ".json"), report_str(r));
  save_complex(r.cover, out / ("cover_y" + suffix + ".complex"));
  save_complex(r.deleted, out / ("y" + suffix + ".complex"));
  write_file(out / ("monodromy_y" + suffix + ".txt"),
             monodromy_str(r.monodromy));
  std::cout << "pipeline k=" << k << ": N=" << r.sheets << ", kernel rank "
            << r.kernel_rank << ", " << (r.all_ok() ? "all pass" : "FAILED")
            << "\n";
  return r.all_ok() ? 0 : 1;
}

int cmd_monodromy(int k, const fs::path& out) {
  const CoverPipelineResult& r = pipeline(k);
  const std::string suffix = std::to_string(k);
  write_file(out / ("monodromy_y" + suffix + ".txt"),
             monodromy_str(r.monodromy));
  const bool ok = r.monodromy_cert.inverses_ok && r.monodromy_cert.relators_ok &&
                  r.monodromy_cert.rose_normalized;
  ordered_json j = {{"k", k},
                    {"kernel_rank", r.monodromy.action.kernel_rank},
                    {"base_rank", r.monodromy.action.base_rank},
                    {"vertical_words", r.monodromy.vertical_words.size()},
                    {"inverses_ok", r.monodromy_cert.inverses_ok},
                    {"relators_ok", r.monodromy_cert.relators_ok},
                    {"relators_checked", r.monodromy_cert.relators_checked},
                    {"rose_normalized", r.monodromy_cert.rose_normalized}};
  write_file(out / ("monodromy_y" + suffix + ".json"), j.dump(2) + "\n");
  std::cout << "monodromy k=" << k << ": kernel rank "
            << r.monodromy.action.kernel_rank << ", "
            << (ok ? "verified" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_presentations(int n, int last_degree, const fs::path& out) {
  const ChainAssembly c = cli_chain(n, last_degree);
  const std::string suffix = std::to_string(n);
  write_file(out / ("chain_top_" + suffix + ".txt"), side_text(c.top));
  write_file(out / ("chain_bottom_" + suffix + ".txt"), side_text(c.bottom));
  std::ostringstream groups;
  for (const Presentation* p : {&c.Hn, &c.Ln, &c.Gn, &c.Cn, &c.Dn})
    groups << p->text() << "\n";
  write_file(out / ("chain_groups_" + suffix + ".txt"), groups.str());

  const bool shape = c.top.valid() && c.top.symmetric() && c.bottom.valid() &&
                     c.bottom.symmetric();
  const bool counts = c.cn_expected == c.cn_actual &&
                      c.dn_expected == c.dn_actual;
  ordered_json j = {{"n", n},
                    {"last_degree", last_degree},
                    {"top_vertices", c.top.vertices.size()},
                    {"bottom_vertices", c.bottom.vertices.size()},
                    {"shape_ok", shape},
                    {"Cn_gens", c.cn_actual.gens},
                    {"Cn_rels", c.cn_actual.rels},
                    {"Dn_gens", c.dn_actual.gens},
                    {"Dn_rels", c.dn_actual.rels},
                    {"bookkeeping_ok", counts}};
  write_file(out / ("chain_" + suffix + ".json"), j.dump(2) + "\n");
  std::cout << "chain n=" << n << ": " << c.top.vertices.size()
            << " vertex groups per side, bookkeeping "
            << (counts ? "ok" : "FAILED") << "\n";
  return shape && counts ? 0 : 1;
}

int cmd_bass_test(int samples, std::uint64_t seed, const fs::path& out) {
  // Homomorphism replay on the polynomial staircase block, where full
  // sample lengths stay materializable.
  SemidirectAction stair;
  stair.kernel_rank = 3;
  stair.base_rank = 1;
  stair.phi = {staircase_automorphism(3)};
  ThetaMap theta_stair{1, 2, {concat(FreeWord::generator(0),
                                     FreeWord::generator(1))}};
  const SampleReport hom =
      embed_homomorphism_test(stair, theta_stair, samples, seed);

  // Intersection tests never apply the base action, so they run on the
  // extracted exponential block at full sample lengths.
  const SemidirectAction& ext = pipeline(1).monodromy.action;
  ThetaMap theta_ext{1, 1, {FreeWord::generator(0)}};
  const SampleReport fac = bass_factor_test(ext, theta_ext, samples, seed + 1);
  const SampleReport dia =
      bass_diagonal_test(ext, theta_ext, samples, seed + 2);

  ordered_json j = ordered_json::array(
      {sample_json(hom, "staircase degree 3"),
       sample_json(fac, "extracted rank-1 block"),
       sample_json(dia, "extracted rank-1 block")});
  write_file(out / "bass.json", j.dump(2) + "\n");
  const bool ok =
      hom.violations == 0 && fac.violations == 0 && dia.violations == 0;
  std::cout << "bass tests: " << hom.violations + fac.violations +
                   dia.violations
            << " violations in 3x" << samples << " samples\n";
  return ok ? 0 : 1;
}

int cmd_bs_demo(const fs::path& out) {
  const BsDemoReport rep = run_bs_demo();
  write_file(out / "bs_demo.txt", rep.text());
  ordered_json j = {
      {"split_commutator_trivial", rep.split_commutator_trivial},
      {"amalgam_commutator_nontrivial", rep.amalgam_commutator_nontrivial},
      {"amalgam_syllables", rep.amalgam_syllables},
      {"middle_translation", rat_str(rep.middle_translation)},
      {"faithfulness_violations", rep.faithfulness.violations},
      {"ok", rep.ok}};
  write_file(out / "bs_demo.json", j.dump(2) + "\n");
  std::cout << rep.text();
  return rep.ok ? 0 : 1;
}

int cmd_distort_example1(int k, int nmax, const fs::path& out) {
  GrowthTable t;
  t.name = "staircase_witness_k" + std::to_string(k);
  for (int n = 1; n <= nmax; ++n) {
    const WitnessSize w = staircase_witness(k, n);
    t.rows.push_back({n, w.ambient, w.kernel, false});
  }
  const FitResult f = fit_growth(t);
  const std::string stem = "example1_k" + std::to_string(k);
  write_file(out / (stem + ".csv"), t.to_csv());
  write_file(out / (stem + "_fit.json"), fit_json(t, f).dump(2) + "\n");
  std::cout << t.name << ": depth " << f.depth << ", slope " << f.slope
            << (f.ok ? "" : " (fit refused: " + f.error + ")") << "\n";
  return f.ok ? 0 : 1;
}

int cmd_distort_orbit(int k, int mmax, int generator, long long cap,
                      const fs::path& out) {
  const GrowthTable t =
      monodromy_orbit_table(pipeline(k).monodromy.action, generator, mmax, cap);
  const FitResult f = fit_growth(t);
  const std::string stem =
      "orbit_y" + std::to_string(k) + "_g" + std::to_string(generator);
  write_file(out / (stem + ".csv"), t.to_csv());
  write_file(out / (stem + "_fit.json"), fit_json(t, f).dump(2) + "\n");
  std::cout << t.name << ": " << t.exact_rows() << "/" << t.rows.size()
            << " exact rows"
            << (f.ok ? ", fit depth " + std::to_string(f.depth)
                     : ", fit refused: " + f.error)
            << "\n";
  return !t.rows.empty() && t.monotone() ? 0 : 1;
}

int cmd_distort_chain(int k, int nmax, int generator, long long cap,
                      const fs::path& out) {
  const SemidirectAction& action = pipeline(k).monodromy.action;
  const GrowthTable t = chain_growth_table(action, generator, nmax, cap);
  const FitResult f = fit_growth(t);
  const bool upper = upper_model_ok(t, action);
  const std::string stem = "chain_y" + std::to_string(k);
  write_file(out / (stem + ".csv"), t.to_csv());
  ordered_json j = fit_json(t, f);
  j["upper_model_ok"] = upper;
  write_file(out / (stem + "_fit.json"), j.dump(2) + "\n");
  std::cout << t.name << ": " << t.exact_rows() << "/" << t.rows.size()
            << " exact rows, upper model " << (upper ? "pass" : "fail")
            << "\n";
  return upper ? 0 : 1;
}

int cmd_distort_fit(const fs::path& in, const fs::path& out) {
  const GrowthTable t =
      growth_table_from_csv(in.stem().string(), read_file(in));
  const FitResult f = fit_growth(t);
  write_file(out / (in.stem().string() + "_fit.json"),
             fit_json(t, f).dump(2) + "\n");
  std::cout << t.name << ": "
            << (f.ok ? "fit depth " + std::to_string(f.depth)
                     : "fit refused: " + f.error)
            << "\n";
  return f.ok ? 0 : 1;
}

int cmd_chain_complex(const std::string& base_kind, int base_rank,
                      const std::vector<int>& ks, const fs::path& out) {
  ChainBase base;
  if (base_kind == "gamma") {
    base = gamma_base(base_rank);
  } else {
    base = pipeline_base(pipeline(base_rank));
  }
  std::vector<const CoverPipelineResult*> blocks;
  blocks.reserve(ks.size());
  for (int k : ks) blocks.push_back(&pipeline(k));
  const ChainCertificate cert = chain_blocks(base, blocks);

  save_complex(cert.complex,
               out / ("k" + std::to_string(ks.size()) + ".complex"));
  ordered_json stages = ordered_json::array();
  for (const auto& s : cert.stages)
    stages.push_back({{"name", s.name},
                      {"rank", s.rank},
                      {"vertices", s.vertices},
                      {"edges", s.edges},
                      {"faces", s.faces},
                      {"npc", npc_json(s.npc)}});
  ordered_json j = {{"base", base_kind},
                    {"base_rank", base_rank},
                    {"base_strict", base.strict},
                    {"stages", stages},
                    {"npc_ok", cert.npc_ok},
                    {"strict_ok", cert.strict_ok}};
  write_file(out / "chain_cert.json", j.dump(2) + "\n");
  const bool ok = cert.npc_ok && (!base.strict || cert.strict_ok);
  std::cout << "chain of " << ks.size() << " block(s) on " << base_kind
            << " base: npc " << (cert.npc_ok ? "pass" : "fail")
            << (base.strict
                    ? std::string(", strict ") +
                          (cert.strict_ok ? "pass" : "fail")
                    : "")
            << "\n";
  return ok ? 0 : 1;
}

int cmd_export(const std::string& what, const std::string& format, int k,
               int n, const fs::path& out) {
  if (what == "xk" || what == "yk") {
    const PE2Complex c = what == "xk" ? build_xk(k) : pipeline(k).deleted;
    const std::string stem = "export_" + what + "_" + std::to_string(k);
    if (format == "complex") {
      save_complex(c, out / (stem + ".complex"));
    } else if (format == "json") {
      ordered_json j = {{"what", what},
                        {"k", k},
                        {"vertices", c.vertices.size()},
                        {"edges", c.edges.size()},
                        {"faces", c.faces.size()}};
      write_file(out / (stem + ".json"), j.dump(2) + "\n");
    } else {
      throw CLI::ValidationError("export",
                                 "format '" + format + "' does not apply to " +
                                     what);
    }
    return 0;
  }
  if (what == "link-xk" || what == "link-yk") {
    if (format != "dot")
      throw CLI::ValidationError("export", "links export as dot only");
    const PE2Complex c =
        what == "link-xk" ? build_xk(k) : pipeline(k).deleted;
    const LinkGraph lk = build_link(c, 0);
    write_file(out / ("export_" + what + "_" + std::to_string(k) + ".dot"),
               link_dot(c, lk));
    return 0;
  }
  if (what == "presentations") {
    if (format != "text")
      throw CLI::ValidationError("export", "presentations export as text");
    const ChainAssembly c = cli_chain(n, 1);
    write_file(out / ("export_top_" + std::to_string(n) + ".txt"),
               side_text(c.top));
    write_file(out / ("export_bottom_" + std::to_string(n) + ".txt"),
               side_text(c.bottom));
    return 0;
  }
  throw CLI::ValidationError("export", "unknown artifact '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified non-positively curved complexes, free-by-free "
               "monodromies, chain presentations and distortion tables"};
  app.require_subcommand(1);

  std::string out_str = "out";
  app.add_option("--out", out_str, "output directory (created if missing)")
      ->capture_default_str();

  int k = 1, n = 1, nmax = 40, mmax = 6, generator = 0, samples = 1000;
  int last_degree = 1, base_rank = -1;
  long long cap = kDefaultWordCap;
  std::uint64_t seed = 20260814;
  bool strict = false;
  std::string in_str, base_kind = "gamma", what, format;
  std::vector<int> ks;

  CLI::App* build = app.add_subcommand("build-xk", "build a template complex");
  build->add_option("--k", k, "number of levels")->required();

  CLI::App* npc = app.add_subcommand("check-npc", "curvature-check a complex");
  npc->add_option("--in", in_str, "complex file")->required();
  npc->add_flag("--strict", strict, "require strict negative curvature");

  CLI::App* pipe =
      app.add_subcommand("pipeline-yk", "run the full cover pipeline");
  pipe->add_option("--k", k, "number of levels")->required();

  CLI::App* mono =
      app.add_subcommand("monodromy", "extract and verify the monodromy");
  mono->add_option("--k", k, "number of levels")->required();

  CLI::App* pres = app.add_subcommand(
      "presentations", "assemble the doubled chain presentations");
  pres->add_option("--n", n, "number of blocks")->required();
  pres->add_option("--last-degree", last_degree,
                   "staircase degree of the last block");

  CLI::App* bass = app.add_subcommand(
      "bass-test", "sampled embedding and intersection properties");
  bass->add_option("--samples", samples, "samples per test");
  bass->add_option("--seed", seed, "random seed");

  app.add_subcommand("bs-demo",
                     "contrast the split and amalgamated BS(1,2) models");

  CLI::App* distort =
      app.add_subcommand("distort", "growth tables and model fits");
  distort->require_subcommand(1);
  CLI::App* d_ex = distort->add_subcommand("example1", "staircase witnesses");
  d_ex->add_option("--k", k, "staircase degree")->required();
  d_ex->add_option("--nmax", nmax, "largest witness parameter");
  CLI::App* d_orbit =
      distort->add_subcommand("orbit", "kernel orbit growth of a pipeline");
  d_orbit->add_option("--k", k, "pipeline levels")->required();
  d_orbit->add_option("--mmax", mmax, "largest iterate");
  d_orbit->add_option("--generator", generator, "kernel generator index");
  d_orbit->add_option("--cap", cap, "letter cap");
  CLI::App* d_chain =
      distort->add_subcommand("chain", "two-stage chained witnesses");
  d_chain->add_option("--k", k, "pipeline levels (base rank must be 2)")
      ->required();
  d_chain->add_option("--nmax", nmax, "largest witness parameter");
  d_chain->add_option("--generator", generator, "kernel generator index");
  d_chain->add_option("--cap", cap, "letter cap");
  CLI::App* d_fit = distort->add_subcommand("fit", "fit a stored CSV table");
  d_fit->add_option("--in", in_str, "growth table CSV")->required();

  CLI::App* chain =
      app.add_subcommand("chain", "glue pipeline blocks onto a base complex");
  chain->add_option("--base", base_kind, "base complex: gamma or y")
      ->check(CLI::IsMember({"gamma", "y"}));
  chain->add_option("--base-rank", base_rank,
                    "rose rank of the base (default: first block)");
  chain->add_option("--ks", ks, "ranks of the blocks to glue, in order");

  CLI::App* exp = app.add_subcommand("export", "emit artifacts");
  exp->add_option("--what", what,
                  "xk | yk | link-xk | link-yk | presentations")
      ->required();
  exp->add_option("--format", format, "complex | dot | json | text")
      ->required()
      ->check(CLI::IsMember({"complex", "dot", "json", "text"}));
  exp->add_option("--k", k, "levels for complex/link exports");
  exp->add_option("--n", n, "blocks for presentation exports");

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  int rc = 1;
  try {
    const fs::path out(out_str);
    fs::create_directories(out);
    if (build->parsed()) rc = cmd_build_xk(k, out);
    if (npc->parsed()) rc = cmd_check_npc(in_str, strict, out);
    if (pipe->parsed()) rc = cmd_pipeline_yk(k, out);
    if (mono->parsed()) rc = cmd_monodromy(k, out);
    if (pres->parsed()) rc = cmd_presentations(n, last_degree, out);
    if (bass->parsed()) rc = cmd_bass_test(samples, seed, out);
    if (app.get_subcommand("bs-demo")->parsed()) rc = cmd_bs_demo(out);
    if (distort->parsed()) {
      if (d_ex->parsed()) rc = cmd_distort_example1(k, nmax, out);
      if (d_orbit->parsed()) rc = cmd_distort_orbit(k, mmax, generator, cap, out);
      if (d_chain->parsed())
        rc = cmd_distort_chain(k, nmax, generator, cap, out);
      if (d_fit->parsed()) rc = cmd_distort_fit(in_str, out);
    }
    if (chain->parsed()) {
      if (base_rank < 0) base_rank = ks.empty() ? 1 : ks.front();
      rc = cmd_chain_complex(base_kind, base_rank, ks, out);
    }
    if (exp->parsed()) rc = cmd_export(what, format, k, n, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  std::cout << "elapsed " << ms << " ms, exit " << rc << "\n";
  return rc;
}
