#include <doctest.h>

#include <npcx/distortion.hpp>
#include <npcx/presentation.hpp>
#include <npcx/report.hpp>

#include <stdexcept>
#include <string>
#include <vector>

using namespace npcx;

namespace {

const CoverPipelineResult& pipeline1() {
  static const CoverPipelineResult r = run_cover_pipeline(1);
  return r;
}

FreeWord word(std::initializer_list<std::pair<int, long long>> runs) {
  FreeWord w;
  for (const auto& [g, e] : runs) w.push(g, e);
  return w;
}

}  // namespace

TEST_CASE("folding computes subgroup rank and detects bases") {
  // Two copies of the same letter fold to one circle.
  const FoldResult dup = fold_subgroup(2, {word({{0, 1}}), word({{0, 1}})});
  CHECK(dup.rank == 1);
  CHECK_FALSE(dup.basis);

  // {xy, y} is a free basis of the whole group.
  const FoldResult xy = fold_subgroup(2, {word({{0, 1}, {1, 1}}), word({{1, 1}})});
  CHECK(xy.rank == 2);
  CHECK(xy.basis);

  // A proper power is a basis of the subgroup it generates.
  const FoldResult sq = fold_subgroup(1, {word({{0, 2}})});
  CHECK(sq.rank == 1);
  CHECK(sq.basis);
  CHECK(sq.vertices == 2);
  CHECK(sq.edges == 2);

  // Conjugates of a fixed letter by distinct letters stay independent.
  const FoldResult conj = fold_subgroup(
      3, {word({{1, 1}, {0, 1}, {1, -1}}), word({{2, 1}, {0, 1}, {2, -1}})});
  CHECK(conj.rank == 2);
  CHECK(conj.basis);

  // Redundant generating sets lose rank.
  const FoldResult red = fold_subgroup(
      2, {word({{0, 1}}), word({{1, 1}}), word({{0, 1}, {1, 1}})});
  CHECK(red.rank == 2);
  CHECK_FALSE(red.basis);
}

TEST_CASE("theta maps are vetted by folding") {
  ThetaMap t;
  t.domain_rank = 1;
  t.codomain_rank = 2;
  t.images = {word({{0, 1}, {1, 1}})};
  CHECK(theta_is_basis(t));

  t.images = {word({{0, 2}})};  // basis of its own image
  CHECK(theta_is_basis(t));

  t.domain_rank = 2;
  t.images = {word({{0, 1}}), word({{0, 1}})};
  CHECK_FALSE(theta_is_basis(t));

  t.images = {word({{0, 1}})};  // wrong count
  CHECK_FALSE(theta_is_basis(t));

  t.domain_rank = 1;
  t.images = {FreeWord()};  // empty image
  CHECK_FALSE(theta_is_basis(t));
}

TEST_CASE("presentation text round-trips byte for byte") {
  Presentation p;
  p.name = "demo";
  p.gens = {"a", "b_2", "n_1_1^(12)"};  // carets occur in real names
  p.rels.push_back({{0, 1}, {1, -2}, {0, 3}});
  p.rels.push_back({});
  p.rels.push_back({{2, 1}, {0, -1}, {2, -7}});

  const std::string t = p.text();
  const Presentation q = parse_presentation(t);
  CHECK(q == p);
  CHECK(q.text() == t);

  CHECK_THROWS_AS(parse_presentation("nonsense"), std::invalid_argument);
}

TEST_CASE("block presentations emit one conjugation relator per pair") {
  const BlockSpec b = staircase_block(2, "B");
  const Presentation p = block_presentation(b);
  CHECK(p.gens == std::vector<std::string>{"B.x1", "B.x2", "B.t"});
  REQUIRE(p.rels.size() == 2);
  // t x1 t^-1 x1^-1
  CHECK(p.rels[0] ==
        Presentation::Word{{2, 1}, {0, 1}, {2, -1}, {0, -1}});
  // t x2 t^-1 (x1 x2)^-1
  CHECK(p.rels[1] ==
        Presentation::Word{{2, 1}, {1, 1}, {2, -1}, {1, -1}, {0, -1}});

  const BlockSpec y = block_from_monodromy(pipeline1().monodromy, "Y");
  const Presentation yp = block_presentation(y);
  CHECK(yp.gens.size() == 104);
  CHECK(yp.rels.size() == 103);
  CHECK(yp.gens.front().rfind("Y.", 0) == 0);
  CHECK(yp.gens.back() == "Y.t_1");
}

TEST_CASE("semidirect normal form rewrites combined words") {
  // Combined alphabet of the degree-3 staircase block: x1 x2 x3 t.
  SemidirectAction a;
  a.kernel_rank = 3;
  a.base_rank = 1;
  a.phi = {staircase_automorphism(3)};

  // t x2 t^-1 -> (x1 x2, 1)
  const SemidirectElement e =
      semidirect_normal_form(word({{3, 1}, {1, 1}, {3, -1}}), a);
  CHECK(e.kernel == word({{0, 1}, {1, 1}}));
  CHECK(e.base.empty());

  // t x1 -> (phi_t(x1), t) = (x1, t)
  const SemidirectElement f = semidirect_normal_form(word({{3, 1}, {0, 1}}), a);
  CHECK(f.kernel == word({{0, 1}}));
  CHECK(f.base == word({{0, 1}}));

  // t^-1 x2 -> (phi_t^-1(x2), t^-1) = (x1^-1 x2, t^-1)
  const SemidirectElement g =
      semidirect_normal_form(word({{3, -1}, {1, 1}}), a);
  CHECK(g.kernel == word({{0, -1}, {1, 1}}));
  CHECK(g.base == word({{0, -1}}));

  // Kernel-only words pass through untouched.
  const SemidirectElement h =
      semidirect_normal_form(word({{2, 1}, {0, -2}}), a);
  CHECK(h.kernel == word({{2, 1}, {0, -2}}));
  CHECK(h.base.empty());

  CHECK_THROWS_AS(semidirect_normal_form(word({{4, 1}}), a),
                  std::invalid_argument);
}

TEST_CASE("embedding into the double is a sampled homomorphism") {
  SemidirectAction a;
  a.kernel_rank = 3;
  a.base_rank = 1;
  a.phi = {staircase_automorphism(3)};

  ThetaMap theta;
  theta.domain_rank = 1;
  theta.codomain_rank = 2;
  theta.images = {word({{0, 1}, {1, 1}})};

  const SampleReport hom = embed_homomorphism_test(a, theta, 1000, 20260814);
  CHECK(hom.samples == 1000);
  CHECK(hom.violations == 0);

  // Spot check: embed(t x1) has C coordinate theta(t).
  const EmbeddedElement e =
      embed_phi(a, semidirect_normal_form(word({{3, 1}, {0, 1}}), a), theta);
  CHECK(e.c == theta.images[0]);
  CHECK(e.g.kernel == word({{0, 1}}));

  ThetaMap bad = theta;
  bad.images = {FreeWord()};
  CHECK_THROWS_AS(embed_phi(a, SemidirectElement{}, bad),
                  std::invalid_argument);
}

TEST_CASE("factor and diagonal intersections hold on the extracted action") {
  const SemidirectAction& a = pipeline1().monodromy.action;
  ThetaMap theta;
  theta.domain_rank = 1;
  theta.codomain_rank = 1;
  theta.images = {word({{0, 1}})};

  const SampleReport fac = bass_factor_test(a, theta, 1000, 97);
  CHECK(fac.samples == 1000);
  CHECK(fac.violations == 0);

  const SampleReport dia = bass_diagonal_test(a, theta, 1000, 98);
  CHECK(dia.samples == 1000);
  CHECK(dia.violations == 0);
}

TEST_CASE("terminal squares wire the staircase group into a product") {
  const TerminalSpec t = terminal_staircase(2);
  CHECK(t.growth_exponent == doctest::Approx(2.0));
  CHECK(t.S.gens == std::vector<std::string>{"x1", "x2", "t"});
  CHECK(t.S.rels.size() == 2);
  CHECK(t.H0.gens == std::vector<std::string>{"x1", "x2", "t", "c_1"});
  CHECK(t.H0.rels.size() == 3);
  // T = H0 x C2: H0 relators plus one commutator per (H0 gen, d_1).
  CHECK(t.T.gens.size() == 5);
  CHECK(t.T.rels.size() == 3 + 4);
  CHECK(t.a0_in_S.size() == 2);
  CHECK(t.a0_in_H0 == t.a0_in_S);
  // t c_1^-1 is the identification relator.
  CHECK(t.H0.rels.back() == Presentation::Word{{2, 1}, {3, -1}});

  const TerminalSpec m = terminal_monodromy(pipeline1().monodromy);
  CHECK(m.S.gens.size() == 104);
  CHECK(m.S.rels.size() == 103);
  CHECK(m.H0.gens.size() == 105);
  CHECK(m.T.gens.size() == 106);
  CHECK(m.T.rels.size() == 104 + 105);
  CHECK(m.a0_in_S.size() == 103);
  CHECK(m.note.find("exponential") != std::string::npos);

  const TerminalSpec s = terminal_snowflake(1.26);
  CHECK(s.growth_exponent == doctest::Approx(1.26));
  CHECK(s.note.find("without internal verification") != std::string::npos);
  CHECK(s.S.gens.size() == 3);
}

TEST_CASE("degenerate chain doubles the terminal over its subgroup") {
  const ChainAssembly c = assemble_chain({}, terminal_staircase(2));
  REQUIRE(c.top.vertices.size() == 2);
  REQUIRE(c.top.edges.size() == 1);
  CHECK(c.top.vertices[0].label == "S");
  CHECK(c.top.vertices[1].label == "S");
  CHECK(c.top.edges[0].label == "A0");
  CHECK(c.top.edges[0].rank == 2);
  CHECK(c.top.valid());
  CHECK(c.top.symmetric());
  CHECK(c.top.vertices[0].scale == "(sqrt2)^0");

  REQUIRE(c.bottom.vertices.size() == 2);
  CHECK(c.bottom.vertices[0].label == "T");
  CHECK(c.bottom.edges[0].label == "H0");
  CHECK(c.bottom.edges[0].rank == 4);

  CHECK(c.Hn.name == "H0");
  CHECK(c.Ln.name == "S");
  CHECK(c.Gn.name == "T");

  // D0 doubles S over A0: 6 generators, 2+2 vertex relators + 2 edge.
  CHECK(c.dn_expected == c.dn_actual);
  CHECK(c.dn_actual == RankBookkeeping{6, 6});
  CHECK(c.cn_expected == c.cn_actual);
  CHECK(c.cn_actual == RankBookkeeping{10, 18});
}

TEST_CASE("one-block chain matches the worked bookkeeping") {
  const TerminalSpec term = terminal_staircase(1);
  const ChainAssembly c =
      assemble_chain({staircase_block(1, "B1")}, term);

  // Top segment has 4 vertex groups: S, B1, B1, S.
  REQUIRE(c.top.vertices.size() == 4);
  CHECK(c.top.vertices[0].label == "S");
  CHECK(c.top.vertices[1].label == "B1");
  CHECK(c.top.vertices[2].label == "B1");
  CHECK(c.top.vertices[3].label == "S");
  CHECK(c.top.valid());
  CHECK(c.top.symmetric());
  CHECK(c.top.edges[0].label == "A0");
  CHECK(c.top.edges[1].label == "A1");
  CHECK(c.top.edges[2].label == "A0");
  CHECK(c.top.vertices[0].scale == "(sqrt2)^1");
  CHECK(c.top.vertices[1].scale == "(sqrt2)^0");

  // The A0 edge maps x1 (in S) to the base letter B1.t.
  CHECK(c.top.edges[0].left_images ==
        std::vector<Presentation::Word>{{{0, 1}}});
  CHECK(c.top.edges[0].right_images ==
        std::vector<Presentation::Word>{{{1, 1}}});

  // H1 = B1 * H0 identified over theta: 2 + 3 gens, 1 + 2 + 1 relators.
  CHECK(c.Hn.gens.size() == 5);
  CHECK(c.Hn.rels.size() == 4);
  CHECK(c.Ln.gens.size() == 4);
  CHECK(c.Ln.rels.size() == 3);

  // G1 = (H1 x H0) * T over the diagonal of H0.
  CHECK(c.Gn.gens.size() == 8 + 4);
  CHECK(c.Gn.rels.size() == (4 + 2 + 15) + 5 + 3);

  CHECK(c.dn_expected == c.dn_actual);
  CHECK(c.cn_expected == c.cn_actual);

  // Independent tally: D1 doubles S, B1 over edges A0 A1 A0.
  const long long dg = 2 * 2 + 2 * 2;
  const long long dr = 2 * 1 + 2 * 1 + (1 + 1 + 1);
  CHECK(c.dn_actual == RankBookkeeping{dg, dr});

  // C1 doubles T, H1 x H0 over edges H0 H1 H0.
  const long long h0g = 3, h0r = 2, h1g = 5, h1r = 4;
  const long long p1g = h1g + h0g;
  const long long p1r = h1r + h0r + h1g * h0g;
  const long long cg = 2 * 4 + 2 * p1g;
  const long long cr = 2 * 5 + 2 * p1r + (h0g + h1g + h0g);
  CHECK(c.cn_actual == RankBookkeeping{cg, cr});

  // Fundamental presentations namespace the vertex copies.
  CHECK(c.Dn.gens.front() == "v0.x1");
  CHECK(c.Dn.gens.back() == "v3.t");
}

TEST_CASE("two-block chain stays symmetric and consistent") {
  // Degrees chain 1 -> 1 -> 2: base ranks match the previous kernel.
  const ChainAssembly c = assemble_chain(
      {staircase_block(1, "B1"), staircase_block(2, "B2")},
      terminal_staircase(1));
  REQUIRE(c.top.vertices.size() == 6);
  CHECK(c.top.valid());
  CHECK(c.top.symmetric());
  CHECK(c.bottom.valid());
  CHECK(c.bottom.symmetric());
  CHECK(c.top.vertices[0].scale == "(sqrt2)^2");
  CHECK(c.top.vertices[2].scale == "(sqrt2)^0");
  CHECK(c.dn_expected == c.dn_actual);
  CHECK(c.cn_expected == c.cn_actual);

  // Closed-form tally for the top double.
  const long long dg = 2 * 2 + 2 * ((1 + 1) + (2 + 1));
  const long long dr = 2 * 1 + 2 * (1 + 2) + (1 + 1 + 2 + 1 + 1);
  CHECK(c.dn_actual == RankBookkeeping{dg, dr});

  // Middle edge carries the kernel of the last block.
  CHECK(c.top.edges[2].label == "A2");
  CHECK(c.top.edges[2].rank == 2);
}

TEST_CASE("monodromy blocks chain onto a rank-one terminal") {
  const ChainAssembly c = assemble_chain(
      {block_from_monodromy(pipeline1().monodromy, "B1")},
      terminal_staircase(1));
  CHECK(c.top.vertices.size() == 4);
  CHECK(c.top.valid());
  CHECK(c.top.symmetric());
  CHECK(c.dn_expected == c.dn_actual);
  CHECK(c.cn_expected == c.cn_actual);
  const long long dg = 2 * 2 + 2 * (103 + 1);
  const long long dr = 2 * 1 + 2 * 103 + (1 + 103 + 1);
  CHECK(c.dn_actual == RankBookkeeping{dg, dr});
}

TEST_CASE("chain assembly rejects rank and name clashes") {
  // Base rank 1 cannot glue to a rank-2 subgroup.
  CHECK_THROWS_AS(
      assemble_chain({staircase_block(1, "B1")}, terminal_staircase(2)),
      std::invalid_argument);
  // Kernel rank 2 cannot feed a base of rank 1.
  CHECK_THROWS_AS(
      assemble_chain({staircase_block(2, "B1"), staircase_block(1, "B2")},
                     terminal_staircase(1)),
      std::invalid_argument);
  // Duplicate block names collide.
  CHECK_THROWS_AS(
      assemble_chain({staircase_block(1, "B"), staircase_block(1, "B")},
                     terminal_staircase(1)),
      std::invalid_argument);
}
