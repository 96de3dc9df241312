#include <doctest.h>

#include <npcx/chain.hpp>

using namespace npcx;

namespace {

const CoverPipelineResult& block1() {
  static const CoverPipelineResult r = run_cover_pipeline(1);
  return r;
}

const CoverPipelineResult& block2() {
  static const CoverPipelineResult r = run_cover_pipeline(2);
  return r;
}

}  // namespace

TEST_CASE("empty chain passes the base through") {
  const ChainBase base = gamma_base(2);
  const ChainCertificate c = chain_blocks(base, {});
  CHECK(c.stages.empty());
  CHECK(c.npc_ok);
  CHECK_FALSE(c.strict_ok);
  CHECK(c.complex.edges.size() == base.complex.edges.size());
  CHECK(c.rose == base.rose);
}

TEST_CASE("rank mismatches are rejected before any glueing") {
  // A rank-1 block cannot glue onto the rank-2 diagonal rose.
  CHECK_THROWS_AS(chain_blocks(gamma_base(2), {&block1()}), ComplexError);
}

TEST_CASE("glueing a depth-one block onto the diagonal rose stays NPC") {
  const ChainBase base = gamma_base(1);
  const ChainCertificate c = chain_blocks(base, {&block1()});
  REQUIRE(c.stages.size() == 1);
  CHECK(c.npc_ok);
  CHECK(c.stages[0].npc.pass);
  // The square-derived links keep their 2pi cycles: no strictness.
  CHECK_FALSE(c.strict_ok);
  // Single shared vertex; the two unit legs plus the block minus the
  // identified petal.
  CHECK(c.stages[0].vertices == 1);
  const long long base_edges =
      static_cast<long long>(base.complex.edges.size());
  const long long block_edges =
      static_cast<long long>(block1().deleted.edges.size());
  CHECK(c.stages[0].edges == base_edges + block_edges - 1);
  // Every block cell was rescaled to the sqrt-2 locus.
  const int glued = c.complex.edge_index("K1:glue.x_1");
  CHECK(glued < 0);  // identified petal keeps the base edge id
  bool found_scaled = false;
  for (const auto& e : c.complex.edges)
    if (e.id.rfind("K1:", 0) == 0 && e.length == sqrt2_length())
      found_scaled = true;
  CHECK(found_scaled);
}

TEST_CASE("glueing the rank-two block onto the rank-two base stays NPC") {
  const ChainCertificate c = chain_blocks(gamma_base(2), {&block2()});
  REQUIRE(c.stages.size() == 1);
  CHECK(c.npc_ok);
  CHECK_FALSE(c.strict_ok);
  CHECK(c.stages[0].rank == 2);
  CHECK(c.stages[0].vertices == 1);
}

TEST_CASE("a strict base chained with a matching block stays strict") {
  const ChainBase base = pipeline_base(block1());
  CHECK(base.strict);
  CHECK(base.rose.size() == 1);

  const ChainCertificate c = chain_blocks(base, {&block1()});
  REQUIRE(c.stages.size() == 1);
  CHECK(c.npc_ok);
  CHECK(c.strict_ok);
  CHECK(c.stages[0].npc.strict);
  CHECK(c.stages[0].vertices == 1);
  const long long block_edges =
      static_cast<long long>(block1().deleted.edges.size());
  CHECK(c.stages[0].edges == 2 * block_edges - 1);
  CHECK(c.stages[0].faces ==
        2 * static_cast<long long>(block1().deleted.faces.size()));
}
