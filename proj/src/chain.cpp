#include <npcx/chain.hpp>

#include <npcx/templates.hpp>

namespace npcx {

ChainBase gamma_base(int k) {
  ChainBase b;
  b.complex = build_gamma_k_subdivided(k);
  for (int i = 1; i <= k; ++i) b.rose.push_back("x_" + std::to_string(i));
  b.strict = false;  // the square-derived links have girth exactly 2pi
  return b;
}

ChainBase pipeline_base(const CoverPipelineResult& r) {
  ChainBase b;
  b.complex = r.deleted;
  b.rose = r.rose_ids;
  b.strict = r.rose.pass && check_npc(r.deleted).strict;
  return b;
}

namespace {

// Rose edges must be loops at one common vertex; returns that vertex.
int rose_vertex(const PE2Complex& c, const std::vector<int>& edges,
                const std::string& who) {
  int v = -1;
  for (int e : edges) {
    const EdgeCell& ec = c.edges[static_cast<std::size_t>(e)];
    if (ec.tail != ec.head)
      throw ComplexError(who + ": rose edge '" + ec.id + "' is not a loop");
    if (v < 0) v = ec.tail;
    if (ec.tail != v)
      throw ComplexError(who + ": rose edges sit at different vertices");
  }
  return v;
}

}  // namespace

ChainCertificate chain_blocks(
    const ChainBase& base,
    const std::vector<const CoverPipelineResult*>& blocks) {
  ChainCertificate out;
  out.complex = base.complex;
  out.rose = base.rose;
  out.npc_ok = true;
  out.strict_ok = base.strict;

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const CoverPipelineResult& r = *blocks[i];
    if (static_cast<int>(out.rose.size()) != r.k)
      throw ComplexError(
          "chain_blocks: rose rank " + std::to_string(out.rose.size()) +
          " does not match block base rank " + std::to_string(r.k));

    std::vector<int> locus;
    for (const std::string& id : out.rose) {
      const int e = out.complex.edge_index(id);
      if (e < 0)
        throw ComplexError("chain_blocks: missing rose edge '" + id + "'");
      locus.push_back(e);
    }
    const int va = rose_vertex(out.complex, locus, "chain_blocks");
    const Length target = out.complex.edges[locus[0]].length;
    for (int e : locus)
      if (out.complex.edges[static_cast<std::size_t>(e)].length != target)
        throw ComplexError("chain_blocks: rose edges have mixed lengths");

    // The block's petals are unit loops; rescale the whole block so
    // they match the locus (angles, hence curvature, are unchanged).
    PE2Complex y = r.deleted;
    std::vector<int> petals;
    for (const std::string& id : r.rose_ids) {
      const int e = y.edge_index(id);
      if (e < 0)
        throw ComplexError("chain_blocks: block lost its petal '" + id + "'");
      if (y.edges[static_cast<std::size_t>(e)].length != unit_length())
        throw ComplexError("chain_blocks: block petal is not unit length");
      petals.push_back(e);
    }
    if (target != unit_length()) y = scale(y, target);
    for (std::size_t j = 0; j < petals.size(); ++j) {
      const EdgeCell& ea = out.complex.edges[locus[j]];
      relabel_edge(y, petals[j], "glue." + ea.id, ea.label);
    }
    const int vb = rose_vertex(y, petals, "chain_blocks");

    const std::string prefix = "K" + std::to_string(i + 1) + ":";
    out.complex = amalgamate(out.complex, y, Subcomplex1{{va}, locus},
                             Subcomplex1{{vb}, petals}, prefix);

    ChainStage st;
    st.name = prefix;
    st.rank = r.k;
    st.vertices = static_cast<long long>(out.complex.vertices.size());
    st.edges = static_cast<long long>(out.complex.edges.size());
    st.faces = static_cast<long long>(out.complex.faces.size());
    st.npc = check_npc(out.complex);
    out.npc_ok = out.npc_ok && st.npc.pass;
    out.strict_ok = out.strict_ok && st.npc.strict;
    out.stages.push_back(std::move(st));
  }
  return out;
}

}  // namespace npcx
