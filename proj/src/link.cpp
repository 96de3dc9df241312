#include "npcx/link.hpp"

#include <sstream>

namespace npcx {

int LinkGraph::node_index(int edge, bool plus) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].edge == edge && nodes[i].plus == plus)
      return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> LinkGraph::incidence() const {
  std::vector<std::vector<int>> inc(nodes.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].u].push_back(static_cast<int>(i));
    if (edges[i].v != edges[i].u)
      inc[edges[i].v].push_back(static_cast<int>(i));
  }
  return inc;
}

namespace {

int arrive_node(const LinkGraph& lk, const DirectedEdgeRef& d) {
  return lk.node_index(d.edge, d.forward);
}

int leave_node(const LinkGraph& lk, const DirectedEdgeRef& d) {
  return lk.node_index(d.edge, !d.forward);
}

}  // namespace

LinkGraph build_link(const PE2Complex& c, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(c.vertices.size()))
    throw ComplexError("build_link: bad vertex index");
  LinkGraph lk;
  lk.vertex = vertex;
  for (size_t e = 0; e < c.edges.size(); ++e) {
    if (c.edges[e].head == vertex) lk.nodes.push_back({static_cast<int>(e), true});
    if (c.edges[e].tail == vertex) lk.nodes.push_back({static_cast<int>(e), false});
  }
  for (size_t f = 0; f < c.faces.size(); ++f) {
    const FaceCell& face = c.faces[f];
    const size_t m = face.sides.size();
    for (size_t t = 0; t < m; ++t) {
      if (c.side_head(face.sides[t]) != vertex) continue;
      int u = arrive_node(lk, face.sides[t]);
      int v = leave_node(lk, face.sides[(t + 1) % m]);
      if (u < 0 || v < 0)
        throw ComplexError("build_link: corner references a missing end");
      lk.edges.push_back({u, v, face.angles[t], static_cast<int>(f),
                          static_cast<int>(t)});
    }
  }
  return lk;
}

std::vector<LinkGraph> build_links(const PE2Complex& c) {
  std::vector<LinkGraph> out;
  out.reserve(c.vertices.size());
  for (size_t v = 0; v < c.vertices.size(); ++v)
    out.push_back(build_link(c, static_cast<int>(v)));
  return out;
}

std::string link_node_name(const PE2Complex& c, const LinkGraph& lk,
                           int node) {
  const LinkNode& n = lk.nodes.at(node);
  return c.edges[n.edge].id + (n.plus ? "+" : "-");
}

std::string link_dot(const PE2Complex& c, const LinkGraph& lk) {
  std::ostringstream out;
  out << "graph \"link of " << c.vertices[lk.vertex].id << "\" {\n";
  for (size_t i = 0; i < lk.nodes.size(); ++i)
    out << "  n" << i << " [label=\""
        << link_node_name(c, lk, static_cast<int>(i)) << "\"];\n";
  for (const auto& e : lk.edges)
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << rat_str(e.angle)
        << "pi\"];  // " << c.faces[e.face].id << " corner " << e.corner
        << "\n";
  out << "}\n";
  return out.str();
}

LinkDotData link_dot_data(const PE2Complex& c, const LinkGraph& lk) {
  LinkDotData d;
  d.title = "link of " + c.vertices[lk.vertex].id;
  for (size_t i = 0; i < lk.nodes.size(); ++i)
    d.labels.push_back(link_node_name(c, lk, static_cast<int>(i)));
  for (const auto& e : lk.edges) d.arcs.push_back({e.u, e.v, e.angle});
  return d;
}

namespace {

std::string quoted(const std::string& line, const char* what) {
  const auto open = line.find('"');
  const auto close = line.find('"', open + 1);
  if (open == std::string::npos || close == std::string::npos)
    throw std::invalid_argument(std::string("parse_link_dot: missing ") +
                                what);
  return line.substr(open + 1, close - open - 1);
}

}  // namespace

LinkDotData parse_link_dot(const std::string& text) {
  LinkDotData d;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("graph ", 0) != 0)
    throw std::invalid_argument("parse_link_dot: missing graph header");
  d.title = quoted(line, "title");
  while (std::getline(is, line)) {
    if (line == "}") return d;
    if (line.rfind("  n", 0) != 0)
      throw std::invalid_argument("parse_link_dot: unexpected line");
    if (line.find(" -- ") == std::string::npos) {
      const int node = std::stoi(line.substr(3));
      if (node != static_cast<int>(d.labels.size()))
        throw std::invalid_argument("parse_link_dot: nodes out of order");
      d.labels.push_back(quoted(line, "node label"));
      continue;
    }
    LinkDotData::Arc a;
    std::size_t pos = 3;
    a.u = std::stoi(line.substr(pos), &pos);
    const auto dash = line.find(" -- n", pos + 3);
    if (dash == std::string::npos)
      throw std::invalid_argument("parse_link_dot: bad arc");
    a.v = std::stoi(line.substr(dash + 5));
    std::string label = quoted(line, "angle");
    if (label.size() < 3 || label.substr(label.size() - 2) != "pi")
      throw std::invalid_argument("parse_link_dot: angle is not in pi units");
    a.angle = parse_rat(label.substr(0, label.size() - 2));
    d.arcs.push_back(a);
  }
  throw std::invalid_argument("parse_link_dot: missing closing brace");
}

}  // namespace npcx
