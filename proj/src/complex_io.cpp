#include "npcx/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace npcx {

std::string write_complex(const PE2Complex& c) {
  std::ostringstream out;
  out << "pe2complex 1\n";
  for (const auto& v : c.vertices) out << "vertex " << v.id << "\n";
  for (const auto& e : c.edges)
    out << "edge " << e.id << " " << c.vertices[e.tail].id << " "
        << c.vertices[e.head].id << " " << e.label << " "
        << length_str(e.length) << "\n";
  for (const auto& f : c.faces) {
    out << "face " << f.id << " " << shape_tag_str(f.shape) << " "
        << f.sides.size();
    for (const auto& d : f.sides)
      out << " " << c.edges[d.edge].id << (d.forward ? '+' : '-');
    for (const auto& a : f.angles) out << " " << rat_str(a);
    out << "\n";
  }
  return out.str();
}

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& msg) {
  throw ComplexError("parse_complex: line " + std::to_string(line_no) + ": " +
                     msg);
}

}  // namespace

PE2Complex parse_complex(const std::string& text) {
  PE2Complex c;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (!saw_header) {
      int version = 0;
      if (kind != "pe2complex" || !(ls >> version) || version != 1)
        fail(line_no, "expected header 'pe2complex 1'");
      saw_header = true;
      continue;
    }
    if (kind == "vertex") {
      std::string id;
      if (!(ls >> id)) fail(line_no, "vertex needs an id");
      c.add_vertex(id);
    } else if (kind == "edge") {
      std::string id, tail, head, label, len;
      if (!(ls >> id >> tail >> head >> label >> len))
        fail(line_no, "edge needs id, tail, head, label, length");
      int ti = c.vertex_index(tail);
      int hi = c.vertex_index(head);
      if (ti < 0) fail(line_no, "unknown tail vertex '" + tail + "'");
      if (hi < 0) fail(line_no, "unknown head vertex '" + head + "'");
      try {
        c.add_edge(id, ti, hi, parse_length(len), label);
      } catch (const std::invalid_argument& ex) {
        fail(line_no, ex.what());
      }
    } else if (kind == "face") {
      std::string id, shape;
      size_t m = 0;
      if (!(ls >> id >> shape >> m)) fail(line_no, "face needs id, shape, m");
      std::vector<DirectedEdgeRef> sides;
      for (size_t t = 0; t < m; ++t) {
        std::string tok;
        if (!(ls >> tok) || tok.size() < 2)
          fail(line_no, "face is missing side tokens");
        char dir = tok.back();
        if (dir != '+' && dir != '-')
          fail(line_no, "side token '" + tok + "' must end in '+' or '-'");
        int ei = c.edge_index(tok.substr(0, tok.size() - 1));
        if (ei < 0) fail(line_no, "unknown edge in side token '" + tok + "'");
        sides.push_back({ei, dir == '+'});
      }
      std::vector<Rat> angles;
      for (size_t t = 0; t < m; ++t) {
        std::string tok;
        if (!(ls >> tok)) fail(line_no, "face is missing angle tokens");
        try {
          angles.push_back(parse_rat(tok));
        } catch (const std::invalid_argument& ex) {
          fail(line_no, ex.what());
        }
      }
      try {
        c.add_face(id, parse_shape_tag(shape), std::move(sides),
                   std::move(angles));
      } catch (const ComplexError& ex) {
        fail(line_no, ex.what());
      }
    } else {
      fail(line_no, "unknown record '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) fail(line_no, "trailing token '" + extra + "'");
  }
  if (!saw_header) throw ComplexError("parse_complex: empty input");
  c.validate();
  return c;
}

void save_complex(const PE2Complex& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ComplexError("save_complex: cannot open " + path.string());
  out << write_complex(c);
  if (!out) throw ComplexError("save_complex: write failed for " + path.string());
}

PE2Complex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ComplexError("load_complex: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

}  // namespace npcx
