#include "npcx/morse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace npcx {

int edge_letter(const EdgeCell& e) {
  const std::string& s = e.label;
  if (s.size() >= 2 && s[0] == 'a' && s[1] == '_') return 0;
  if (s.size() >= 2 && (s[0] == 'n' || s[0] == 'p') && s[1] == '_') {
    auto sep = s.rfind('_');
    try {
      int j = std::stoi(s.substr(sep + 1));
      if (j >= 1) return j;
    } catch (...) {
    }
  }
  throw ComplexError("edge_letter: label '" + s +
                     "' is not in the a/n/p naming scheme");
}

namespace {

struct FaceShape {
  int letter;   // common level of the two vertical sides
  int apex;     // corner between the two vertical sides
  int v_in;     // slot of the vertical arriving at the apex
  int v_out;    // slot of the vertical leaving the apex
  int h;        // slot of the horizontal side
};

// Identifies the apex corner of a one-horizontal, two-vertical
// triangle; returns nothing if the face is not of that shape.
std::optional<FaceShape> face_shape(const PE2Complex& c, const FaceCell& f) {
  if (f.sides.size() != 3) return std::nullopt;
  int letters[3];
  for (int t = 0; t < 3; ++t) letters[t] = edge_letter(c.edges[f.sides[t].edge]);
  for (int t = 0; t < 3; ++t) {
    int in = t, out = (t + 1) % 3, h = (t + 2) % 3;
    if (letters[in] >= 1 && letters[out] == letters[in] && letters[h] == 0)
      return FaceShape{letters[in], t, in, out, h};
  }
  return std::nullopt;
}

}  // namespace

std::vector<DirectionalLink> directional_links(const PE2Complex& c,
                                               const LinkGraph& lk) {
  std::map<std::pair<int, bool>, DirectionalLink> parts;
  for (size_t i = 0; i < lk.nodes.size(); ++i) {
    const LinkNode& n = lk.nodes[i];
    int letter = edge_letter(c.edges[n.edge]);
    if (letter == 0) continue;
    auto& part = parts[{letter, n.plus}];
    part.letter = letter;
    part.plus = n.plus;
    part.nodes.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < lk.edges.size(); ++i) {
    const LinkEdge& e = lk.edges[i];
    const LinkNode& a = lk.nodes[e.u];
    const LinkNode& b = lk.nodes[e.v];
    int la = edge_letter(c.edges[a.edge]);
    int lb = edge_letter(c.edges[b.edge]);
    if (la == 0 || lb == 0) continue;
    if (la != lb || a.plus != b.plus)
      throw ComplexError("directional_links: an apex corner mixes levels");
    parts[{la, a.plus}].edges.push_back(static_cast<int>(i));
  }

  std::vector<DirectionalLink> out;
  for (auto& [key, part] : parts) {
    std::map<int, int> degree;
    std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (other, edge)
    for (int n : part.nodes) degree[n] = 0;
    for (int ei : part.edges) {
      const LinkEdge& e = lk.edges[ei];
      ++degree[e.u];
      ++degree[e.v];
      adj[e.u].push_back({e.v, ei});
      adj[e.v].push_back({e.u, ei});
    }
    size_t reached = 0;
    if (!part.nodes.empty()) {
      std::set<int> seen{part.nodes[0]};
      std::deque<int> q{part.nodes[0]};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [v, ei] : adj[u])
          if (seen.insert(v).second) q.push_back(v);
      }
      reached = seen.size();
    }
    part.connected = reached == part.nodes.size();
    int max_deg = 0;
    for (auto& [n, d] : degree) max_deg = std::max(max_deg, d);
    part.cycle = part.connected && max_deg == 2 &&
                 part.edges.size() == part.nodes.size() &&
                 !part.nodes.empty();
    part.segment = part.connected && max_deg <= 2 &&
                   part.edges.size() + 1 == part.nodes.size();
    out.push_back(std::move(part));
  }
  return out;
}

HeightCertificate check_height(const PE2Complex& c) {
  if (c.vertices.size() != 1)
    throw ComplexError("check_height: expected a one-vertex complex");
  HeightCertificate cert;
  std::set<int> letters;
  for (const auto& e : c.edges) {
    int l = edge_letter(e);
    if (l >= 1) letters.insert(l);
  }
  cert.levels_ok = !letters.empty() &&
                   *letters.rbegin() == static_cast<int>(letters.size());
  cert.shapes_ok = true;
  for (const auto& f : c.faces)
    if (!face_shape(c, f)) cert.shapes_ok = false;
  LinkGraph lk = build_link(c, 0);
  cert.parts = directional_links(c, lk);
  cert.parts_ok = !cert.parts.empty();
  for (const auto& part : cert.parts)
    if (!part.segment) cert.parts_ok = false;
  return cert;
}

std::vector<LinkCycle> middle_cycles(const PE2Complex& c,
                                     const LinkGraph& lk) {
  std::vector<LinkCycle> out;
  for (const DirectionalLink& part : directional_links(c, lk)) {
    if (!part.cycle)
      throw ComplexError("middle_cycles: a directional part is not a circle");
    std::map<int, std::vector<int>> at_node;
    for (int ei : part.edges) {
      at_node[lk.edges[ei].u].push_back(ei);
      at_node[lk.edges[ei].v].push_back(ei);
    }
    LinkCycle cyc;
    int start = *std::min_element(part.nodes.begin(), part.nodes.end());
    int node = start;
    int last_edge = -1;
    do {
      cyc.nodes.push_back(node);
      const auto& inc = at_node.at(node);
      int ei = std::min(inc[0], inc[1]);
      if (ei == last_edge) ei = std::max(inc[0], inc[1]);
      cyc.steps.push_back(ei);
      cyc.forward.push_back(lk.edges[ei].u == node);
      node = lk.edges[ei].u == node ? lk.edges[ei].v : lk.edges[ei].u;
      last_edge = ei;
    } while (node != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

namespace {

// One propagation constraint between the kernel words of two vertical
// loops, read off an apex corner.
struct ApexData {
  int face;
  int v_in_edge;   // complex edge arriving at the apex
  int v_out_edge;  // complex edge leaving the apex
  int h_gen;       // kernel index of the horizontal side
  int delta;       // its exponent in the rotated boundary word
  bool plus;       // which directional part the apex corner lies in
};

}  // namespace

Monodromy extract_monodromy(const PE2Complex& c,
                            const std::vector<int>& rose_edges,
                            MonodromyCertificate* cert_out) {
  HeightCertificate height = check_height(c);
  if (!height.ok())
    throw ComplexError(
        "extract_monodromy: height certificate failed; directional parts "
        "must be segments");

  Monodromy m;
  std::map<std::string, int> kernel_index;
  for (const auto& e : c.edges)
    if (edge_letter(e) == 0) m.kernel_names.push_back(e.id);
  std::sort(m.kernel_names.begin(), m.kernel_names.end());
  for (size_t i = 0; i < m.kernel_names.size(); ++i)
    kernel_index[m.kernel_names[i]] = static_cast<int>(i);
  const int rank = static_cast<int>(m.kernel_names.size());

  int k = 0;
  for (const auto& e : c.edges) k = std::max(k, edge_letter(e));
  for (int j = 1; j <= k; ++j)
    m.base_names.push_back("t_" + std::to_string(j));

  // One rose petal per level, normalized to carry the empty word.
  std::vector<int> petal(k + 1, -1);
  for (int e : rose_edges) {
    int j = edge_letter(c.edges.at(e));
    if (j == 0 || petal[j] != -1)
      throw ComplexError("extract_monodromy: rose must have one vertical "
                         "petal per level");
    petal[j] = e;
  }
  for (int j = 1; j <= k; ++j)
    if (petal[j] == -1)
      throw ComplexError("extract_monodromy: no rose petal for level " +
                         std::to_string(j));

  LinkGraph lk = build_link(c, 0);

  // Apex bookkeeping, indexed by the apex link edge.
  std::map<int, ApexData> apex;  // link edge index -> data
  for (size_t f = 0; f < c.faces.size(); ++f) {
    const FaceCell& face = c.faces[f];
    auto shape = face_shape(c, face);
    ApexData a;
    a.face = static_cast<int>(f);
    a.v_in_edge = face.sides[shape->v_in].edge;
    a.v_out_edge = face.sides[shape->v_out].edge;
    a.h_gen = kernel_index.at(c.edges[face.sides[shape->h].edge].id);
    a.delta = face.sides[shape->h].forward ? 1 : -1;
    a.plus = !face.sides[shape->v_out].forward;  // leave end is the head
    // Locate the apex corner among the link edges of this face.
    int found = -1;
    for (size_t i = 0; i < lk.edges.size(); ++i)
      if (lk.edges[i].face == a.face && lk.edges[i].corner == shape->apex)
        found = static_cast<int>(i);
    if (found < 0) throw ComplexError("extract_monodromy: lost an apex");
    apex[found] = a;
  }

  m.action.kernel_rank = rank;
  m.action.base_rank = k;
  m.action.phi.resize(k);

  std::map<int, FreeWord> w_word;  // vertical edge -> forward kernel word
  for (const auto& part : height.parts) {
    // Adjacency through apex corners within this directional part.
    std::map<int, std::vector<int>> at_node;
    for (int ei : part.edges) {
      at_node[lk.edges[ei].u].push_back(ei);
      at_node[lk.edges[ei].v].push_back(ei);
    }
    int j = part.letter;
    int start = lk.node_index(petal[j], part.plus);
    if (start < 0)
      throw ComplexError("extract_monodromy: rose petal end missing");

    // The stored apex corner runs from the arriving vertical V1 to the
    // leaving vertical V2. On the plus part the face relator reads
    // w(V2) = u^delta * w(V1); on the minus part the mirrored words obey
    // v(V1) = v(V2) * u^delta.
    std::map<int, FreeWord> words;
    words[start] = FreeWord{};
    std::deque<int> queue{start};
    std::set<int> used_edges;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      for (int ei : at_node[node]) {
        if (used_edges.count(ei)) continue;
        used_edges.insert(ei);
        const LinkEdge& le = lk.edges[ei];
        const ApexData& a = apex.at(ei);
        int other = le.u == node ? le.v : le.u;
        if (words.count(other)) continue;
        FreeWord step = FreeWord::generator(a.h_gen, a.delta);
        const FreeWord& here = words.at(node);
        FreeWord next;
        if (part.plus) {
          // from V1 to V2 prepends u^delta, backwards removes it
          next = le.u == node ? concat(step, here) : concat(inverse(step), here);
        } else {
          next = le.u == node ? concat(here, inverse(step)) : concat(here, step);
        }
        words[other] = std::move(next);
        queue.push_back(other);
      }
    }
    if (words.size() != part.nodes.size())
      throw ComplexError("extract_monodromy: a directional part was not "
                         "fully reached from its rose petal");

    if (part.plus) {
      for (auto& [node, w] : words) w_word[lk.nodes[node].edge] = w;
      continue;
    }

    // Minus part: read one inverse image per horizontal loop off the
    // plus apexes is done elsewhere; here the minus apexes of this part
    // define the forward images once the plus pass fixed the w words.
    // Both passes are finished below, after all parts are walked.
    for (auto& [node, w] : words)
      w_word[-1 - lk.nodes[node].edge] = w;  // mirrored words, keyed negatively
  }

  // Images: minus apexes define phi, plus apexes define the inverses.
  std::vector<std::vector<FreeWord>> images(k + 1,
                                            std::vector<FreeWord>(rank)),
      inv_images(k + 1, std::vector<FreeWord>(rank));
  std::vector<std::vector<bool>> have_img(k + 1, std::vector<bool>(rank)),
      have_inv(k + 1, std::vector<bool>(rank));
  for (const auto& [ei, a] : apex) {
    int j = edge_letter(c.edges[a.v_in_edge]);
    if (!a.plus) {
      // phi_j(u^delta) = w(V2)^-1 * w(V1)
      FreeWord val = concat(inverse(w_word.at(a.v_out_edge)),
                            w_word.at(a.v_in_edge));
      if (a.delta < 0) val = inverse(val);
      if (have_img[j][a.h_gen])
        throw ComplexError("extract_monodromy: a horizontal loop received "
                           "two forward images");
      images[j][a.h_gen] = std::move(val);
      have_img[j][a.h_gen] = true;
    } else {
      // psi_j(u^delta) = v(V2) * v(V1)^-1, with v the mirrored words.
      FreeWord val = concat(w_word.at(-1 - a.v_out_edge),
                            inverse(w_word.at(-1 - a.v_in_edge)));
      if (a.delta < 0) val = inverse(val);
      if (have_inv[j][a.h_gen])
        throw ComplexError("extract_monodromy: a horizontal loop received "
                           "two inverse images");
      inv_images[j][a.h_gen] = std::move(val);
      have_inv[j][a.h_gen] = true;
    }
  }
  for (int j = 1; j <= k; ++j)
    for (int g = 0; g < rank; ++g)
      if (!have_img[j][g] || !have_inv[j][g])
        throw ComplexError("extract_monodromy: some horizontal loop has no "
                           "image at level " + std::to_string(j));

  MonodromyCertificate cert;
  for (int j = 1; j <= k; ++j) {
    FreeAutomorphism phi;
    phi.rank = rank;
    phi.images = std::move(images[j]);
    phi.inverse_images = std::move(inv_images[j]);
    if (!verify_inverse(phi))
      throw ComplexError("extract_monodromy: level " + std::to_string(j) +
                         " images failed the inverse check");
    m.action.phi[j - 1] = std::move(phi);
  }
  cert.inverses_ok = true;

  for (const auto& e : c.edges) {
    if (edge_letter(e) == 0) continue;
    int idx = static_cast<int>(&e - c.edges.data());
    m.vertical_words.push_back({e.id, w_word.at(idx)});
  }
  std::sort(m.vertical_words.begin(), m.vertical_words.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  cert.rose_normalized = true;
  for (int j = 1; j <= k; ++j) {
    const std::string& id = c.edges[petal[j]].id;
    auto it = std::find_if(m.vertical_words.begin(), m.vertical_words.end(),
                           [&](const auto& p) { return p.first == id; });
    if (it == m.vertical_words.end() || !it->second.empty())
      cert.rose_normalized = false;
  }

  // Every face relator must die in the extension.
  cert.relators_ok = true;
  for (size_t f = 0; f < c.faces.size(); ++f) {
    SemidirectElement acc;
    for (const auto& d : c.faces[f].sides) {
      SemidirectElement g = edge_image(m, c, d.edge, d.forward);
      acc = sd_mult(m.action, acc, g);
    }
    ++cert.relators_checked;
    if (!acc.trivial()) cert.relators_ok = false;
  }
  if (!cert.relators_ok || !cert.rose_normalized)
    throw ComplexError("extract_monodromy: verification failed");
  if (cert_out) *cert_out = cert;
  return m;
}

SemidirectElement edge_image(const Monodromy& m, const PE2Complex& c,
                             int edge, bool forward) {
  const EdgeCell& e = c.edges.at(edge);
  int letter = edge_letter(e);
  SemidirectElement g;
  if (letter == 0) {
    auto it = std::find(m.kernel_names.begin(), m.kernel_names.end(), e.id);
    if (it == m.kernel_names.end())
      throw ComplexError("edge_image: unknown horizontal loop " + e.id);
    g.kernel = FreeWord::generator(
        static_cast<int>(it - m.kernel_names.begin()));
  } else {
    auto it = std::find_if(m.vertical_words.begin(), m.vertical_words.end(),
                           [&](const auto& p) { return p.first == e.id; });
    if (it == m.vertical_words.end())
      throw ComplexError("edge_image: unknown vertical loop " + e.id);
    g.kernel = it->second;
    g.base = FreeWord::generator(letter - 1);
  }
  if (!forward) g = sd_inverse(m.action, g);
  return g;
}

std::string monodromy_str(const Monodromy& m) {
  std::ostringstream out;
  out << "monodromy 1\n";
  for (const auto& name : m.kernel_names) out << "kernel " << name << "\n";
  for (const auto& name : m.base_names) out << "base " << name << "\n";
  for (const auto& [id, w] : m.vertical_words)
    out << "vertical " << id << " " << word_str(w, m.kernel_names) << "\n";
  for (size_t j = 0; j < m.action.phi.size(); ++j)
    for (int g = 0; g < m.action.kernel_rank; ++g)
      out << "phi " << m.base_names[j] << " " << m.kernel_names[g] << " "
          << word_str(m.action.phi[j].images[g], m.kernel_names) << "\n";
  for (size_t j = 0; j < m.action.phi.size(); ++j)
    for (int g = 0; g < m.action.kernel_rank; ++g)
      out << "psi " << m.base_names[j] << " " << m.kernel_names[g] << " "
          << word_str(m.action.phi[j].inverse_images[g], m.kernel_names)
          << "\n";
  return out.str();
}

namespace {

std::string trimmed(std::string s) {
  auto from = s.find_first_not_of(" \t\r");
  auto to = s.find_last_not_of(" \t\r");
  if (from == std::string::npos) return "";
  return s.substr(from, to - from + 1);
}

}  // namespace

Monodromy parse_monodromy(const std::string& text) {
  Monodromy m;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::vector<std::tuple<std::string, std::string, std::string, bool>> maps;
  std::vector<std::pair<std::string, std::string>> verticals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (!header) {
      int version = 0;
      if (kind != "monodromy" || !(ls >> version) || version != 1)
        throw ComplexError("parse_monodromy: bad header");
      header = true;
      continue;
    }
    if (kind == "kernel") {
      std::string id;
      ls >> id;
      m.kernel_names.push_back(id);
    } else if (kind == "base") {
      std::string id;
      ls >> id;
      m.base_names.push_back(id);
    } else if (kind == "vertical") {
      std::string id;
      ls >> id;
      std::string rest;
      std::getline(ls, rest);
      verticals.push_back({id, trimmed(rest)});
    } else if (kind == "phi" || kind == "psi") {
      std::string tj, gen;
      ls >> tj >> gen;
      std::string rest;
      std::getline(ls, rest);
      maps.push_back({tj, gen, trimmed(rest), kind == "phi"});
    } else {
      throw ComplexError("parse_monodromy: unknown record '" + kind + "'");
    }
  }
  if (!header) throw ComplexError("parse_monodromy: missing header");
  const int rank = static_cast<int>(m.kernel_names.size());
  const int k = static_cast<int>(m.base_names.size());
  m.action.kernel_rank = rank;
  m.action.base_rank = k;
  m.action.phi.assign(k, {});
  for (auto& a : m.action.phi) {
    a.rank = rank;
    a.images.resize(rank);
    a.inverse_images.resize(rank);
  }
  auto base_index = [&](const std::string& tj) {
    auto it = std::find(m.base_names.begin(), m.base_names.end(), tj);
    if (it == m.base_names.end())
      throw ComplexError("parse_monodromy: unknown base letter " + tj);
    return static_cast<int>(it - m.base_names.begin());
  };
  auto kernel_idx = [&](const std::string& g) {
    auto it = std::find(m.kernel_names.begin(), m.kernel_names.end(), g);
    if (it == m.kernel_names.end())
      throw ComplexError("parse_monodromy: unknown kernel loop " + g);
    return static_cast<int>(it - m.kernel_names.begin());
  };
  for (const auto& [id, wtext] : verticals)
    m.vertical_words.push_back({id, parse_word(wtext, m.kernel_names)});
  for (const auto& [tj, gen, wtext, is_phi] : maps) {
    FreeWord w = parse_word(wtext, m.kernel_names);
    auto& a = m.action.phi[base_index(tj)];
    if (is_phi)
      a.images[kernel_idx(gen)] = std::move(w);
    else
      a.inverse_images[kernel_idx(gen)] = std::move(w);
  }
  return m;
}

}  // namespace npcx
