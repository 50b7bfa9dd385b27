#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

namespace raag {

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Clique: return "Clique";
    case ClassKind::AntiClique: return "AntiClique";
    case ClassKind::Singleton: return "Singleton";
  }
  return "?";
}

std::vector<VertexId> mask_to_vertices(std::uint64_t mask) {
  std::vector<VertexId> out;
  for (int v = 0; v < 64; ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

std::uint64_t vertices_to_mask(const std::vector<VertexId>& vs) {
  std::uint64_t m = 0;
  for (VertexId v : vs) m |= 1ull << v;
  return m;
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  for (auto& l : labels) {
    if (index_.count(l)) throw ParseError("duplicate vertex: " + l);
    index_[l] = static_cast<VertexId>(labels_.size());
    labels_.push_back(l);
  }
  if (labels_.size() > 60) throw ParseError("graph too large (more than 60 vertices)");
  adj_.assign(labels_.size(), 0);
  for (auto& [a, b] : edges) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end()) throw UnknownVertex(a);
    if (ib == index_.end()) throw UnknownVertex(b);
    if (ia->second == ib->second) throw ParseError("self-loop at vertex: " + a);
    add_edge(ia->second, ib->second);
  }
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

VertexId SimpleGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownVertex(label);
  return it->second;
}

SimpleGraph SimpleGraph::parse(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_edge_list(text);
  }
  throw ParseError("empty graph description");
}

SimpleGraph SimpleGraph::parse_edge_list(const std::string& text) {
  SimpleGraph g;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto intern = [&](const std::string& label) {
    auto it = g.index_.find(label);
    if (it != g.index_.end()) return it->second;
    VertexId v = static_cast<VertexId>(g.labels_.size());
    if (v >= 60) throw ParseError("graph too large (more than 60 vertices)", line_no);
    g.index_[label] = v;
    g.labels_.push_back(label);
    g.adj_.push_back(0);
    return v;
  };
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    any = true;
    if (tok.size() == 2 && tok[0] == "vertex") {
      if (g.index_.count(tok[1])) throw ParseError("duplicate vertex: " + tok[1], line_no);
      intern(tok[1]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw ParseError("self-loop at vertex: " + tok[0], line_no);
      VertexId u = intern(tok[0]);
      VertexId v = intern(tok[1]);
      g.add_edge(u, v);
    } else {
      throw ParseError("malformed line: expected 'u v' or 'vertex u'", line_no);
    }
  }
  if (!any) throw ParseError("empty graph description");
  return g;
}

SimpleGraph SimpleGraph::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing \"vertices\" array");
  std::vector<std::string> labels = j["vertices"].get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("malformed edge entry");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return SimpleGraph(std::move(labels), edges);
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v = u + 1; v < vertex_count(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (auto m : adj_) total += std::popcount(m);
  return total / 2;
}

std::uint64_t SimpleGraph::link_mask(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw UnknownVertex(std::to_string(v));
  return adj_[v];
}

std::uint64_t SimpleGraph::star_mask(VertexId v) const { return link_mask(v) | (1ull << v); }

std::vector<VertexId> SimpleGraph::link(VertexId v) const { return mask_to_vertices(link_mask(v)); }
std::vector<VertexId> SimpleGraph::star(VertexId v) const { return mask_to_vertices(star_mask(v)); }

std::uint64_t SimpleGraph::class_link_mask(const VertexClass& c) const {
  return link_mask(c.members.at(0)) & ~vertices_to_mask(c.members);
}

std::uint64_t SimpleGraph::class_star_mask(const VertexClass& c) const {
  return link_mask(c.members.at(0)) | vertices_to_mask(c.members);
}

std::vector<VertexId> SimpleGraph::class_link(const VertexClass& c) const {
  return mask_to_vertices(class_link_mask(c));
}

std::vector<VertexId> SimpleGraph::class_star(const VertexClass& c) const {
  return mask_to_vertices(class_star_mask(c));
}

std::vector<std::vector<VertexId>> SimpleGraph::components_in(std::uint64_t mask) const {
  std::vector<std::vector<VertexId>> comps;
  std::uint64_t seen = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (!((mask >> v) & 1u) || ((seen >> v) & 1u)) continue;
    std::uint64_t comp = 1ull << v;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      std::uint64_t next = adj_[x] & mask & ~comp;
      for (VertexId y : mask_to_vertices(next)) {
        comp |= 1ull << y;
        stack.push_back(y);
      }
    }
    seen |= comp;
    comps.push_back(mask_to_vertices(comp));
  }
  return comps;
}

SimpleGraph::ComponentSplit SimpleGraph::components_outside_star(const VertexClass& c) const {
  ComponentSplit split;
  for (auto& comp : components_in(full_mask() & ~class_star_mask(c))) {
    if (comp.size() == 1)
      split.singleton.push_back(comp[0]);
    else
      split.non_singleton.push_back(comp);
  }
  return split;
}

std::vector<std::vector<VertexId>> SimpleGraph::components() const {
  return components_in(full_mask());
}

bool SimpleGraph::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<VertexId>> SimpleGraph::symmetries(int cap) const {
  int n = vertex_count();
  if (n > cap)
    throw std::runtime_error("symmetry enumeration cap exceeded: " + std::to_string(n) + " > " +
                             std::to_string(cap));
  std::vector<int> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = std::popcount(adj_[v]);

  std::vector<std::vector<VertexId>> result;
  std::vector<VertexId> perm(n, -1);
  std::uint64_t used = 0;
  auto consistent = [&](VertexId v, VertexId image) {
    if (degree[v] != degree[image]) return false;
    for (VertexId u = 0; u < v; ++u)
      if (adjacent(u, v) != adjacent(perm[u], image)) return false;
    return true;
  };
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      result.push_back(perm);
      return;
    }
    for (VertexId image = 0; image < n; ++image) {
      if ((used >> image) & 1u) continue;
      if (!consistent(v, image)) continue;
      perm[v] = image;
      used |= 1ull << image;
      self(self, v + 1);
      used &= ~(1ull << image);
      perm[v] = -1;
    }
  };
  rec(rec, 0);
  // lexicographic image order puts the identity first
  return result;
}

std::string SimpleGraph::to_edge_list() const {
  std::ostringstream out;
  std::uint64_t touched = 0;
  for (auto [u, v] : edges()) {
    out << label(u) << ' ' << label(v) << '\n';
    touched |= (1ull << u) | (1ull << v);
  }
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (!((touched >> v) & 1u)) out << "vertex " << label(v) << '\n';
  return out.str();
}

std::string SimpleGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : edges()) j["edges"].push_back({label(u), label(v)});
  return j.dump();
}

}  // namespace raag
