#include "raag/flags.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace raag {

std::string to_string(HyperedgeKindTag t) {
  switch (t) {
    case HyperedgeKindTag::FreeLevelOne: return "FreeLevelOne";
    case HyperedgeKindTag::FreeAbelianLevelOne: return "FreeAbelianLevelOne";
    case HyperedgeKindTag::Centerless: return "Centerless";
    case HyperedgeKindTag::WithCenter: return "WithCenter";
    case HyperedgeKindTag::Abelian: return "Abelian";
  }
  return "?";
}

bool leq(const SimpleGraph& g, VertexId u, VertexId v) {
  return (g.link_mask(u) & ~g.star_mask(v)) == 0;
}

int FlagsHypergraph::class_of_vertex(VertexId v) const {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    for (VertexId m : classes[i].members)
      if (m == v) return i;
  throw UnknownVertex(std::to_string(v));
}

std::vector<VertexClass> vertex_classes(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<VertexClass> classes;
  std::vector<char> assigned(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    VertexClass c;
    for (VertexId u = v; u < n; ++u)
      if (!assigned[u] && leq(g, v, u) && leq(g, u, v)) {
        c.members.push_back(u);
        assigned[u] = 1;
      }
    if (c.members.size() == 1) {
      c.kind = ClassKind::Singleton;
    } else {
      bool all_adj = true, none_adj = true;
      for (size_t i = 0; i < c.members.size(); ++i)
        for (size_t j = i + 1; j < c.members.size(); ++j)
          (g.adjacent(c.members[i], c.members[j]) ? none_adj : all_adj) = false;
      if (all_adj)
        c.kind = ClassKind::Clique;
      else if (none_adj)
        c.kind = ClassKind::AntiClique;
      else
        throw InvariantViolation("mixed vertex class: some member pairs adjacent, others not");
    }
    classes.push_back(std::move(c));
  }
  // classes are ordered by least member because vertices are scanned in order
  return classes;
}

static std::vector<std::vector<char>> class_order(const SimpleGraph& g,
                                                  const std::vector<VertexClass>& classes) {
  int k = static_cast<int>(classes.size());
  std::vector<std::vector<char>> less(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      bool rel = leq(g, classes[i].members[0], classes[j].members[0]);
      // well-definedness: every representative pair must agree
      for (VertexId u : classes[i].members)
        for (VertexId v : classes[j].members)
          if (leq(g, u, v) != rel)
            throw InvariantViolation("class order disagrees across representatives");
      less[i][j] = rel ? 1 : 0;
    }
  return less;
}

HyperedgeKind classify_hyperedge(const SimpleGraph& g, const FlagsHypergraph& fh,
                                 const Hyperedge& e) {
  const VertexClass& top = fh.classes.at(e.top_class);
  HyperedgeKind kind;
  if (e.level == 1) {
    kind.tag = top.kind == ClassKind::AntiClique ? HyperedgeKindTag::FreeLevelOne
                                                 : HyperedgeKindTag::FreeAbelianLevelOne;
    return kind;
  }
  std::uint64_t top_mask = vertices_to_mask(top.members);
  std::uint64_t lower = vertices_to_mask(e.vertex_set) & ~top_mask;
  std::uint64_t ab = 0;
  for (VertexId w : mask_to_vertices(lower))
    if ((top_mask & ~g.link_mask(w)) == 0) ab |= 1ull << w;
  kind.ab = mask_to_vertices(ab);
  kind.b_part = mask_to_vertices(lower & ~ab);
  for (size_t i = 0; i < kind.ab.size(); ++i)
    for (size_t j = i + 1; j < kind.ab.size(); ++j)
      if (!g.adjacent(kind.ab[i], kind.ab[j]))
        throw InvariantViolation("center vertices of a hyperedge are not pairwise adjacent");
  if (kind.ab.empty())
    kind.tag = HyperedgeKindTag::Centerless;
  else if (kind.b_part.empty() && top.kind != ClassKind::AntiClique)
    kind.tag = HyperedgeKindTag::Abelian;
  else
    kind.tag = HyperedgeKindTag::WithCenter;
  return kind;
}

FlagsHypergraph build_flags_hypergraph(const SimpleGraph& g) {
  FlagsHypergraph fh;
  fh.classes = vertex_classes(g);
  fh.strictly_less = class_order(g, fh.classes);
  int k = static_cast<int>(fh.classes.size());
  fh.class_to_hyperedge.assign(k, -1);

  std::vector<char> remaining(k, 1);
  int remaining_count = k;
  for (int level = 1; remaining_count > 0; ++level) {
    std::vector<int> maximal;
    for (int i = 0; i < k; ++i) {
      if (!remaining[i]) continue;
      bool is_max = true;
      for (int j = 0; j < k && is_max; ++j)
        if (remaining[j] && j != i && fh.strictly_less[i][j]) is_max = false;
      if (is_max) maximal.push_back(i);
    }
    if (maximal.empty())
      throw InvariantViolation("no maximal class found; class order is not a partial order");
    for (int ci : maximal) {
      Hyperedge e;
      e.level = level;
      e.top_class = ci;
      std::set<int> class_ids{ci};
      for (int hi = 0; hi < static_cast<int>(fh.hyperedges.size()); ++hi) {
        const Hyperedge& lower = fh.hyperedges[hi];
        bool all_bigger = true;
        for (int cj : lower.class_ids)
          if (!fh.strictly_less[ci][cj]) all_bigger = false;
        if (all_bigger) {
          e.contained.push_back(hi);
          class_ids.insert(lower.class_ids.begin(), lower.class_ids.end());
        }
      }
      e.class_ids.assign(class_ids.begin(), class_ids.end());
      std::uint64_t vmask = 0;
      for (int cj : e.class_ids) vmask |= vertices_to_mask(fh.classes[cj].members);
      e.vertex_set = mask_to_vertices(vmask);
      fh.class_to_hyperedge[ci] = static_cast<int>(fh.hyperedges.size());
      fh.hyperedges.push_back(std::move(e));
    }
    for (int ci : maximal) remaining[ci] = 0;
    remaining_count -= static_cast<int>(maximal.size());
  }
  for (auto& e : fh.hyperedges) e.kind = classify_hyperedge(g, fh, e);
  return fh;
}

static nlohmann::json labels_of(const SimpleGraph& g, const std::vector<VertexId>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (VertexId v : vs) a.push_back(g.label(v));
  return a;
}

std::string flags_to_json(const SimpleGraph& g, const FlagsHypergraph& fh) {
  nlohmann::json j;
  j["classes"] = nlohmann::json::array();
  for (auto& c : fh.classes)
    j["classes"].push_back({{"members", labels_of(g, c.members)}, {"kind", to_string(c.kind)}});
  j["hyperedges"] = nlohmann::json::array();
  for (auto& e : fh.hyperedges) {
    nlohmann::json je;
    je["level"] = e.level;
    je["top_class"] = e.top_class;
    je["contained"] = e.contained;
    je["vertex_set"] = labels_of(g, e.vertex_set);
    je["kind"] = to_string(e.kind.tag);
    je["ab"] = labels_of(g, e.kind.ab);
    je["b"] = labels_of(g, e.kind.b_part);
    j["hyperedges"].push_back(je);
  }
  return j.dump(2);
}

std::string flags_to_dot(const SimpleGraph& g, const FlagsHypergraph& fh) {
  static const char* palette[] = {"lightblue", "lightgreen", "lightyellow",
                                  "lightpink", "lightgrey", "orange"};
  std::ostringstream out;
  out << "digraph flags {\n  rankdir=BT;\n";
  for (int i = 0; i < static_cast<int>(fh.hyperedges.size()); ++i) {
    const Hyperedge& e = fh.hyperedges[i];
    const VertexClass& top = fh.classes[e.top_class];
    out << "  h" << i << " [shape=box, style=filled, fillcolor="
        << palette[(e.level - 1) % 6] << ", label=\"L" << e.level << " {";
    for (size_t m = 0; m < top.members.size(); ++m)
      out << (m ? "," : "") << g.label(top.members[m]);
    out << "} " << to_string(e.kind.tag) << "\"];\n";
    for (int c : e.contained) out << "  h" << c << " -> h" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace raag
