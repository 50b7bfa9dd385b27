#include "raag/decomposition.hpp"

#include <sstream>

#include <json.hpp>

namespace raag {

GraphOfGroups build_graph_of_groups(const SimpleGraph& g, const FlagsHypergraph& fh,
                                    int hyperedge) {
  const Hyperedge& e = fh.hyperedges.at(hyperedge);
  const VertexClass& top = fh.classes.at(e.top_class);
  GraphOfGroups gog;
  gog.hyperedge = hyperedge;
  gog.killed_generators = g.class_link(top);

  bool abelian_top;
  if (e.level == 1)
    abelian_top = e.kind.tag == HyperedgeKindTag::FreeAbelianLevelOne;
  else
    abelian_top = top.kind == ClassKind::Clique;  // non-cyclic free abelian
  if (abelian_top)
    gog.vertex_groups.push_back(
        {VertexGroupDescriptor::Type::FreeAbelianClassGroup, top.members});
  else
    gog.loops_s = static_cast<int>(top.members.size());

  auto split = g.components_outside_star(top);
  for (auto& comp : split.non_singleton)
    gog.vertex_groups.push_back({VertexGroupDescriptor::Type::InducedSubgraphGroup, comp});
  gog.loops_t = static_cast<int>(split.singleton.size());
  return gog;
}

Word quotient_word(const SimpleGraph& g, const GraphOfGroups& gog, const Word& w) {
  std::uint64_t killed = vertices_to_mask(gog.killed_generators);
  Word kept;
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= g.vertex_count()) throw UnknownVertex(std::to_string(l.gen));
    if (!((killed >> l.gen) & 1u)) kept.push_back(l);
  }
  // the induced subgraph on the survivors inherits g's adjacency, so the
  // ambient normal form over surviving letters is the quotient normal form
  return normal_form(g, kept);
}

bool check_edge_stabilizers_trivial(const GraphOfGroups& gog) {
  return gog.edge_groups_trivial;
}

std::vector<LineAction> line_actions(const SimpleGraph& g, const FlagsHypergraph& fh,
                                     int hyperedge) {
  const Hyperedge& e = fh.hyperedges.at(hyperedge);
  if (e.kind.tag != HyperedgeKindTag::FreeAbelianLevelOne &&
      e.kind.tag != HyperedgeKindTag::Abelian)
    throw InvariantViolation("line actions require an abelian hyperedge group");
  std::vector<LineAction> actions;
  for (VertexId v : fh.classes.at(e.top_class).members) actions.push_back({v});
  return actions;
}

long line_translation(const Word& w, const LineAction& action) {
  long total = 0;
  for (const Letter& l : w)
    if (l.gen == action.surviving_generator) total += l.sign;
  return total;
}

static const char* type_name(VertexGroupDescriptor::Type t) {
  return t == VertexGroupDescriptor::Type::InducedSubgraphGroup ? "InducedSubgraphGroup"
                                                                : "FreeAbelianClassGroup";
}

std::string gog_to_json(const SimpleGraph& g, const GraphOfGroups& gog) {
  nlohmann::json j;
  j["hyperedge"] = gog.hyperedge;
  j["loops_s"] = gog.loops_s;
  j["loops_t"] = gog.loops_t;
  j["edge_groups"] = "trivial";
  j["killed_generators"] = nlohmann::json::array();
  for (VertexId v : gog.killed_generators) j["killed_generators"].push_back(g.label(v));
  j["vertex_groups"] = nlohmann::json::array();
  for (auto& vg : gog.vertex_groups) {
    nlohmann::json jv;
    jv["type"] = type_name(vg.type);
    jv["vertices"] = nlohmann::json::array();
    for (VertexId v : vg.vertices) jv["vertices"].push_back(g.label(v));
    j["vertex_groups"].push_back(jv);
  }
  return j.dump(2);
}

std::string gog_to_dot(const SimpleGraph& g, const GraphOfGroups& gog) {
  std::ostringstream out;
  out << "graph gog {\n  base [shape=point, label=\"\"];\n";
  int id = 0;
  for (auto& vg : gog.vertex_groups) {
    out << "  v" << id << " [shape=box, label=\"" << type_name(vg.type) << " {";
    for (size_t i = 0; i < vg.vertices.size(); ++i)
      out << (i ? "," : "") << g.label(vg.vertices[i]);
    out << "}\"];\n  base -- v" << id << " [label=\"1\"];\n";
    ++id;
  }
  for (int i = 0; i < gog.loops_s; ++i)
    out << "  base -- base [label=\"s" << i + 1 << " (1)\"];\n";
  for (int i = 0; i < gog.loops_t; ++i)
    out << "  base -- base [label=\"t" << i + 1 << " (1)\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace raag
