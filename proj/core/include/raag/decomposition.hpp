#pragma once

#include <string>
#include <vector>

#include "raag/flags.hpp"
#include "raag/word.hpp"

namespace raag {

struct VertexGroupDescriptor {
  enum class Type { InducedSubgraphGroup, FreeAbelianClassGroup };
  Type type;
  std::vector<VertexId> vertices;
};

/// Graph-of-groups decomposition attached to a hyperedge: vertex group
/// descriptors, loop counts, the killed generator set, all edge groups trivial.
struct GraphOfGroups {
  int hyperedge = -1;
  std::vector<VertexGroupDescriptor> vertex_groups;
  int loops_s = 0;  // loops for free top-class generators
  int loops_t = 0;  // loops for isolated-vertex components
  std::vector<VertexId> killed_generators;  // class link of the top class
  bool edge_groups_trivial = true;
};

GraphOfGroups build_graph_of_groups(const SimpleGraph& g, const FlagsHypergraph& fh,
                                    int hyperedge);

/// Image of w in the fundamental group: delete killed letters, then take the
/// normal form over the induced subgraph on the survivors.
Word quotient_word(const SimpleGraph& g, const GraphOfGroups& gog, const Word& w);

/// Structural assertion of Def-style weak acylindricity: every edge group is
/// the trivial constant.
bool check_edge_stabilizers_trivial(const GraphOfGroups& gog);

struct LineAction {
  VertexId surviving_generator;
};

/// One line action per top-class member; only for abelian hyperedge groups.
std::vector<LineAction> line_actions(const SimpleGraph& g, const FlagsHypergraph& fh,
                                     int hyperedge);

/// Translation length of w on the line: its exponent sum in the survivor.
long line_translation(const Word& w, const LineAction& action);

std::string gog_to_json(const SimpleGraph& g, const GraphOfGroups& gog);
std::string gog_to_dot(const SimpleGraph& g, const GraphOfGroups& gog);

}  // namespace raag
