#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Signals a broken structural assumption (mixed class, non-abelian center).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class HyperedgeKindTag { FreeLevelOne, FreeAbelianLevelOne, Centerless, WithCenter, Abelian };

std::string to_string(HyperedgeKindTag t);

struct HyperedgeKind {
  HyperedgeKindTag tag = HyperedgeKindTag::FreeLevelOne;
  std::vector<VertexId> ab;      // vertices commuting with the whole top class
  std::vector<VertexId> b_part;  // the rest of the lower-level vertices
};

struct Hyperedge {
  int level = 1;
  int top_class = -1;                // index into FlagsHypergraph::classes
  std::vector<int> contained;        // indices of lower hyperedges
  std::vector<int> class_ids;        // all classes in this hyperedge (incl. top)
  std::vector<VertexId> vertex_set;  // sorted
  HyperedgeKind kind;
};

struct FlagsHypergraph {
  std::vector<VertexClass> classes;            // ordered by least member
  std::vector<std::vector<char>> strictly_less;  // strictly_less[i][j]: class i < class j
  std::vector<Hyperedge> hyperedges;           // ordered by (level, least top member)
  std::vector<int> class_to_hyperedge;

  const Hyperedge& edge_of_class(int class_id) const {
    return hyperedges.at(class_to_hyperedge.at(class_id));
  }
  int class_of_vertex(VertexId v) const;
  /// Index of the hyperedge whose top class contains v.
  int edge_topped_by(VertexId v) const { return class_to_hyperedge.at(class_of_vertex(v)); }
};

/// The domination order on vertices: lk(u) ⊆ st(v) (non-strict inclusion).
bool leq(const SimpleGraph& g, VertexId u, VertexId v);

/// Equivalence classes of mutual domination, ordered by least member.
std::vector<VertexClass> vertex_classes(const SimpleGraph& g);

FlagsHypergraph build_flags_hypergraph(const SimpleGraph& g);

HyperedgeKind classify_hyperedge(const SimpleGraph& g, const FlagsHypergraph& fh,
                                 const Hyperedge& e);

std::string flags_to_json(const SimpleGraph& g, const FlagsHypergraph& fh);
std::string flags_to_dot(const SimpleGraph& g, const FlagsHypergraph& fh);

}  // namespace raag
