#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace raag {

using VertexId = int;

/// Thrown on malformed graph input; carries the offending line when known.
struct ParseError : std::runtime_error {
  int line;
  ParseError(std::string msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + std::move(msg)
                                       : std::move(msg)),
        line(line_no) {}
};

struct UnknownVertex : std::runtime_error {
  explicit UnknownVertex(const std::string& label)
      : std::runtime_error("unknown vertex: " + label) {}
};

enum class ClassKind { Clique, AntiClique, Singleton };

std::string to_string(ClassKind k);

/// An equivalence class of vertices under the mutual-domination relation.
struct VertexClass {
  std::vector<VertexId> members;  // sorted by vertex index
  ClassKind kind = ClassKind::Singleton;
};

/// Finite simple graph. Vertices are opaque string labels; the input order is
/// the canonical iteration and tie-breaking order everywhere downstream.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> labels,
              const std::vector<std::pair<std::string, std::string>>& edges);

  /// Parses either format A (edge list) or format B (JSON document),
  /// auto-detected by the first non-whitespace character.
  static SimpleGraph parse(const std::string& text);
  static SimpleGraph parse_edge_list(const std::string& text);
  static SimpleGraph parse_json(const std::string& text);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  VertexId index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

  bool adjacent(VertexId u, VertexId v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t adjacency_mask(VertexId v) const { return adj_[v]; }
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  int edge_count() const;

  std::vector<VertexId> link(VertexId v) const;
  std::vector<VertexId> star(VertexId v) const;
  std::uint64_t link_mask(VertexId v) const;
  std::uint64_t star_mask(VertexId v) const;

  std::vector<VertexId> class_link(const VertexClass& c) const;
  std::vector<VertexId> class_star(const VertexClass& c) const;
  std::uint64_t class_link_mask(const VertexClass& c) const;
  std::uint64_t class_star_mask(const VertexClass& c) const;

  struct ComponentSplit {
    std::vector<std::vector<VertexId>> non_singleton;  // ordered by least vertex
    std::vector<VertexId> singleton;                   // ordered by vertex
  };
  /// Connected components of the induced subgraph on the complement of the
  /// class star, partitioned by size.
  ComponentSplit components_outside_star(const VertexClass& c) const;

  /// Connected components of the induced subgraph on `mask`.
  std::vector<std::vector<VertexId>> components_in(std::uint64_t mask) const;
  std::vector<std::vector<VertexId>> components() const;
  bool is_connected() const;

  /// All adjacency-preserving vertex permutations, identity first, in
  /// lexicographic image order. Throws if the vertex count exceeds `cap`.
  std::vector<std::vector<VertexId>> symmetries(int cap = 10) const;

  std::string to_edge_list() const;
  std::string to_json() const;

  std::uint64_t full_mask() const {
    int n = vertex_count();
    return n >= 64 ? ~0ull : (1ull << n) - 1;
  }

 private:
  void add_edge(VertexId u, VertexId v);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::uint64_t> adj_;
};

std::vector<VertexId> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<VertexId>& vs);

}  // namespace raag
