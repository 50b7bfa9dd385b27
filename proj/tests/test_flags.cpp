#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "raag/corpus.hpp"
#include "raag/flags.hpp"

using namespace raag;

static SimpleGraph P3() { return SimpleGraph::parse_edge_list("a b\nb c\n"); }
static SimpleGraph P4() { return SimpleGraph::parse_edge_list("a b\nb c\nc d\n"); }

TEST_CASE("domination order on P3") {
  SimpleGraph g = P3();
  VertexId a = g.index_of("a"), b = g.index_of("b"), c = g.index_of("c");
  CHECK(leq(g, a, b));
  CHECK(leq(g, a, c));
  CHECK(leq(g, c, a));
  CHECK(!leq(g, b, a));
  CHECK(leq(g, b, b));
}

TEST_CASE("domination matches the exhaustive table on the 4-vertex corpus") {
  for (const SimpleGraph& g : corpus(1, 4)) {
    auto table = oracle::leq_table(g);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(leq(g, u, v) == table[u][v]);
  }
}

TEST_CASE("domination is reflexive and transitive over the corpus") {
  for (const SimpleGraph& g : corpus(1, 4)) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      CHECK(leq(g, u, u));
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          if (leq(g, u, v) && leq(g, v, w)) CHECK(leq(g, u, w));
    }
  }
}

TEST_CASE("vertex classes") {
  SimpleGraph k3 = SimpleGraph::parse_edge_list("a b\nb c\na c\n");
  auto ck3 = vertex_classes(k3);
  REQUIRE(ck3.size() == 1);
  CHECK(ck3[0].kind == ClassKind::Clique);

  SimpleGraph c4 = SimpleGraph::parse_edge_list("a b\nb c\nc d\nd a\n");
  auto cc4 = vertex_classes(c4);
  REQUIRE(cc4.size() == 2);
  CHECK(cc4[0].kind == ClassKind::AntiClique);
  CHECK(cc4[0].members == std::vector<VertexId>{0, 2});
  CHECK(cc4[1].members == std::vector<VertexId>{1, 3});
}

TEST_CASE("P3 hypergraph fixture") {
  SimpleGraph g = P3();
  FlagsHypergraph fh = build_flags_hypergraph(g);
  REQUIRE(fh.hyperedges.size() == 2);
  const Hyperedge& e1 = fh.hyperedges[0];
  CHECK(e1.level == 1);
  CHECK(e1.vertex_set == std::vector<VertexId>{g.index_of("b")});
  CHECK(e1.kind.tag == HyperedgeKindTag::FreeAbelianLevelOne);
  const Hyperedge& e2 = fh.hyperedges[1];
  CHECK(e2.level == 2);
  CHECK(e2.vertex_set == std::vector<VertexId>{0, 1, 2});
  CHECK(e2.kind.tag == HyperedgeKindTag::WithCenter);
  CHECK(e2.kind.ab == std::vector<VertexId>{g.index_of("b")});
  CHECK(e2.kind.b_part.empty());
  CHECK(e2.contained == std::vector<int>{0});
}

TEST_CASE("P4 hypergraph fixture") {
  SimpleGraph g = P4();
  FlagsHypergraph fh = build_flags_hypergraph(g);
  REQUIRE(fh.hyperedges.size() == 4);
  VertexId a = 0, b = 1, c = 2, d = 3;
  CHECK(fh.hyperedges[0].vertex_set == std::vector<VertexId>{b});
  CHECK(fh.hyperedges[1].vertex_set == std::vector<VertexId>{c});
  const Hyperedge& ea = fh.hyperedges[2];
  CHECK(fh.classes[ea.top_class].members == std::vector<VertexId>{a});
  CHECK(ea.level == 2);
  CHECK(ea.vertex_set == std::vector<VertexId>{a, b, c});
  CHECK(ea.kind.tag == HyperedgeKindTag::WithCenter);
  CHECK(ea.kind.ab == std::vector<VertexId>{b});
  CHECK(ea.kind.b_part == std::vector<VertexId>{c});
  const Hyperedge& ed = fh.hyperedges[3];
  CHECK(fh.classes[ed.top_class].members == std::vector<VertexId>{d});
  CHECK(ed.kind.ab == std::vector<VertexId>{c});
  CHECK(ed.kind.b_part == std::vector<VertexId>{b});
}

TEST_CASE("complete graphs collapse to one abelian hyperedge") {
  for (int n = 2; n <= 5; ++n) {
    std::string text;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        text += std::string(1, 'a' + i) + " " + std::string(1, 'a' + j) + "\n";
    SimpleGraph g = SimpleGraph::parse_edge_list(text);
    FlagsHypergraph fh = build_flags_hypergraph(g);
    REQUIRE(fh.hyperedges.size() == 1);
    CHECK(fh.hyperedges[0].kind.tag == HyperedgeKindTag::FreeAbelianLevelOne);
    CHECK(fh.hyperedges[0].vertex_set.size() == static_cast<size_t>(n));
  }
}

TEST_CASE("C4 splits into two level-1 free hyperedges") {
  SimpleGraph g = SimpleGraph::parse_edge_list("a b\nb c\nc d\nd a\n");
  FlagsHypergraph fh = build_flags_hypergraph(g);
  REQUIRE(fh.hyperedges.size() == 2);
  for (const Hyperedge& e : fh.hyperedges) {
    CHECK(e.level == 1);
    CHECK(e.kind.tag == HyperedgeKindTag::FreeLevelOne);
  }
}

TEST_CASE("hypergraph partitions vertices into classes over the corpus") {
  for (const SimpleGraph& g : corpus(1, 5)) {
    FlagsHypergraph fh = build_flags_hypergraph(g);
    std::vector<int> count(g.vertex_count(), 0);
    for (const VertexClass& c : fh.classes)
      for (VertexId v : c.members) ++count[v];
    for (int c : count) CHECK(c == 1);
    for (int i = 0; i < g.vertex_count(); ++i)
      CHECK(fh.class_of_vertex(i) >= 0);
  }
}

TEST_CASE("hyperedge vertex sets are the top class plus contained hyperedges") {
  for (const SimpleGraph& g : corpus(2, 5)) {
    FlagsHypergraph fh = build_flags_hypergraph(g);
    for (const Hyperedge& e : fh.hyperedges) {
      std::uint64_t mask = vertices_to_mask(fh.classes[e.top_class].members);
      for (int c : e.contained) mask |= vertices_to_mask(fh.hyperedges[c].vertex_set);
      CHECK(vertices_to_mask(e.vertex_set) == mask);
    }
  }
}

TEST_CASE("serialization targets emit") {
  SimpleGraph g = P3();
  FlagsHypergraph fh = build_flags_hypergraph(g);
  CHECK(flags_to_json(g, fh).find("hyperedges") != std::string::npos);
  CHECK(flags_to_dot(g, fh).rfind("digraph", 0) == 0);
}
