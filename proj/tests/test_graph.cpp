#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raag/graph.hpp"

using namespace raag;

static SimpleGraph P3() { return SimpleGraph::parse_edge_list("a b\nb c\n"); }

TEST_CASE("edge list parsing") {
  SimpleGraph g = P3();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
  CHECK(!g.adjacent(g.index_of("a"), g.index_of("c")));
  CHECK(g.label(0) == "a");

  SimpleGraph iso = SimpleGraph::parse_edge_list("# comment\na b\nvertex z\n");
  CHECK(iso.vertex_count() == 3);
  CHECK(iso.has_vertex("z"));
  CHECK(iso.link(iso.index_of("z")).empty());
}

TEST_CASE("edge list parse errors carry line numbers") {
  CHECK_THROWS_AS(SimpleGraph::parse_edge_list("a a\n"), ParseError);
  CHECK_THROWS_AS(SimpleGraph::parse_edge_list("a b c\n"), ParseError);
  try {
    SimpleGraph::parse_edge_list("a b\nb b\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("json format round trips and auto-detects") {
  SimpleGraph g = P3();
  SimpleGraph back = SimpleGraph::parse(g.to_json());
  CHECK(back.labels() == g.labels());
  CHECK(back.edges() == g.edges());
  SimpleGraph again = SimpleGraph::parse(g.to_edge_list());
  CHECK(again.edges() == g.edges());
}

TEST_CASE("link star and masks") {
  SimpleGraph g = P3();
  VertexId a = g.index_of("a"), b = g.index_of("b");
  CHECK(g.link(b) == std::vector<VertexId>{a, g.index_of("c")});
  CHECK(g.star(a) == std::vector<VertexId>{a, b});
  CHECK(g.star_mask(a) == (g.link_mask(a) | (1ull << a)));
}

TEST_CASE("components and connectivity") {
  SimpleGraph g = SimpleGraph::parse_edge_list("a b\nvertex c\n");
  CHECK(!g.is_connected());
  CHECK(g.components().size() == 2);
  CHECK(P3().is_connected());
}

TEST_CASE("components outside a class star") {
  SimpleGraph g = SimpleGraph::parse_edge_list("a b\nb c\nc d\n");  // P4
  VertexClass cb{{g.index_of("b")}, ClassKind::Singleton};
  auto split = g.components_outside_star(cb);
  CHECK(split.non_singleton.empty());
  CHECK(split.singleton == std::vector<VertexId>{g.index_of("d")});
}

TEST_CASE("symmetry enumeration") {
  auto syms = P3().symmetries();
  REQUIRE(syms.size() == 2);
  CHECK(syms[0] == std::vector<VertexId>{0, 1, 2});  // identity first
  CHECK(syms[1] == std::vector<VertexId>{2, 1, 0});

  SimpleGraph k4 = SimpleGraph::parse_edge_list("a b\na c\na d\nb c\nb d\nc d\n");
  CHECK(k4.symmetries().size() == 24);
}
