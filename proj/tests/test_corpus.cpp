#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "raag/corpus.hpp"

using namespace raag;

TEST_CASE("connected graph counts up to isomorphism") {
  CHECK(connected_graphs(1, false).size() == 1);
  CHECK(connected_graphs(2, false).size() == 1);
  CHECK(connected_graphs(3, false).size() == 2);
  CHECK(connected_graphs(4, false).size() == 6);
  CHECK(connected_graphs(5, false).size() == 21);
  CHECK(connected_graphs(6, false).size() == 112);
}

TEST_CASE("corpus graphs are connected, labeled a.., and pairwise distinct") {
  std::set<std::string> seen;
  for (const SimpleGraph& g : corpus(3, 5)) {
    CHECK(g.is_connected());
    CHECK(g.label(0) == "a");
    CHECK(seen.insert(std::to_string(g.vertex_count()) + "|" + g.to_edge_list()).second);
  }
}

TEST_CASE("cache round trip is transparent") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "raag-corpus-test-cache";
  fs::remove_all(dir);
  setenv("RAAG_CACHE_DIR", dir.c_str(), 1);
  auto fresh = connected_graphs(4, true);   // populates
  CHECK(fs::exists(dir / "connected-4.json"));
  auto cached = connected_graphs(4, true);  // reads back
  unsetenv("RAAG_CACHE_DIR");
  REQUIRE(fresh.size() == cached.size());
  for (size_t i = 0; i < fresh.size(); ++i)
    CHECK(fresh[i].to_edge_list() == cached[i].to_edge_list());
  fs::remove_all(dir);
}

TEST_CASE("enumeration is deterministic") {
  auto a = connected_graphs(4, false);
  auto b = connected_graphs(4, false);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_edge_list() == b[i].to_edge_list());
}
