#include "raag/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace raag {

namespace fs = std::filesystem;

std::string corpus_cache_dir() {
  if (const char* env = std::getenv("RAAG_CACHE_DIR")) return env;
  return (fs::temp_directory_path() / "raag_corpus").string();
}

static SimpleGraph graph_from_mask(int n, std::uint64_t edge_mask) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((edge_mask >> bit) & 1u) edges.emplace_back(labels[u], labels[v]);
  return SimpleGraph(labels, edges);
}

static std::vector<std::uint64_t> canonical_connected_masks(int n) {
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_at(pairs);
  {
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pair_at[bit++] = {u, v};
  }
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto bit_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    // index of pair (u,v) in row-major upper-triangle order
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  };

  std::set<std::uint64_t> canonical;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    // connectivity first; it is cheaper than canonicalization
    std::vector<std::uint64_t> adj(n, 0);
    for (int b = 0; b < pairs; ++b)
      if ((mask >> b) & 1u) {
        adj[pair_at[b].first] |= 1ull << pair_at[b].second;
        adj[pair_at[b].second] |= 1ull << pair_at[b].first;
      }
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (((adj[x] >> y) & 1u) && !((seen >> y) & 1u)) {
          seen |= 1ull << y;
          stack.push_back(y);
        }
    }
    if (seen != (1ull << n) - 1) continue;

    std::uint64_t best = mask;
    for (auto& p : perms) {
      std::uint64_t image = 0;
      for (int b = 0; b < pairs; ++b)
        if ((mask >> b) & 1u) image |= 1ull << bit_of(p[pair_at[b].first], p[pair_at[b].second]);
      best = std::min(best, image);
    }
    canonical.insert(best);
  }
  return {canonical.begin(), canonical.end()};
}

std::vector<SimpleGraph> connected_graphs(int n, bool use_cache) {
  if (n < 1 || n > 8) throw std::runtime_error("corpus size out of range: " + std::to_string(n));
  std::vector<std::uint64_t> masks;
  fs::path cache_file = fs::path(corpus_cache_dir()) / ("connected-" + std::to_string(n) + ".json");
  if (use_cache && fs::exists(cache_file)) {
    std::ifstream in(cache_file);
    nlohmann::json j = nlohmann::json::parse(in);
    masks = j.at("masks").get<std::vector<std::uint64_t>>();
  } else {
    masks = canonical_connected_masks(n);
    if (use_cache) {
      std::error_code ec;
      fs::create_directories(cache_file.parent_path(), ec);
      if (!ec) {
        nlohmann::json j;
        j["n"] = n;
        j["masks"] = masks;
        std::ofstream out(cache_file);
        out << j.dump();
      }
    }
  }
  std::vector<SimpleGraph> graphs;
  graphs.reserve(masks.size());
  for (std::uint64_t m : masks) graphs.push_back(graph_from_mask(n, m));
  return graphs;
}

std::vector<SimpleGraph> corpus(int min_n, int max_n, bool use_cache) {
  std::vector<SimpleGraph> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto& g : connected_graphs(n, use_cache)) out.push_back(std::move(g));
  return out;
}

}  // namespace raag
