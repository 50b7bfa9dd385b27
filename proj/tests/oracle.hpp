#pragma once

// Reference implementations used only by tests, written independently of the
// library's rewriting machinery so the two can disagree meaningfully.

#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "raag/word.hpp"

namespace oracle {

// Word-problem decision by breadth-first search over the two elementary moves:
// swap two adjacent letters whose generators commute, or delete an adjacent
// inverse pair. A word is trivial iff the empty word is reachable. States are
// packed into 64 bits (signed letters in the low 58 bits, length in the top 6)
// to keep the closure cheap to explore.
inline bool is_identity(const raag::SimpleGraph& g, const raag::Word& start) {
  const int B = g.vertex_count() <= 4 ? 3 : 5;  // bits per signed letter
  if (g.vertex_count() > 16) throw std::runtime_error("oracle graph too large");
  if (static_cast<int>(start.size()) * B > 58)
    throw std::runtime_error("oracle word too long");
  const std::uint64_t letter_mask = (1ull << B) - 1;
  const std::uint64_t body_mask = (1ull << 58) - 1;

  std::uint64_t init = static_cast<std::uint64_t>(start.size()) << 58;
  for (size_t i = 0; i < start.size(); ++i) {
    std::uint64_t code = 2u * start[i].gen + (start[i].sign < 0 ? 1u : 0u);
    init |= code << (B * i);
  }

  std::unordered_set<std::uint64_t> seen{init};
  std::vector<std::uint64_t> frontier{init};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier) {
      int len = static_cast<int>(s >> 58);
      if (len == 0) return true;
      for (int i = 0; i + 1 < len; ++i) {
        int x = static_cast<int>((s >> (B * i)) & letter_mask);
        int y = static_cast<int>((s >> (B * (i + 1))) & letter_mask);
        if ((x >> 1) == (y >> 1)) {
          if ((x ^ y) == 1) {  // inverse pair: cut it out
            std::uint64_t low = s & ((1ull << (B * i)) - 1);
            std::uint64_t high = ((s & body_mask) >> (B * (i + 2))) << (B * i);
            std::uint64_t cut = low | high | (static_cast<std::uint64_t>(len - 2) << 58);
            if (seen.insert(cut).second) next.push_back(cut);
          }
        } else if (g.adjacent(x >> 1, y >> 1)) {  // commuting swap
          std::uint64_t cleared = s & ~(((letter_mask << B) | letter_mask) << (B * i));
          std::uint64_t swapped = cleared | (static_cast<std::uint64_t>(y) << (B * i)) |
                                  (static_cast<std::uint64_t>(x) << (B * (i + 1)));
          if (seen.insert(swapped).second) next.push_back(swapped);
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

// Two words are equal iff w1 * w2^-1 is trivial.
inline bool equal_words(const raag::SimpleGraph& g, const raag::Word& w1, const raag::Word& w2) {
  raag::Word prod = w1;
  for (auto it = w2.rbegin(); it != w2.rend(); ++it) prod.push_back(it->inverse());
  return oracle::is_identity(g, prod);
}

// Exhaustive domination table straight off the edge set: u <= v iff every
// neighbour of u lies in st(v).
inline std::vector<std::vector<bool>> leq_table(const raag::SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int x = 0; x < n; ++x)
        if (g.adjacent(u, x) && x != v && !g.adjacent(v, x)) ok = false;
      table[u][v] = ok;
    }
  return table;
}

}  // namespace oracle
