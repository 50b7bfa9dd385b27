#include "raag/word.hpp"

#include <algorithm>
#include <sstream>

namespace raag {

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word letter_word(VertexId v, int sign) {
  return {Letter{v, static_cast<std::int8_t>(sign)}};
}

Word parse_word(const SimpleGraph& g, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stol(e, &used);
        if (used != e.size() || exp == 0) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw ParseError("malformed exponent in token: " + tok);
      }
    }
    VertexId v = g.index_of(name);
    std::int8_t sign = exp > 0 ? 1 : -1;
    for (long i = 0; i < std::abs(exp); ++i) w.push_back({v, sign});
  }
  return w;
}

std::string format_word(const SimpleGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << g.label(w[i].gen);
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

// Removes one cancellable pair x^e ... x^-e whose intervening letters all
// commute with x. Returns true if a pair was removed.
static bool cancel_once(const SimpleGraph& g, Word& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].gen == w[i].gen) {
        if (w[j].sign != w[i].sign) {
          w.erase(w.begin() + j);
          w.erase(w.begin() + i);
          return true;
        }
        break;  // same sign blocks any farther partner
      }
      if (!g.adjacent(w[j].gen, w[i].gen)) break;
    }
  }
  return false;
}

Word normal_form(const SimpleGraph& g, const Word& w) {
  Word r = w;
  for (auto& l : r)
    if (l.gen < 0 || l.gen >= g.vertex_count()) throw UnknownVertex(std::to_string(l.gen));
  while (cancel_once(g, r)) {
  }
  // Greedy heap linearization: repeatedly emit the least available letter.
  size_t n = r.size();
  std::vector<char> emitted(n, 0);
  Word out;
  out.reserve(n);
  for (size_t step = 0; step < n; ++step) {
    size_t best = n;
    for (size_t i = 0; i < n; ++i) {
      if (emitted[i]) continue;
      bool avail = true;
      for (size_t j = 0; j < i && avail; ++j)
        if (!emitted[j] && (r[j].gen == r[i].gen || !g.adjacent(r[j].gen, r[i].gen)))
          avail = false;
      if (avail && (best == n || r[i] < r[best])) best = i;
    }
    emitted[best] = 1;
    out.push_back(r[best]);
  }
  return out;
}

bool is_normal_form(const SimpleGraph& g, const Word& w) { return normal_form(g, w) == w; }

bool is_identity(const SimpleGraph& g, const Word& w) { return normal_form(g, w).empty(); }

Word multiply(const SimpleGraph& g, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(g, w);
}

Word invert(const SimpleGraph& g, const Word& w) { return normal_form(g, inverse_word(w)); }

std::vector<long> exponent_sums(const SimpleGraph& g, const Word& w) {
  std::vector<long> sums(g.vertex_count(), 0);
  for (auto& l : w) sums.at(l.gen) += l.sign;
  return sums;
}

void for_each_canonical_word(const SimpleGraph& g, int max_len,
                             const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> alphabet;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    alphabet.push_back({v, 1});
    alphabet.push_back({v, -1});
  }
  Word w;
  bool stop = false;
  auto rec = [&](auto&& self, int len) -> void {
    if (stop) return;
    if (static_cast<int>(w.size()) == len) {
      if (is_normal_form(g, w) && visit(w)) stop = true;
      return;
    }
    for (const Letter& l : alphabet) {
      w.push_back(l);
      self(self, len);
      w.pop_back();
      if (stop) return;
    }
  };
  for (int len = 0; len <= max_len && !stop; ++len) rec(rec, len);
}

ConjugacyResult conjugacy_search(const SimpleGraph& g, const Word& w1, const Word& w2,
                                 int radius) {
  Word target_inv = inverse_word(w2);
  ConjugacyResult result;
  for_each_canonical_word(g, radius, [&](const Word& c) {
    Word cand = c;
    cand.insert(cand.end(), w1.begin(), w1.end());
    Word cinv = inverse_word(c);
    cand.insert(cand.end(), cinv.begin(), cinv.end());
    cand.insert(cand.end(), target_inv.begin(), target_inv.end());
    if (is_identity(g, cand)) {
      result.found = true;
      result.conjugator = c;
      return true;
    }
    return false;
  });
  return result;
}

}  // namespace raag
