#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Letter {
  VertexId gen;
  std::int8_t sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
  /// (vertex index, sign) with + before -
  bool operator<(const Letter& o) const {
    return gen != o.gen ? gen < o.gen : sign > o.sign;
  }
  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word letter_word(VertexId v, int sign = +1);

/// Word syntax: whitespace-separated "name", "name^-1", or "name^k" tokens.
Word parse_word(const SimpleGraph& g, const std::string& text);
std::string format_word(const SimpleGraph& g, const Word& w);

/// Canonical representative modulo commutation shuffles and free cancellation:
/// fully cancelled, then the lexicographically least linearization of the trace.
Word normal_form(const SimpleGraph& g, const Word& w);
bool is_normal_form(const SimpleGraph& g, const Word& w);
bool is_identity(const SimpleGraph& g, const Word& w);
Word multiply(const SimpleGraph& g, const Word& a, const Word& b);
Word invert(const SimpleGraph& g, const Word& w);

std::vector<long> exponent_sums(const SimpleGraph& g, const Word& w);

struct ConjugacyResult {
  bool found = false;           // false means "not conjugate within radius",
  Word conjugator;              // which is a bounded negative, not a disproof
};

/// First c (by normal-form length, then lexicographic) with c w1 c^-1 = w2.
ConjugacyResult conjugacy_search(const SimpleGraph& g, const Word& w1, const Word& w2,
                                 int radius);

/// Visits every canonical reduced word of length <= max_len, ordered by
/// (length, lexicographic). Stops early when the callback returns true.
void for_each_canonical_word(const SimpleGraph& g, int max_len,
                             const std::function<bool(const Word&)>& visit);

}  // namespace raag
