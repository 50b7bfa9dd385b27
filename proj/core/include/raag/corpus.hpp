#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// All connected graphs on n labeled-by-position vertices up to isomorphism,
/// with labels "a", "b", ..., ordered by canonical edge mask. Results are
/// cached on disk keyed by n; RAAG_CACHE_DIR overrides the cache location.
std::vector<SimpleGraph> connected_graphs(int n, bool use_cache = true);

/// connected_graphs(min_n) + ... + connected_graphs(max_n)
std::vector<SimpleGraph> corpus(int min_n, int max_n, bool use_cache = true);

std::string corpus_cache_dir();

}  // namespace raag
