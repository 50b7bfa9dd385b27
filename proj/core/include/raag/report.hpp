#pragma once

#include <json.hpp>

#include "raag/corpus.hpp"
#include "raag/factorizer.hpp"

namespace raag {

struct VerifyConfig {
  int radius = 4;
  int depth = 3;
  int jobs = 1;
};

/// Full verification of one connected graph: generator validity, the
/// factorization routing of every Laurence generator, and the
/// kernel-preservation checks on every applicable hyperedge.
nlohmann::json verify_graph(const SimpleGraph& g, const VerifyConfig& cfg);

/// Deterministic aggregate over a graph list; parallel across graphs.
nlohmann::json corpus_report(const std::vector<SimpleGraph>& graphs, const VerifyConfig& cfg);

inline constexpr int kReportSchemaVersion = 1;

}  // namespace raag
