#include "raag/report.hpp"

#include <atomic>
#include <thread>

namespace raag {

using nlohmann::json;

json verify_graph(const SimpleGraph& g, const VerifyConfig& cfg) {
  json out;
  out["graph"] = json::parse(g.to_json());
  FlagsHypergraph fh = build_flags_hypergraph(g);
  out["hypergraph"] = json::parse(flags_to_json(g, fh));

  auto laurence = enumerate_laurence_generators(g);
  auto aut1 = enumerate_aut1_generators(g, fh);

  json invalid = json::array();
  for (const auto& gen : laurence)
    if (!check_homomorphism(g, realize(g, gen))) invalid.push_back(describe(g, gen));
  for (const auto& gen : aut1)
    if (!check_homomorphism(g, realize(g, fh, gen))) invalid.push_back(describe(g, fh, gen));
  out["generators"] = {{"laurence", laurence.size()},
                       {"aut1", aut1.size()},
                       {"invalid", invalid}};

  json routing = json::array();
  int search_failed = 0, max_depth = 0, max_radius = 0, symmetry_residues = 0;
  for (const auto& gen : laurence) {
    RoutingResult r = route_laurence_generator(g, fh, gen, cfg.radius, cfg.depth);
    json item;
    item["generator"] = describe(g, gen);
    switch (r.status) {
      case RoutingResult::Status::Witness: {
        int used = 0;
        bool ok = verify_witness(g, fh, gen, r, cfg.radius, &used);
        item["status"] = "witness";
        item["verified"] = ok;
        item["depth"] = r.depth();
        item["radius_used"] = used;
        item["terms"] = witness_to_string(g, fh, r);
        if (!ok) ++search_failed;
        max_depth = std::max(max_depth, r.depth());
        max_radius = std::max(max_radius, used);
        break;
      }
      case RoutingResult::Status::SymmetryResidue:
        item["status"] = "symmetry_residue";
        ++symmetry_residues;
        break;
      case RoutingResult::Status::SearchFailed:
        item["status"] = "search_failed";
        item["diagnostic"] = r.diagnostic;
        ++search_failed;
        break;
    }
    routing.push_back(std::move(item));
  }
  out["routing"] = std::move(routing);
  out["routing_summary"] = {{"search_failed", search_failed},
                            {"symmetry_residues", symmetry_residues},
                            {"max_depth", max_depth},
                            {"max_radius", max_radius}};

  json kernel = json::array();
  int kernel_failures = 0;
  for (int e = 0; e < static_cast<int>(fh.hyperedges.size()); ++e) {
    if (!prop15_applicable(fh, e)) continue;
    for (const auto& gen : aut1) {
      if (gen.hyperedge != e || !prop15_generator_included(fh, gen)) continue;
      Prop15Report rep = verify_prop15(g, fh, e, gen);
      bool ok = rep.kernel_preserved && rep.induced_bijective;
      if (!ok) {
        ++kernel_failures;
        kernel.push_back({{"hyperedge", e},
                          {"generator", describe(g, fh, gen)},
                          {"kernel_preserved", rep.kernel_preserved},
                          {"induced_bijective", rep.induced_bijective}});
      }
    }
  }
  out["kernel_checks"] = {{"failures", kernel_failures}, {"failed", std::move(kernel)}};

  bool edge_groups_ok = true;
  for (int e = 0; e < static_cast<int>(fh.hyperedges.size()); ++e)
    edge_groups_ok &= check_edge_stabilizers_trivial(build_graph_of_groups(g, fh, e));
  out["edge_groups_trivial"] = edge_groups_ok;

  out["ok"] = invalid.empty() && search_failed == 0 && kernel_failures == 0 && edge_groups_ok;
  return out;
}

json corpus_report(const std::vector<SimpleGraph>& graphs, const VerifyConfig& cfg) {
  std::vector<json> per_graph(graphs.size());
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < graphs.size(); ++i) per_graph[i] = verify_graph(graphs[i], cfg);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < graphs.size(); i = next++)
          per_graph[i] = verify_graph(graphs[i], cfg);
      });
    for (auto& th : pool) th.join();
  }

  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["radius"] = cfg.radius;
  out["depth"] = cfg.depth;
  int failures = 0;
  json items = json::array();
  for (auto& j : per_graph) {
    if (!j.at("ok").get<bool>()) ++failures;
    items.push_back(std::move(j));
  }
  out["graphs"] = std::move(items);
  out["graph_count"] = graphs.size();
  out["failures"] = failures;
  out["ok"] = failures == 0;
  return out;
}

}  // namespace raag
