// Command-line front end: graph analysis, decompositions, generator listings,
// normal forms, factorization and kernel-preservation verification, and the
// full corpus run.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "raag/corpus.hpp"
#include "raag/decomposition.hpp"
#include "raag/factorizer.hpp"
#include "raag/report.hpp"

using nlohmann::json;
using namespace raag;

namespace {

enum class Format { Text, Structured, Dot };

struct Options {
  std::string input;
  std::string word;
  std::string out;
  Format format = Format::Text;
  int radius = 4;
  int depth = 3;
  int max_n = 6;
  int jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ParseError("empty graph file: " + path);
  return text;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

std::string labels_of(const SimpleGraph& g, const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.label(vs[i]);
  return s + "}";
}

std::string analyze_text(const SimpleGraph& g, const FlagsHypergraph& fh) {
  std::ostringstream ss;
  ss << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n";
  ss << "classes:\n";
  for (size_t i = 0; i < fh.classes.size(); ++i)
    ss << "  [" << i << "] " << labels_of(g, fh.classes[i].members) << " "
       << to_string(fh.classes[i].kind) << "\n";
  ss << "order (strictly less pairs):\n";
  for (size_t i = 0; i < fh.classes.size(); ++i)
    for (size_t j = 0; j < fh.classes.size(); ++j)
      if (fh.strictly_less[i][j])
        ss << "  [" << i << "] < [" << j << "]\n";
  ss << "hyperedges:\n";
  for (size_t e = 0; e < fh.hyperedges.size(); ++e) {
    const Hyperedge& h = fh.hyperedges[e];
    ss << "  E" << e << ": level " << h.level << ", top "
       << labels_of(g, fh.classes[h.top_class].members) << ", vertices "
       << labels_of(g, h.vertex_set) << ", kind " << to_string(h.kind.tag);
    if (!h.kind.ab.empty()) ss << ", Ab " << labels_of(g, h.kind.ab);
    if (!h.kind.b_part.empty()) ss << ", B " << labels_of(g, h.kind.b_part);
    if (!h.contained.empty()) {
      ss << ", contains";
      for (int c : h.contained) ss << " E" << c;
    }
    ss << "\n";
  }
  return ss.str();
}

int cmd_analyze(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  auto comps = g.components();
  if (comps.size() > 1) {
    std::cerr << "warning: disconnected graph; reporting each component separately\n";
    std::ostringstream full;
    json jout = json::array();
    for (size_t i = 0; i < comps.size(); ++i) {
      std::vector<std::string> labels;
      for (VertexId v : comps[i]) labels.push_back(g.label(v));
      std::vector<std::pair<std::string, std::string>> edges;
      for (auto [u, v] : g.edges())
        if (vertices_to_mask(comps[i]) & (1ull << u))
          edges.emplace_back(g.label(u), g.label(v));
      SimpleGraph sub(labels, edges);
      FlagsHypergraph fh = build_flags_hypergraph(sub);
      switch (opt.format) {
        case Format::Text:
          full << "component " << i << ":\n" << analyze_text(sub, fh);
          break;
        case Format::Structured:
          jout.push_back(json::parse(flags_to_json(sub, fh)));
          break;
        case Format::Dot:
          full << flags_to_dot(sub, fh);
          break;
      }
    }
    if (opt.format == Format::Structured)
      emit(opt, json{{"schema_version", kReportSchemaVersion}, {"components", jout}}.dump(2));
    else
      emit(opt, full.str());
    return 0;
  }
  FlagsHypergraph fh = build_flags_hypergraph(g);
  switch (opt.format) {
    case Format::Text:
      emit(opt, analyze_text(g, fh));
      break;
    case Format::Structured: {
      json j = json::parse(flags_to_json(g, fh));
      j["schema_version"] = kReportSchemaVersion;
      emit(opt, j.dump(2));
      break;
    }
    case Format::Dot:
      emit(opt, flags_to_dot(g, fh));
      break;
  }
  return 0;
}

int cmd_decompose(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  FlagsHypergraph fh = build_flags_hypergraph(g);
  std::ostringstream ss;
  json jout = json::array();
  for (size_t e = 0; e < fh.hyperedges.size(); ++e) {
    GraphOfGroups gog = build_graph_of_groups(g, fh, static_cast<int>(e));
    switch (opt.format) {
      case Format::Text: {
        ss << "E" << e << ": loops_s " << gog.loops_s << ", loops_t " << gog.loops_t
           << ", killed " << labels_of(g, gog.killed_generators) << ", edge groups "
           << (gog.edge_groups_trivial ? "trivial" : "NONTRIVIAL") << "\n";
        for (const auto& vg : gog.vertex_groups)
          ss << "  "
             << (vg.type == VertexGroupDescriptor::Type::FreeAbelianClassGroup
                     ? "free-abelian "
                     : "subgraph ")
             << labels_of(g, vg.vertices) << "\n";
        break;
      }
      case Format::Structured:
        jout.push_back(json::parse(gog_to_json(g, gog)));
        break;
      case Format::Dot:
        ss << gog_to_dot(g, gog);
        break;
    }
  }
  if (opt.format == Format::Structured)
    emit(opt, json{{"schema_version", kReportSchemaVersion}, {"decompositions", jout}}.dump(2));
  else
    emit(opt, ss.str());
  return 0;
}

int cmd_gens(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  FlagsHypergraph fh = build_flags_hypergraph(g);
  auto laurence = enumerate_laurence_generators(g);
  auto aut1 = enumerate_aut1_generators(g, fh);
  if (opt.format == Format::Structured) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["laurence"] = json::array();
    for (const auto& gen : laurence) j["laurence"].push_back(describe(g, gen));
    j["aut1"] = json::array();
    for (const auto& gen : aut1) j["aut1"].push_back(describe(g, fh, gen));
    emit(opt, j.dump(2));
    return 0;
  }
  std::ostringstream ss;
  ss << "automorphism-group generators (" << laurence.size() << "):\n";
  for (const auto& gen : laurence) ss << "  " << describe(g, gen) << "\n";
  ss << "hyperedge family generators (" << aut1.size() << "):\n";
  for (const auto& gen : aut1) ss << "  " << describe(g, fh, gen) << "\n";
  emit(opt, ss.str());
  return 0;
}

int cmd_nf(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  Word w = normal_form(g, parse_word(g, opt.word));
  if (opt.format == Format::Structured) {
    json j{{"schema_version", kReportSchemaVersion}, {"normal_form", format_word(g, w)}};
    emit(opt, j.dump(2));
  } else {
    emit(opt, format_word(g, w));
  }
  return 0;
}

int cmd_factor(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  VerifyConfig cfg{opt.radius, opt.depth, opt.jobs};
  json report = verify_graph(g, cfg);
  const json& summary = report.at("routing_summary");
  if (opt.format == Format::Structured) {
    report["schema_version"] = kReportSchemaVersion;
    emit(opt, report.dump(2));
  } else {
    std::ostringstream ss;
    for (const auto& item : report.at("routing")) {
      ss << item.at("generator").get<std::string>() << ": "
         << item.at("status").get<std::string>();
      if (item.contains("verified"))
        ss << (item.at("verified").get<bool>() ? " verified" : " FAILED") << " depth "
           << item.at("depth").get<int>() << " radius " << item.at("radius_used").get<int>()
           << "\n    " << item.at("terms").get<std::string>();
      if (item.contains("diagnostic")) ss << " (" << item.at("diagnostic").get<std::string>() << ")";
      ss << "\n";
    }
    ss << "failures: " << summary.at("search_failed").get<int>() << ", symmetry residues: "
       << summary.at("symmetry_residues").get<int>() << "\n";
    emit(opt, ss.str());
  }
  return summary.at("search_failed").get<int>() == 0 ? 0 : 1;
}

int cmd_verify15(const Options& opt) {
  SimpleGraph g = SimpleGraph::parse(read_file(opt.input));
  FlagsHypergraph fh = build_flags_hypergraph(g);
  auto aut1 = enumerate_aut1_generators(g, fh);
  std::ostringstream ss;
  json items = json::array();
  int failures = 0, checked = 0;
  for (int e = 0; e < static_cast<int>(fh.hyperedges.size()); ++e) {
    if (!prop15_applicable(fh, e)) continue;
    for (const auto& gen : aut1) {
      if (gen.hyperedge != e || !prop15_generator_included(fh, gen)) continue;
      Prop15Report rep = verify_prop15(g, fh, e, gen);
      bool ok = rep.kernel_preserved && rep.induced_bijective;
      ++checked;
      if (!ok) ++failures;
      if (opt.format == Format::Structured) {
        items.push_back({{"hyperedge", e},
                         {"generator", describe(g, fh, gen)},
                         {"kernel_preserved", rep.kernel_preserved},
                         {"induced_bijective", rep.induced_bijective}});
      } else {
        ss << "E" << e << " " << describe(g, fh, gen) << ": "
           << (ok ? "ok" : "FAILED") << "\n";
      }
    }
  }
  if (opt.format == Format::Structured) {
    json j{{"schema_version", kReportSchemaVersion},
           {"checked", checked},
           {"failures", failures},
           {"checks", items}};
    emit(opt, j.dump(2));
  } else {
    ss << "checked: " << checked << ", failures: " << failures << "\n";
    emit(opt, ss.str());
  }
  return failures == 0 ? 0 : 1;
}

int cmd_corpus(const Options& opt) {
  VerifyConfig cfg{opt.radius, opt.depth, opt.jobs};
  auto graphs = corpus(3, opt.max_n);
  json report = corpus_report(graphs, cfg);
  if (opt.format == Format::Structured) {
    emit(opt, report.dump(2));
  } else {
    std::ostringstream ss;
    ss << "graphs: " << report.at("graph_count").get<size_t>() << " (3.." << opt.max_n
       << " vertices, connected, up to isomorphism)\n";
    for (const auto& item : report.at("graphs")) {
      if (item.at("ok").get<bool>()) continue;
      ss << "FAILED: " << item.at("graph").dump() << "\n";
    }
    ss << "failures: " << report.at("failures").get<int>() << "\n";
    emit(opt, ss.str());
  }
  return report.at("ok").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-angled Artin group analysis and verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", opt.input, "graph file")->required();
    std::map<std::string, Format> fmt{{"text", Format::Text},
                                      {"structured", Format::Structured},
                                      {"dot", Format::Dot}};
    sub->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt, CLI::ignore_case));
    sub->add_option("--out", opt.out, "write output to file");
    sub->add_option("--radius", opt.radius, "conjugator search radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--depth", opt.depth, "witness composition depth limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", opt.jobs, "parallelism degree")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "classes, order, and hyperedges of a graph");
  add_common(analyze, true);
  auto* decompose = app.add_subcommand("decompose", "graph-of-groups decompositions per hyperedge");
  add_common(decompose, true);
  auto* gens = app.add_subcommand("gens", "list automorphism generators");
  add_common(gens, true);
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  add_common(nf, true);
  nf->add_option("word", opt.word, "word over the vertex generators")->required();
  auto* factor = app.add_subcommand("factor", "factor each generator through hyperedge families");
  add_common(factor, true);
  auto* verify15 = app.add_subcommand("verify15", "kernel-preservation checks per hyperedge");
  add_common(verify15, true);
  auto* corpus_cmd = app.add_subcommand("corpus", "verify the whole small-graph corpus");
  add_common(corpus_cmd, false);
  corpus_cmd->add_option("--max-n", opt.max_n, "largest vertex count")->check(CLI::Range(3, 8));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(opt);
    if (*decompose) return cmd_decompose(opt);
    if (*gens) return cmd_gens(opt);
    if (*nf) return cmd_nf(opt);
    if (*factor) return cmd_factor(opt);
    if (*verify15) return cmd_verify15(opt);
    if (*corpus_cmd) return cmd_corpus(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
