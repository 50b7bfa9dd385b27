#include "raag/factorizer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace raag {

int RoutingResult::depth() const {
  int aut1_terms = 0;
  for (auto& t : terms)
    if (!t.is_inner) ++aut1_terms;
  return std::max(0, aut1_terms - 1);
}

static Automorphism realize_term(const SimpleGraph& g, const FlagsHypergraph& fh,
                                 const WitnessTerm& t) {
  Automorphism aut = t.is_inner ? inner_automorphism(g, t.inner_word) : realize(g, fh, t.gen);
  return t.inverted ? aut.inverse() : aut;
}

Automorphism realize_witness(const SimpleGraph& g, const FlagsHypergraph& fh,
                             const std::vector<WitnessTerm>& terms) {
  Automorphism acc = Automorphism::identity(g);
  for (auto& t : terms) acc = compose(g, realize_term(g, fh, t), acc);
  return acc;
}

static WitnessTerm aut1_term(Aut1Generator gen, bool inverted = false) {
  WitnessTerm t;
  t.gen = gen;
  t.inverted = inverted;
  return t;
}

static WitnessTerm inner_term(const Word& w) {
  WitnessTerm t;
  t.is_inner = true;
  t.inner_word = w;
  return t;
}

// Witness synthesis for a partial conjugation x -> v^sign x v^-sign on the
// component `comp` of the complement of st(v).
static bool synth_partial_conjugation(const SimpleGraph& g, const FlagsHypergraph& fh,
                                      VertexId v, const std::vector<VertexId>& comp, int sign,
                                      std::vector<WitnessTerm>& out) {
  int cv = fh.class_of_vertex(v);
  int hv = fh.class_to_hyperedge.at(cv);

  if (comp.size() > 1) {
    // a non-singleton component of the complement of st(v) is also a
    // component of the complement of st([v]); conjugate it directly
    auto split = hyperedge_components(g, fh, fh.hyperedges[hv]);
    for (int ci = 0; ci < static_cast<int>(split.non_singleton.size()); ++ci)
      if (split.non_singleton[ci] == comp) {
        Aut1Generator cc{hv, Aut1Generator::Kind::ComponentConjugation, v};
        cc.component = ci;
        out.push_back(aut1_term(cc, sign < 0));
        return true;
      }
    return false;
  }

  VertexId x = comp.front();
  if (fh.class_of_vertex(x) == cv) {
    // classmate in a free class: u -> v u v^-1 is the Nielsen chain
    // inv_u . T^-1 . inv_u . T^-1 with T: u -> uv (applied first to last)
    Aut1Generator t{hv, Aut1Generator::Kind::ClassTransvection, x, v};
    Aut1Generator inv{hv, Aut1Generator::Kind::ClassInversion, x};
    bool tw_inverted = sign > 0;
    out.push_back(aut1_term(t, tw_inverted));
    out.push_back(aut1_term(inv));
    out.push_back(aut1_term(t, tw_inverted));
    out.push_back(aut1_term(inv));
    return true;
  }

  // {x} is a single-vertex component of the complement of st(v), so every
  // neighbour of x sits in st(v) and x < v strictly. Every class of E([v])
  // strictly dominates [v] and hence [x], so E([v]) is contained in E([x]);
  // v is a lower vertex of E([x]) not adjacent to x, i.e. in its B part, and
  // the same Nielsen chain applies with the factor transvection T: x -> xv.
  int cx = fh.class_of_vertex(x);
  int hx = fh.class_to_hyperedge.at(cx);
  const Hyperedge& ex = fh.hyperedges[hx];
  if (!fh.strictly_less[cx][cv]) return false;
  if (fh.classes[cx].kind == ClassKind::Clique) return false;
  if (std::find(ex.kind.b_part.begin(), ex.kind.b_part.end(), v) == ex.kind.b_part.end())
    return false;
  Aut1Generator t{hx, Aut1Generator::Kind::FactorTransvection, x, v};
  Aut1Generator inv{hx, Aut1Generator::Kind::ClassInversion, x};
  bool tw_inverted = sign > 0;
  out.push_back(aut1_term(t, tw_inverted));
  out.push_back(aut1_term(inv));
  out.push_back(aut1_term(t, tw_inverted));
  out.push_back(aut1_term(inv));
  return true;
}

// Last-resort bounded compositional search over conjugation-flavored terms.
static bool bounded_search(const SimpleGraph& g, const FlagsHypergraph& fh,
                           const Automorphism& target, int radius, int depth_limit, VertexId v,
                           std::vector<WitnessTerm>& out, int& explored) {
  std::vector<WitnessTerm> pool;
  for (int hi = 0; hi < static_cast<int>(fh.hyperedges.size()); ++hi) {
    const Hyperedge& e = fh.hyperedges[hi];
    if (!(vertices_to_mask(e.vertex_set) & (1ull << v))) continue;
    auto split = hyperedge_components(g, fh, e);
    for (int ci = 0; ci < static_cast<int>(split.non_singleton.size()); ++ci) {
      Aut1Generator cc{hi, Aut1Generator::Kind::ComponentConjugation, v};
      cc.component = ci;
      pool.push_back(aut1_term(cc, false));
      pool.push_back(aut1_term(cc, true));
    }
    const VertexClass& top = fh.classes[e.top_class];
    bool v_in_top =
        std::find(top.members.begin(), top.members.end(), v) != top.members.end();
    if (v_in_top)
      for (VertexId u : top.members)
        if (u != v) {
          Aut1Generator t{hi, Aut1Generator::Kind::ClassTransvection, u, v};
          pool.push_back(aut1_term(t, false));
          pool.push_back(aut1_term(t, true));
          Aut1Generator iu{hi, Aut1Generator::Kind::ClassInversion, u};
          pool.push_back(aut1_term(iu, false));
        }
  }
  std::vector<Automorphism> realized;
  for (auto& t : pool) realized.push_back(realize_term(g, fh, t));

  std::vector<int> choice;
  explored = 0;
  auto rec = [&](auto&& self, const Automorphism& acc) -> bool {
    ++explored;
    if (equal_modulo_inner(g, acc, target, radius)) {
      for (int idx : choice) out.push_back(pool[idx]);
      return true;
    }
    if (static_cast<int>(choice.size()) > depth_limit) return false;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      choice.push_back(i);
      if (self(self, compose(g, realized[i], acc))) return true;
      choice.pop_back();
    }
    return false;
  };
  return rec(rec, Automorphism::identity(g));
}

RoutingResult route_laurence_generator(const SimpleGraph& g, const FlagsHypergraph& fh,
                                       const LaurenceGenerator& gen, int radius,
                                       int depth_limit) {
  RoutingResult r;
  switch (gen.kind) {
    case LaurenceGenerator::Kind::Symmetry:
      r.status = RoutingResult::Status::SymmetryResidue;
      return r;
    case LaurenceGenerator::Kind::Inner:
      r.status = RoutingResult::Status::Witness;
      r.terms.push_back(inner_term(letter_word(gen.v)));
      return r;
    case LaurenceGenerator::Kind::Inversion: {
      r.status = RoutingResult::Status::Witness;
      r.hyperedge = fh.edge_topped_by(gen.v);
      r.terms.push_back(
          aut1_term({r.hyperedge, Aut1Generator::Kind::ClassInversion, gen.v}));
      return r;
    }
    case LaurenceGenerator::Kind::Transvection: {
      int cv = fh.class_of_vertex(gen.v);
      int cw = fh.class_of_vertex(gen.w);
      int hi = fh.class_to_hyperedge.at(cv);
      const Hyperedge& e = fh.hyperedges[hi];
      r.hyperedge = hi;
      if (cv == cw) {
        r.status = RoutingResult::Status::Witness;
        r.terms.push_back(
            aut1_term({hi, Aut1Generator::Kind::ClassTransvection, gen.v, gen.w}));
        return r;
      }
      if (!fh.strictly_less[cv][cw]) {
        r.diagnostic = "transvection target class does not dominate the source class";
        return r;
      }
      if (!g.adjacent(gen.v, gen.w)) {
        if (std::find(e.kind.b_part.begin(), e.kind.b_part.end(), gen.w) ==
            e.kind.b_part.end()) {
          r.diagnostic = "transvection target not in the B part of the source hyperedge";
          return r;
        }
        r.status = RoutingResult::Status::Witness;
        r.terms.push_back(
            aut1_term({hi, Aut1Generator::Kind::FactorTransvection, gen.v, gen.w}));
        return r;
      }
      if (std::find(e.kind.ab.begin(), e.kind.ab.end(), gen.w) == e.kind.ab.end()) {
        r.diagnostic = "transvection target not in the center of the source hyperedge";
        return r;
      }
      r.status = RoutingResult::Status::Witness;
      r.terms.push_back(
          aut1_term({hi, Aut1Generator::Kind::CenterTransvection, gen.v, gen.w}));
      return r;
    }
    case LaurenceGenerator::Kind::PartialConjugation: {
      std::vector<WitnessTerm> terms;
      Automorphism target = realize(g, gen);
      if (synth_partial_conjugation(g, fh, gen.v, gen.component, +1, terms) &&
          equal_automorphisms(g, realize_witness(g, fh, terms), target)) {
        r.status = RoutingResult::Status::Witness;
        r.hyperedge = fh.edge_topped_by(gen.v);
        r.terms = std::move(terms);
        return r;
      }
      terms.clear();
      int explored = 0;
      if (bounded_search(g, fh, target, radius, depth_limit, gen.v, terms, explored)) {
        r.status = RoutingResult::Status::Witness;
        r.hyperedge = fh.edge_topped_by(gen.v);
        r.terms = std::move(terms);
        return r;
      }
      r.diagnostic = "partial conjugation search exhausted; frontier size " +
                     std::to_string(explored);
      return r;
    }
  }
  return r;
}

bool verify_witness(const SimpleGraph& g, const FlagsHypergraph& fh,
                    const LaurenceGenerator& gen, const RoutingResult& result, int radius,
                    int* radius_used) {
  if (result.status != RoutingResult::Status::Witness) return false;
  Automorphism composed = realize_witness(g, fh, result.terms);
  auto witness = equal_modulo_inner(g, composed, realize(g, gen), radius);
  if (witness && radius_used) *radius_used = static_cast<int>(witness->size());
  return witness.has_value();
}

bool prop15_applicable(const FlagsHypergraph& fh, int hyperedge) {
  const Hyperedge& e = fh.hyperedges.at(hyperedge);
  if (e.kind.tag == HyperedgeKindTag::Abelian ||
      e.kind.tag == HyperedgeKindTag::FreeAbelianLevelOne)
    return false;
  const VertexClass& top = fh.classes.at(e.top_class);
  return !e.kind.b_part.empty() ||
         (top.kind == ClassKind::AntiClique && top.members.size() >= 2);
}

bool prop15_generator_included(const FlagsHypergraph& fh, const Aut1Generator& gen) {
  if (gen.kind != Aut1Generator::Kind::CenterTransvection) return true;
  return fh.hyperedges.at(gen.hyperedge).kind.tag != HyperedgeKindTag::Abelian;
}

Prop15Report verify_prop15(const SimpleGraph& g, const FlagsHypergraph& fh, int hyperedge,
                           const Aut1Generator& gen) {
  Prop15Report report;
  report.hyperedge = hyperedge;
  report.generator = gen;
  GraphOfGroups gog = build_graph_of_groups(g, fh, hyperedge);
  Automorphism aut = realize(g, fh, gen);

  report.kernel_preserved = true;
  for (VertexId x : gog.killed_generators) {
    Word q = quotient_word(g, gog, aut.forward[x]);
    report.kernel_evidence.emplace_back(x, q);
    if (!q.empty()) report.kernel_preserved = false;
  }

  // induced map on the quotient: push forward, then pull back through the
  // quotient images of the backward map
  std::vector<Word> backward_q;
  for (VertexId z = 0; z < g.vertex_count(); ++z)
    backward_q.push_back(quotient_word(g, gog, aut.backward[z]));
  std::uint64_t killed = vertices_to_mask(gog.killed_generators);
  report.induced_bijective = true;
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    if ((killed >> y) & 1u) continue;
    Word fwd_q = quotient_word(g, gog, aut.forward[y]);
    Word round_trip;
    for (const Letter& l : fwd_q) {
      Word img = l.sign > 0 ? backward_q[l.gen] : inverse_word(backward_q[l.gen]);
      round_trip.insert(round_trip.end(), img.begin(), img.end());
    }
    if (quotient_word(g, gog, round_trip) != letter_word(y)) report.induced_bijective = false;
  }
  return report;
}

std::string witness_to_string(const SimpleGraph& g, const FlagsHypergraph& fh,
                              const RoutingResult& r) {
  switch (r.status) {
    case RoutingResult::Status::SymmetryResidue: return "symmetry-residue";
    case RoutingResult::Status::SearchFailed: return "SEARCH-FAILED: " + r.diagnostic;
    case RoutingResult::Status::Witness: break;
  }
  if (r.terms.empty()) return "identity";
  std::ostringstream out;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    if (i) out << " ; ";
    const WitnessTerm& t = r.terms[i];
    if (t.is_inner)
      out << "inner(" << format_word(g, t.inner_word) << ")";
    else
      out << describe(g, fh, t.gen);
    if (t.inverted) out << "^-1";
  }
  return out.str();
}

}  // namespace raag
