#include "raag/automorphism.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace raag {

Automorphism Automorphism::identity(const SimpleGraph& g) {
  Automorphism aut;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    aut.forward.push_back(letter_word(v));
    aut.backward.push_back(letter_word(v));
  }
  return aut;
}

bool Automorphism::is_identity_map(const SimpleGraph& g) const {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (forward[v] != letter_word(v)) return false;
  return true;
}

static Word substitute(const SimpleGraph& g, const std::vector<Word>& images, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    const Word& img = images.at(l.gen);
    if (l.sign > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return normal_form(g, out);
}

Word apply(const SimpleGraph& g, const Automorphism& aut, const Word& w) {
  return substitute(g, aut.forward, w);
}

Word apply_backward(const SimpleGraph& g, const Automorphism& aut, const Word& w) {
  return substitute(g, aut.backward, w);
}

Automorphism compose(const SimpleGraph& g, const Automorphism& a1, const Automorphism& a2) {
  Automorphism out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.forward.push_back(substitute(g, a1.forward, a2.forward[v]));
    out.backward.push_back(substitute(g, a2.backward, a1.backward[v]));
  }
  return out;
}

bool check_homomorphism(const SimpleGraph& g, const Automorphism& aut) {
  for (auto [u, v] : g.edges()) {
    Word comm = aut.forward[u];
    comm.insert(comm.end(), aut.forward[v].begin(), aut.forward[v].end());
    Word iu = inverse_word(aut.forward[u]);
    Word iv = inverse_word(aut.forward[v]);
    comm.insert(comm.end(), iu.begin(), iu.end());
    comm.insert(comm.end(), iv.begin(), iv.end());
    if (!is_identity(g, comm)) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (substitute(g, aut.backward, aut.forward[v]) != letter_word(v)) return false;
    if (substitute(g, aut.forward, aut.backward[v]) != letter_word(v)) return false;
  }
  return true;
}

bool equal_automorphisms(const SimpleGraph& g, const Automorphism& a1, const Automorphism& a2) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (normal_form(g, a1.forward[v]) != normal_form(g, a2.forward[v])) return false;
  return true;
}

Automorphism inner_automorphism(const SimpleGraph& g, const Word& conjugator) {
  Automorphism aut;
  Word cinv = inverse_word(conjugator);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Word f = conjugator;
    f.push_back({v, 1});
    f.insert(f.end(), cinv.begin(), cinv.end());
    aut.forward.push_back(normal_form(g, f));
    Word b = cinv;
    b.push_back({v, 1});
    b.insert(b.end(), conjugator.begin(), conjugator.end());
    aut.backward.push_back(normal_form(g, b));
  }
  return aut;
}

std::optional<Word> equal_modulo_inner(const SimpleGraph& g, const Automorphism& a1,
                                       const Automorphism& a2, int radius) {
  std::optional<Word> witness;
  for_each_canonical_word(g, radius, [&](const Word& c) {
    Word cinv = inverse_word(c);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      Word img = c;
      img.insert(img.end(), a1.forward[v].begin(), a1.forward[v].end());
      img.insert(img.end(), cinv.begin(), cinv.end());
      if (normal_form(g, img) != normal_form(g, a2.forward[v])) return false;
    }
    witness = c;
    return true;
  });
  return witness;
}

// ---------------------------------------------------------------------------

std::vector<LaurenceGenerator> enumerate_laurence_generators(const SimpleGraph& g) {
  std::vector<LaurenceGenerator> gens;
  int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    gens.push_back({LaurenceGenerator::Kind::Inversion, v});
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w)
      if (v != w && leq(g, v, w))
        gens.push_back({LaurenceGenerator::Kind::Transvection, v, w});
  for (VertexId v = 0; v < n; ++v)
    for (auto& comp : g.components_in(g.full_mask() & ~g.star_mask(v))) {
      LaurenceGenerator pc{LaurenceGenerator::Kind::PartialConjugation, v};
      pc.component = comp;
      gens.push_back(std::move(pc));
    }
  for (auto& perm : g.symmetries()) {
    LaurenceGenerator s{LaurenceGenerator::Kind::Symmetry};
    s.permutation = perm;
    gens.push_back(std::move(s));
  }
  for (VertexId v = 0; v < n; ++v)
    gens.push_back({LaurenceGenerator::Kind::Inner, v});
  return gens;
}

static Automorphism transvection_aut(const SimpleGraph& g, VertexId v, VertexId w) {
  Automorphism aut = Automorphism::identity(g);
  aut.forward[v] = normal_form(g, {Letter{v, 1}, Letter{w, 1}});
  aut.backward[v] = normal_form(g, {Letter{v, 1}, Letter{w, -1}});
  return aut;
}

static Automorphism partial_conjugation_aut(const SimpleGraph& g, VertexId c, int sign,
                                            const std::vector<VertexId>& component) {
  Automorphism aut = Automorphism::identity(g);
  for (VertexId x : component) {
    aut.forward[x] = normal_form(
        g, {Letter{c, static_cast<std::int8_t>(sign)}, Letter{x, 1},
            Letter{c, static_cast<std::int8_t>(-sign)}});
    aut.backward[x] = normal_form(
        g, {Letter{c, static_cast<std::int8_t>(-sign)}, Letter{x, 1},
            Letter{c, static_cast<std::int8_t>(sign)}});
  }
  return aut;
}

Automorphism realize(const SimpleGraph& g, const LaurenceGenerator& gen) {
  switch (gen.kind) {
    case LaurenceGenerator::Kind::Inversion: {
      Automorphism aut = Automorphism::identity(g);
      aut.forward[gen.v] = letter_word(gen.v, -1);
      aut.backward[gen.v] = letter_word(gen.v, -1);
      return aut;
    }
    case LaurenceGenerator::Kind::Transvection:
      return transvection_aut(g, gen.v, gen.w);
    case LaurenceGenerator::Kind::PartialConjugation:
      return partial_conjugation_aut(g, gen.v, +1, gen.component);
    case LaurenceGenerator::Kind::Symmetry: {
      Automorphism aut;
      std::vector<VertexId> inv(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) inv[gen.permutation[v]] = v;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        aut.forward.push_back(letter_word(gen.permutation[v]));
        aut.backward.push_back(letter_word(inv[v]));
      }
      return aut;
    }
    case LaurenceGenerator::Kind::Inner:
      return inner_automorphism(g, letter_word(gen.v));
  }
  throw std::logic_error("unreachable");
}

std::string describe(const SimpleGraph& g, const LaurenceGenerator& gen) {
  std::ostringstream out;
  switch (gen.kind) {
    case LaurenceGenerator::Kind::Inversion:
      out << "inversion(" << g.label(gen.v) << ")";
      break;
    case LaurenceGenerator::Kind::Transvection:
      out << "transvection(" << g.label(gen.v) << " -> " << g.label(gen.v) << g.label(gen.w)
          << ")";
      break;
    case LaurenceGenerator::Kind::PartialConjugation: {
      out << "partial_conjugation(" << g.label(gen.v) << "; {";
      for (size_t i = 0; i < gen.component.size(); ++i)
        out << (i ? "," : "") << g.label(gen.component[i]);
      out << "})";
      break;
    }
    case LaurenceGenerator::Kind::Symmetry: {
      out << "symmetry(";
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << (v ? " " : "") << g.label(v) << ">" << g.label(gen.permutation[v]);
      out << ")";
      break;
    }
    case LaurenceGenerator::Kind::Inner:
      out << "inner(" << g.label(gen.v) << ")";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

SimpleGraph::ComponentSplit hyperedge_components(const SimpleGraph& g, const FlagsHypergraph& fh,
                                                 const Hyperedge& e) {
  return g.components_outside_star(fh.classes.at(e.top_class));
}

std::vector<Aut1Generator> enumerate_aut1_generators(const SimpleGraph& g,
                                                     const FlagsHypergraph& fh) {
  std::vector<Aut1Generator> gens;
  for (int hi = 0; hi < static_cast<int>(fh.hyperedges.size()); ++hi) {
    const Hyperedge& e = fh.hyperedges[hi];
    const VertexClass& top = fh.classes[e.top_class];
    for (VertexId a : top.members)
      gens.push_back({hi, Aut1Generator::Kind::ClassInversion, a});
    for (size_t i = 0; i < top.members.size(); ++i)
      for (size_t j = i + 1; j < top.members.size(); ++j)
        gens.push_back({hi, Aut1Generator::Kind::ClassSwap, top.members[i], top.members[j]});
    bool top_free = top.kind != ClassKind::Clique;
    for (VertexId a : top.members)
      for (VertexId b : top.members)
        if (a != b) {
          gens.push_back({hi, Aut1Generator::Kind::ClassTransvection, a, b});
          // left multiplication differs from right only when the class is free
          if (top_free)
            gens.push_back({hi, Aut1Generator::Kind::ClassTransvection, a, b, -1, true});
        }
    if (top_free && !e.kind.b_part.empty())
      for (VertexId a : top.members)
        for (VertexId b : e.kind.b_part)
          gens.push_back({hi, Aut1Generator::Kind::FactorTransvection, a, b});
    auto comps = hyperedge_components(g, fh, e);
    for (int ci = 0; ci < static_cast<int>(comps.non_singleton.size()); ++ci)
      for (VertexId a : e.vertex_set) {
        Aut1Generator cc{hi, Aut1Generator::Kind::ComponentConjugation, a};
        cc.component = ci;
        gens.push_back(cc);
      }
    if (e.kind.tag == HyperedgeKindTag::WithCenter || e.kind.tag == HyperedgeKindTag::Abelian)
      for (VertexId a : top.members)
        for (VertexId b : e.kind.ab)
          gens.push_back({hi, Aut1Generator::Kind::CenterTransvection, a, b});
  }
  return gens;
}

Automorphism realize(const SimpleGraph& g, const FlagsHypergraph& fh, const Aut1Generator& gen) {
  const Hyperedge& e = fh.hyperedges.at(gen.hyperedge);
  switch (gen.kind) {
    case Aut1Generator::Kind::ClassInversion: {
      Automorphism aut = Automorphism::identity(g);
      aut.forward[gen.a] = letter_word(gen.a, -1);
      aut.backward[gen.a] = letter_word(gen.a, -1);
      return aut;
    }
    case Aut1Generator::Kind::ClassSwap: {
      Automorphism aut = Automorphism::identity(g);
      aut.forward[gen.a] = letter_word(gen.b);
      aut.forward[gen.b] = letter_word(gen.a);
      aut.backward[gen.a] = letter_word(gen.b);
      aut.backward[gen.b] = letter_word(gen.a);
      return aut;
    }
    case Aut1Generator::Kind::ClassTransvection:
      if (gen.left) {
        Automorphism aut = Automorphism::identity(g);
        aut.forward[gen.a] = normal_form(g, {Letter{gen.b, 1}, Letter{gen.a, 1}});
        aut.backward[gen.a] = normal_form(g, {Letter{gen.b, -1}, Letter{gen.a, 1}});
        return aut;
      }
      return transvection_aut(g, gen.a, gen.b);
    case Aut1Generator::Kind::FactorTransvection:
    case Aut1Generator::Kind::CenterTransvection:
      return transvection_aut(g, gen.a, gen.b);
    case Aut1Generator::Kind::ComponentConjugation: {
      auto comps = hyperedge_components(g, fh, e);
      return partial_conjugation_aut(g, gen.a, +1, comps.non_singleton.at(gen.component));
    }
  }
  throw std::logic_error("unreachable");
}

std::string describe(const SimpleGraph& g, const FlagsHypergraph& fh, const Aut1Generator& gen) {
  std::ostringstream out;
  out << "E" << gen.hyperedge << ":";
  switch (gen.kind) {
    case Aut1Generator::Kind::ClassInversion:
      out << "class_inversion(" << g.label(gen.a) << ")";
      break;
    case Aut1Generator::Kind::ClassSwap:
      out << "class_swap(" << g.label(gen.a) << "," << g.label(gen.b) << ")";
      break;
    case Aut1Generator::Kind::ClassTransvection:
      out << "class_transvection(" << g.label(gen.a) << " -> ";
      if (gen.left)
        out << g.label(gen.b) << g.label(gen.a);
      else
        out << g.label(gen.a) << g.label(gen.b);
      out << ")";
      break;
    case Aut1Generator::Kind::FactorTransvection:
      out << "factor_transvection(" << g.label(gen.a) << " -> " << g.label(gen.a)
          << g.label(gen.b) << ")";
      break;
    case Aut1Generator::Kind::CenterTransvection:
      out << "center_transvection(" << g.label(gen.a) << " -> " << g.label(gen.a)
          << g.label(gen.b) << ")";
      break;
    case Aut1Generator::Kind::ComponentConjugation: {
      auto comps = hyperedge_components(g, fh, fh.hyperedges.at(gen.hyperedge));
      out << "component_conjugation(" << g.label(gen.a) << "; {";
      const auto& comp = comps.non_singleton.at(gen.component);
      for (size_t i = 0; i < comp.size(); ++i) out << (i ? "," : "") << g.label(comp[i]);
      out << "})";
      break;
    }
  }
  return out.str();
}

std::string automorphism_to_json(const SimpleGraph& g, const Automorphism& aut) {
  nlohmann::json j;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    j["forward"][g.label(v)] = format_word(g, aut.forward[v]);
    j["backward"][g.label(v)] = format_word(g, aut.backward[v]);
  }
  return j.dump();
}

}  // namespace raag
