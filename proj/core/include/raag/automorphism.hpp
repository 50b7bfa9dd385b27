#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/flags.hpp"
#include "raag/word.hpp"

namespace raag {

/// Total map generator -> word with a formal inverse map. Validity is a
/// checkable property (check_homomorphism), not a construction invariant.
struct Automorphism {
  std::vector<Word> forward;   // indexed by vertex, stored as normal forms
  std::vector<Word> backward;

  static Automorphism identity(const SimpleGraph& g);
  bool is_identity_map(const SimpleGraph& g) const;
  Automorphism inverse() const { return {backward, forward}; }
};

Word apply(const SimpleGraph& g, const Automorphism& aut, const Word& w);
Word apply_backward(const SimpleGraph& g, const Automorphism& aut, const Word& w);
Automorphism compose(const SimpleGraph& g, const Automorphism& a1, const Automorphism& a2);
bool check_homomorphism(const SimpleGraph& g, const Automorphism& aut);
bool equal_automorphisms(const SimpleGraph& g, const Automorphism& a1, const Automorphism& a2);

/// First conjugator c (by length, then lex) with inner(c) o a1 == a2.
/// Exhaustion is a bounded negative, not a disproof.
std::optional<Word> equal_modulo_inner(const SimpleGraph& g, const Automorphism& a1,
                                       const Automorphism& a2, int radius);

Automorphism inner_automorphism(const SimpleGraph& g, const Word& conjugator);

// ---------------------------------------------------------------------------
// Laurence-Servatius generators of Aut(A_Gamma)

struct LaurenceGenerator {
  enum class Kind { Inversion, Transvection, PartialConjugation, Symmetry, Inner };
  Kind kind;
  VertexId v = -1;                    // Inversion / Transvection / PartialConjugation / Inner
  VertexId w = -1;                    // Transvection target
  std::vector<VertexId> component;    // PartialConjugation
  std::vector<VertexId> permutation;  // Symmetry
};

std::vector<LaurenceGenerator> enumerate_laurence_generators(const SimpleGraph& g);
Automorphism realize(const SimpleGraph& g, const LaurenceGenerator& gen);
std::string describe(const SimpleGraph& g, const LaurenceGenerator& gen);

// ---------------------------------------------------------------------------
// Per-hyperedge generator families

struct Aut1Generator {
  enum class Kind {
    ClassInversion,        // a^-1 for a in the top class
    ClassSwap,             // a <-> b within the top class
    ClassTransvection,     // a -> a b within the top class
    FactorTransvection,    // a in top class, b in B part: a -> a b
    ComponentConjugation,  // conjugate component by the letter a
    CenterTransvection     // a in top class, b in Ab: a -> a b
  };
  int hyperedge = -1;
  Kind kind;
  VertexId a = -1;
  VertexId b = -1;
  int component = -1;  // index into hyperedge_components(...).non_singleton
  bool left = false;   // ClassTransvection a -> b a instead of a -> a b
};

/// Non-singleton components of the complement of the top class star, the
/// conjugation targets of a hyperedge's family.
SimpleGraph::ComponentSplit hyperedge_components(const SimpleGraph& g, const FlagsHypergraph& fh,
                                                 const Hyperedge& e);

std::vector<Aut1Generator> enumerate_aut1_generators(const SimpleGraph& g,
                                                     const FlagsHypergraph& fh);
Automorphism realize(const SimpleGraph& g, const FlagsHypergraph& fh, const Aut1Generator& gen);
std::string describe(const SimpleGraph& g, const FlagsHypergraph& fh, const Aut1Generator& gen);

std::string automorphism_to_json(const SimpleGraph& g, const Automorphism& aut);

}  // namespace raag
