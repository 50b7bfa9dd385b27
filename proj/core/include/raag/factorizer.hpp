#pragma once

#include <string>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/decomposition.hpp"

namespace raag {

/// One step of a factorization witness: an enumerated Aut1 generator (possibly
/// formally inverted) or an inner automorphism. Terms are applied in list
/// order (terms[0] first).
struct WitnessTerm {
  bool is_inner = false;
  Word inner_word;    // when is_inner
  Aut1Generator gen;  // otherwise
  bool inverted = false;
};

struct RoutingResult {
  enum class Status { Witness, SymmetryResidue, SearchFailed };
  Status status = Status::SearchFailed;
  std::vector<WitnessTerm> terms;
  int hyperedge = -1;      // target hyperedge for single-family witnesses
  std::string diagnostic;  // populated on SearchFailed
  /// binary compositions among non-inner terms
  int depth() const;
};

Automorphism realize_witness(const SimpleGraph& g, const FlagsHypergraph& fh,
                             const std::vector<WitnessTerm>& terms);

RoutingResult route_laurence_generator(const SimpleGraph& g, const FlagsHypergraph& fh,
                                       const LaurenceGenerator& gen, int radius,
                                       int depth_limit = 3);

/// Realizes and composes the witness and compares it with the routed generator
/// modulo inner within `radius`.
bool verify_witness(const SimpleGraph& g, const FlagsHypergraph& fh,
                    const LaurenceGenerator& gen, const RoutingResult& result, int radius,
                    int* radius_used = nullptr);

struct Prop15Report {
  int hyperedge = -1;
  Aut1Generator generator;
  bool kernel_preserved = false;
  bool induced_bijective = false;
  std::vector<std::pair<VertexId, Word>> kernel_evidence;  // killed generator -> quotient image
};

/// Does the hyperedge group satisfy the non-abelian hypothesis (B nonempty, or
/// free top class of rank >= 2)?
bool prop15_applicable(const FlagsHypergraph& fh, int hyperedge);

/// Is the Aut1 generator part of the checked pool? (CenterTransvections of
/// Abelian-kind hyperedges are excluded: there the kernel is not preserved.)
bool prop15_generator_included(const FlagsHypergraph& fh, const Aut1Generator& gen);

Prop15Report verify_prop15(const SimpleGraph& g, const FlagsHypergraph& fh, int hyperedge,
                           const Aut1Generator& gen);

std::string witness_to_string(const SimpleGraph& g, const FlagsHypergraph& fh,
                              const RoutingResult& r);

}  // namespace raag
