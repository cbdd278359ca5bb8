#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/rootset.hpp"

namespace weyl {

// Quotient of a Cartan scheme by equality of root sets: one node per
// distinct positive system, with the simple-reflection transitions.  The
// full object count is recovered separately by count_objects.
struct CartanSchemeGraph {
  int rank = 0;
  std::vector<RootSet> root_sets;                      // index 0 is the seed
  std::vector<CartanMatrix> cartans;                   // per root set
  std::vector<std::array<int, kMaxRank>> transitions;  // [set][i] -> set

  int n_root_sets() const { return static_cast<int>(root_sets.size()); }
};

struct GenerationLimits {
  std::uint64_t max_objects = 1000000000;  // object-count ceiling
  int max_root_sets = 100000;              // distinct-root-set ceiling
  int max_coordinate = 10000;              // per-coordinate growth guard
};

// Breadth-first closure of the seed under its simple reflections, with the
// Cartan matrix recomputed from each new root set.  Throws
// root_system_error when a reflection produces a mixed-sign vector or the
// closure is structurally broken, divergence_error when a ceiling is hit.
CartanSchemeGraph generate_objects(const RootSet& seed, const GenerationLimits& limits = {});

// Number of objects of the scheme: the number of distinct path products of
// simple reflections out of the seed, counted by a breadth-first walk over
// (root set, morphism matrix) states packed into 64-bit keys.  Throws
// capacity_error when a state does not fit into 63 bits and
// divergence_error past the ceiling.
std::uint64_t count_objects(const CartanSchemeGraph& G, const GenerationLimits& limits = {});

struct AxiomReport {
  struct Failure {
    std::string axiom;
    int root_set;
    std::string detail;
  };
  std::vector<Failure> failures;
  std::uint64_t checks = 0;

  bool all_pass() const { return failures.empty(); }
  bool pass(std::string_view axiom) const {
    for (const Failure& f : failures)
      if (f.axiom == axiom) return false;
    return true;
  }
};

// Re-checks (R1)-(R4) and the scheme conditions (C1), (C2) on the
// generated graph.  One check per root set stands for the same check at
// every object carrying that root set: transition paths and reflection
// products out of an object depend only on its root set.
AxiomReport verify_axioms(const CartanSchemeGraph& G);

// A scheme is irreducible exactly when the Cartan matrices are
// indecomposable; by (C2) it is enough to look at the seed.
bool is_irreducible(const CartanSchemeGraph& G);

struct ClassificationRecord {
  int rank = 0;
  RootSet canonical_roots;
  std::uint64_t n_objects = 0;
  int n_root_sets = 0;
  std::uint64_t aut_order = 0;
  std::vector<DiagramFamily> diagram_families;  // one per distinct root set
};

// Classification invariants; enforces that the object count splits evenly
// over the distinct root sets (aut_order = n_objects / n_root_sets).
ClassificationRecord invariants(const CartanSchemeGraph& G, const GenerationLimits& limits = {});

// Minimum of the coordinate-permuted positive systems over all objects and
// all permutations, as a sequence sorted by canonical_less.  A complete
// and deterministic equivalence invariant.
RootSet canonical_presentation(const CartanSchemeGraph& G);

bool equivalent(const CartanSchemeGraph& a, const CartanSchemeGraph& b);

// R intersected with the span of the given roots, re-expressed over the
// base of the intersection (its members that are not sums of two members),
// as a root set of the subspace rank.
RootSet root_subset(const RootSet& R, const std::vector<Vec>& spanning);

// One normal vector per line of the reflection arrangement.
std::vector<Vec> arrangement_normals(const RootSet& R);

}  // namespace weyl
