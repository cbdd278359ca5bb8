#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weyl/vec.hpp"

namespace weyl {

struct RootSet;

// Generalized Cartan matrix: c[i][i] = 2, off-diagonal entries <= 0, and
// c[i][j] = 0 exactly when c[j][i] = 0.
struct CartanMatrix {
  int rank = 0;
  std::array<std::array<std::int16_t, kMaxRank>, kMaxRank> c{};

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

// Cartan matrix read off a positive system: c_ij = -max{ k : k*alpha_i +
// alpha_j in roots }.  Requires all simple roots to be present; checks the
// zero-symmetry condition and throws root_system_error on violation.
CartanMatrix gcm_from_root_set(const RootSet& roots);

// sigma_i(v): only coordinate i changes, by v_i -> v_i - sum_j c_ij v_j.
Vec reflect(const CartanMatrix& C, int i, const Vec& v);

// Labeled directed graph of the matrix: label[i][j] = -c[i][j] for i != j.
struct DynkinDiagram {
  int rank = 0;
  std::array<std::array<std::int16_t, kMaxRank>, kMaxRank> label{};

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

DynkinDiagram dynkin_diagram(const CartanMatrix& C);

bool is_connected(const DynkinDiagram& D);

// Named shape of a connected diagram, up to vertex permutation.  Anything
// outside the five recognized series keeps only the canonical encoding.
struct DiagramFamily {
  enum Kind { A, B, C, D, Dprime, Other };

  Kind kind = Other;
  int rank = 0;
  std::string encoding;  // canonical edge list, the permutation-minimal one

  std::string name() const;
  friend bool operator==(const DiagramFamily&, const DiagramFamily&) = default;
};

DiagramFamily classify_family(const DynkinDiagram& D);

// Lexicographically smallest sorted edge list over all vertex
// permutations; equal strings exactly for isomorphic labeled diagrams.
std::string canonical_diagram_encoding(const DynkinDiagram& D);

}  // namespace weyl
