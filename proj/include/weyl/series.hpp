#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/rootset.hpp"
#include "weyl/vec.hpp"

namespace weyl {

// Sum of consecutive basis vectors: alpha_i + ... + alpha_j, the zero
// vector when i > j.  Requires 1 <= i <= r and 0 <= j <= r.
Vec eta(int i, int j, int r);

// The three infinite families of positive systems.  The subset (Z resp. Y)
// must be contained in {1, ..., r-1}; r >= 3.
//   phi:       eta(i, j-1)            for i < j <= r,
//              eta(i, r-2) + alpha_r  for i < r,
//              eta(i, r) + eta(j, r-2) for i < j < r,
//              eta(j, r) + eta(j, r-2) for j in Z.
//   psi:       eta(i, j)              for i <= j <= r,
//              eta(i, r) + eta(j, r-1) for i < j < r,
//              eta(j, r) + eta(j, r-1) for j in Y.
//   psi_prime: psi with coordinates r-1 and r exchanged.
// Sizes: |phi| = r(r-1) + |Z|, |psi| = r^2 - r + 1 + |Y|.
RootSet phi(int r, const std::vector<int>& Z);
RootSet psi(int r, const std::vector<int>& Y);
RootSet psi_prime(int r, const std::vector<int>& Y);

enum class SeriesVariant { Phi, Psi, PsiPrime };

struct SeriesSpec {
    int rank = 0;
    SeriesVariant variant = SeriesVariant::Phi;
    std::vector<int> subset;  // Z for Phi, Y for Psi and PsiPrime
};

RootSet series_root_set(const SeriesSpec& spec);

// Parameter s of the class label D'(r, s): |Z| for Phi, |Y| + 1 for Psi
// and PsiPrime.  Schemes with equal s are equivalent.
int series_class_parameter(const SeriesSpec& spec);

struct SeriesCounts {
    std::uint64_t n_root_sets = 0;  // C(r-1, s-1) + C(r, s)
    std::uint64_t n_objects = 0;    // 2^{r-1} (s+r) (r-1)!
    std::uint64_t aut_order = 0;    // n_objects / n_root_sets = 2^s s! 2^{r-s-1} (r-s)!
};

// Closed-form invariants of the scheme of class D'(r, s).  Requires r >= 3
// and 1 <= s <= r-1; the boundary classes s = 0 and s = r are the standard
// D and C schemes.  Throws capacity_error when a count exceeds 64 bits and
// internal_error if the two automorphism-order formulas ever disagree.
SeriesCounts series_counts(int r, int s);

// Positive systems of the four standard families, over the simple basis:
//   A: eta(i, j) for i <= j;               (r >= 1)
//   B: A together with eta(i,r) + eta(j,r) for i < j;  (r >= 2)
//   C: psi(r, {1, ..., r-1}) expanded explicitly;      (r >= 2)
//   D: phi(r, {}) expanded explicitly.                 (r >= 3)
enum class StandardFamily { A, B, C, D };

RootSet standard_roots(StandardFamily family, int r);

struct SeriesReport {
    std::vector<std::string> failures;
    std::uint64_t checks = 0;

    bool all_pass() const { return failures.empty(); }
};

// Checks every row of the reflection-transition table on all phi/psi/
// psi_prime systems with subsets up to max_subset_size: the simple
// reflection sigma_i computed from the Cartan matrix of the set maps the
// signed set onto the signed set named by the table (transposed subset for
// i <= r-2, a variant switch at i in {r-1, r} depending on whether r-1
// lies in the subset).  Requires r >= 4.  Report-only: violations are
// collected, never thrown.
SeriesReport verify_reflection_table(int r, int max_subset_size);

}  // namespace weyl
