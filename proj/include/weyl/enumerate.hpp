#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weyl/groupoid.hpp"
#include "weyl/hash.hpp"
#include "weyl/linalg.hpp"
#include "weyl/rootset.hpp"
#include "weyl/vec.hpp"

namespace weyl {

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    return static_cast<std::size_t>(fnv64(v.c.data(), sizeof(v.c)));
  }
};

// One equivalence class of irreducible finite systems with its classical
// invariants filled in from closed forms (tables, reflection-group orders,
// series formulas) rather than from object counting.
struct KnownClass {
  std::string name;
  RootSet canonical;
  std::uint64_t n_root_sets = 0;
  std::uint64_t n_objects = 0;
  std::uint64_t aut_order = 0;
};

// All classes of the given rank (3..8): the sporadic fixture systems plus
// the standard families and the two-parameter series, each reduced to its
// canonical presentation.  Used both as the seeding base for rank r+1 and
// as the reference answer for enumeration totals.
std::vector<KnownClass> classification(int rank);

// Match by canonical presentation; nullptr when absent.
const KnownClass* find_class(const std::vector<KnownClass>& classes, const RootSet& canonical);

// Euler invariant of a set of roots spanning a 3-dimensional subspace:
// 3 + sum over planes containing at least two of the roots of
// (#roots in the plane - 3).  Zero on every rank-3 subset of a finite
// system.  Throws input_error when the span is not 3-dimensional.
int euler_invariant(const std::vector<Vec>& roots);

// Starting sets for rank r: each base system is shifted into coordinates
// 2..r and joined with alpha_1 and alpha_1 + alpha_j for every j in 2..r.
// Every irreducible rank-r system contains one of them up to equivalence.
std::vector<RootSet> seed_sets(int r, const std::vector<RootSet>& base);

// Completion dictionary: all irreducible root subsets of rank 2..rho
// drawn from every object of every base system, closed under coordinate
// permutations, with the members expressed over the subset base.  upsilon
// collects the member vectors per rank; posting maps a member vector to
// the entries containing it.
struct Caches {
  int rho = 3;
  std::uint64_t serial = 0;  // process-unique id, keys per-thread lookup memos
  struct PerRank {
    std::vector<std::vector<Vec>> entries;  // each sorted by append_less
    std::unordered_map<Vec, std::vector<int>, VecHash> posting;
    std::unordered_set<Vec, VecHash> upsilon;
  };
  std::vector<PerRank> ranks;  // indexed by subset rank, 2..rho

  std::size_t n_entries(int k) const { return ranks[static_cast<std::size_t>(k)].entries.size(); }
};

Caches build_caches(const std::vector<RootSet>& base, int rho);

// Root set fragment: the part of one spanned subspace seen so far, with
// the data needed to extend and prune.  base holds positions of the first
// rank-many independent members, which are exactly the base of the
// completed subset because members only arrive in increasing order.
struct RsfFragment {
  std::shared_ptr<const Subspace> span;  // immutable, shared across branches
  std::int8_t rank = 0;
  bool connected = false;    // diagram of the members seen so far
  bool viable_init = false;  // dictionary candidates computed (connected only)
  std::int32_t euler = 0;    // maintained for rank 3 only
  std::vector<std::int16_t> members;  // positions into Rsf::roots, ascending
  std::vector<Vec> coords;            // over the base, sorted by append order
  // Dictionary entries still containing coords as a subset.  The list only
  // shrinks as members arrive, so branches inherit it; emptiness means the
  // fragment cannot complete and kills the extension.
  std::vector<std::int32_t> viable;
  std::array<std::int16_t, 8> base{};
};

// Partial positive system under construction.  roots is strictly
// increasing in the append order (pure lexicographic, first coordinate
// most significant); fragments track every subspace of dimension 2..rho
// spanned by roots.
struct Rsf {
  int rank = 0;
  int rho = 3;
  bool isvalid = true;
  std::vector<Vec> roots;
  std::vector<std::vector<RsfFragment>> fragments;  // [k], k = 2..rho
  std::vector<std::vector<std::pair<std::uint64_t, int>>> span_index;  // sorted (digest, idx)
  // Lower triangle, entry (p, q) for p < q at q*(q-1)/2 + p: index of the
  // unique rank-2 fragment containing roots p and q, or -1 before one exists.
  std::vector<std::int16_t> pair2;
  std::array<std::uint16_t, kMaxRank> adjacency{};  // bit j of row i: alpha_i+alpha_j present
  int euler_nonzero = 0;     // rank-3 fragments with nonzero invariant
  bool has_big_first = false;  // some root has first coordinate >= 2

  Vec max_root() const { return roots.back(); }
};

// Fresh state holding exactly the seed roots.  With a dictionary the result
// can come back invalidated (no entry completes one of its fragments);
// without one a rejected seed throws internal_error.
Rsf seed_rsf(const RootSet& seed, int rho, const Caches* caches);

// One step of the construction: alpha must exceed every present root in
// the append order.  Returns the extended state with isvalid = false when
// any structural check fails: alpha parallel to a root, support not
// connected under the recorded height-2 edges, fragment coordinates
// outside the nonnegative integers, a non-base member that is not the sum
// of two members of its fragment, or a connected fragment acquiring a
// member vector outside the dictionary.
Rsf append_root(const Rsf& D, const Vec& alpha, const Caches* caches);

struct EnumerateConfig {
  int rho = 0;           // 0: rank default (3 for r <= 5, 4 for 6..7, 3 for 8)
  bool use_omega = true;  // reflection-image pruning
  bool use_xi = true;     // completion-dictionary pruning
  int jobs = 1;
  std::string checkpoint;  // optional resume file
  GenerationLimits limits{};
  std::function<void(const std::string&)> progress;  // per-seed notes
};

// Complete enumeration of the irreducible rank-r classes (4 <= r <= 8),
// grown from the rank r-1 classification, deduplicated by canonical
// presentation and sorted by (positive-system size, canonical form).
// n_objects and aut_order are 0 for a class whose object walk exceeds the
// 63-bit state packing.
std::vector<ClassificationRecord> enumerate_rank(int r, const EnumerateConfig& cfg = {});

}  // namespace weyl
