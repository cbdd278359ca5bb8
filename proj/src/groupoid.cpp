#include "weyl/groupoid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "weyl/hash.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

namespace {

std::uint64_t roots_digest(const std::vector<Vec>& roots, int rank) {
  std::uint64_t h = kFnvOffset;
  for (const Vec& v : roots)
    for (int i = 0; i < rank; ++i)
      h = fnv64_u64(static_cast<std::uint64_t>(static_cast<std::int64_t>(v[i])), h);
  return h;
}

// Positive representatives of sigma_i(R), sorted.  Throws if any image has
// coordinates of both signs or grows past the cap.
std::vector<Vec> reflected_positives(const RootSet& R, const CartanMatrix& C, int i,
                                     int max_coordinate) {
  std::vector<Vec> out;
  out.reserve(R.roots.size());
  for (const Vec& b : R.roots) {
    Vec g = reflect(C, i, b);
    if (all_nonneg(g)) {
      out.push_back(g);
    } else if (all_nonpos(g)) {
      out.push_back(neg(g));
    } else {
      throw root_system_error("reflection produced a vector with mixed signs");
    }
    const Vec& kept = out.back();
    for (int t = 0; t < R.rank; ++t)
      if (kept[t] > max_coordinate)
        throw divergence_error("root coordinates grow without bound");
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int find_root(const std::vector<Vec>& sorted, const Vec& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v, canonical_less);
  if (it == sorted.end() || !(*it == v)) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Open-addressing set of 64-bit keys (key+1 is stored, 0 = empty slot).
class FlatKeySet {
 public:
  explicit FlatKeySet(std::size_t initial_slots = 1u << 16) : slots_(initial_slots, 0) {}

  bool insert(std::uint64_t key) {
    std::uint64_t stored = key + 1;
    std::size_t mask = slots_.size() - 1;
    std::size_t idx = mix64(stored) & mask;
    while (true) {
      std::uint64_t cur = slots_[idx];
      if (cur == stored) return false;
      if (cur == 0) break;
      idx = (idx + 1) & mask;
    }
    slots_[idx] = stored;
    ++count_;
    if (count_ * 10 > slots_.size() * 6) grow();
    return true;
  }

  std::uint64_t size() const { return count_; }

 private:
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    std::size_t mask = slots_.size() - 1;
    for (std::uint64_t stored : old) {
      if (stored == 0) continue;
      std::size_t idx = mix64(stored) & mask;
      while (slots_[idx] != 0) idx = (idx + 1) & mask;
      slots_[idx] = stored;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::uint64_t count_ = 0;
};

bool support_within(const Vec& v, int i, int j) {
  for (int t = 0; t < kMaxRank; ++t)
    if (t != i && t != j && v[t] != 0) return false;
  return true;
}

}  // namespace

CartanSchemeGraph generate_objects(const RootSet& seed, const GenerationLimits& limits) {
  RootSet start = make_root_set(seed.rank, seed.roots);
  const int r = start.rank;

  CartanSchemeGraph G;
  G.rank = r;
  G.root_sets.push_back(std::move(start));
  G.cartans.push_back(gcm_from_root_set(G.root_sets[0]));
  G.transitions.emplace_back();

  std::unordered_map<std::uint64_t, std::vector<int>> by_digest;
  by_digest[roots_digest(G.root_sets[0].roots, r)].push_back(0);

  for (int id = 0; id < static_cast<int>(G.root_sets.size()); ++id) {
    for (int i = 0; i < r; ++i) {
      std::vector<Vec> image =
          reflected_positives(G.root_sets[static_cast<std::size_t>(id)],
                              G.cartans[static_cast<std::size_t>(id)], i, limits.max_coordinate);
      std::uint64_t digest = roots_digest(image, r);
      int target = -1;
      for (int cand : by_digest[digest]) {
        if (G.root_sets[static_cast<std::size_t>(cand)].roots == image) {
          target = cand;
          break;
        }
      }
      if (target < 0) {
        if (static_cast<int>(G.root_sets.size()) >= limits.max_root_sets)
          throw divergence_error("distinct root sets exceed the configured ceiling");
        target = static_cast<int>(G.root_sets.size());
        RootSet next = make_root_set(r, std::move(image));
        G.cartans.push_back(gcm_from_root_set(next));
        G.root_sets.push_back(std::move(next));
        G.transitions.emplace_back();
        by_digest[digest].push_back(target);
      }
      G.transitions[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)] = target;
    }
  }

  for (int id = 0; id < G.n_root_sets(); ++id)
    for (int i = 0; i < r; ++i) {
      int t = G.transitions[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      if (G.transitions[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] != id)
        throw root_system_error("reflection is not an involution on root sets");
    }
  return G;
}

std::uint64_t count_objects(const CartanSchemeGraph& G, const GenerationLimits& limits) {
  const int r = G.rank;
  const int m = G.n_root_sets();
  const std::size_t np = G.root_sets[0].roots.size();

  const int root_bits = static_cast<int>(std::bit_width(2 * np - 1));
  const int rs_bits = m > 1 ? static_cast<int>(std::bit_width(static_cast<unsigned>(m - 1))) : 0;
  if (r * root_bits + rs_bits > 63)
    throw capacity_error("object states do not fit into 64-bit keys at this size");

  // perm[id][i][s]: the signed-root index (positives first, then their
  // negatives) of sigma_i applied to signed root s of set id, indexed in
  // the target set's list.
  std::vector<std::vector<std::vector<std::uint32_t>>> perm(static_cast<std::size_t>(m));
  for (int id = 0; id < m; ++id) {
    const std::vector<Vec>& roots = G.root_sets[static_cast<std::size_t>(id)].roots;
    perm[static_cast<std::size_t>(id)].resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      const int target = G.transitions[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      const std::vector<Vec>& troots = G.root_sets[static_cast<std::size_t>(target)].roots;
      std::vector<std::uint32_t>& p =
          perm[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      p.resize(2 * np);
      for (std::size_t s = 0; s < 2 * np; ++s) {
        Vec v = s < np ? roots[s] : neg(roots[s - np]);
        Vec w = reflect(G.cartans[static_cast<std::size_t>(id)], i, v);
        int j;
        if (all_nonneg(w)) {
          j = find_root(troots, w);
        } else {
          j = find_root(troots, neg(w));
          if (j >= 0) j += static_cast<int>(np);
        }
        if (j < 0) throw internal_error("reflection escapes the generated root sets");
        p[s] = static_cast<std::uint32_t>(j);
      }
    }
  }

  const std::uint64_t rs_mask = rs_bits ? (1ull << rs_bits) - 1 : 0;
  const std::uint64_t root_mask = (1ull << root_bits) - 1;

  std::uint64_t initial = 0;
  for (int j = r - 1; j >= 0; --j) {
    int idx = find_root(G.root_sets[0].roots, unit(j));
    if (idx < 0) throw internal_error("seed lost a simple root");
    initial = (initial << root_bits) | static_cast<std::uint64_t>(idx);
  }
  initial <<= rs_bits;

  FlatKeySet seen;
  std::vector<std::uint64_t> stack;
  seen.insert(initial);
  stack.push_back(initial);
  std::vector<std::uint64_t> per_set(static_cast<std::size_t>(m), 0);
  per_set[0] = 1;

  std::array<std::uint32_t, kMaxRank> cols{};
  while (!stack.empty()) {
    std::uint64_t key = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(key & rs_mask);
    std::uint64_t rest = key >> rs_bits;
    for (int j = 0; j < r; ++j) {
      cols[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest & root_mask);
      rest >>= root_bits;
    }
    for (int i = 0; i < r; ++i) {
      const int target = G.transitions[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      const std::vector<std::uint32_t>& p =
          perm[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      std::uint64_t next = 0;
      for (int j = r - 1; j >= 0; --j)
        next = (next << root_bits) | p[cols[static_cast<std::size_t>(j)]];
      next = (next << rs_bits) | static_cast<std::uint64_t>(target);
      if (seen.insert(next)) {
        if (seen.size() > limits.max_objects)
          throw divergence_error("object count exceeds the configured ceiling");
        per_set[static_cast<std::size_t>(target)] += 1;
        stack.push_back(next);
      }
    }
  }

  const std::uint64_t total = seen.size();
  if (total % static_cast<std::uint64_t>(m) != 0)
    throw internal_error("object count is not a multiple of the root-set count");
  for (std::uint64_t c : per_set)
    if (c != total / static_cast<std::uint64_t>(m))
      throw internal_error("objects are not evenly spread over the root sets");
  return total;
}

AxiomReport verify_axioms(const CartanSchemeGraph& G) {
  AxiomReport rep;
  const int r = G.rank;
  auto fail = [&rep](const char* axiom, int rs, std::string detail) {
    rep.failures.push_back({axiom, rs, std::move(detail)});
  };

  for (int id = 0; id < G.n_root_sets(); ++id) {
    const RootSet& R = G.root_sets[static_cast<std::size_t>(id)];
    const CartanMatrix& C = G.cartans[static_cast<std::size_t>(id)];
    const std::vector<Vec>& roots = R.roots;

    // (R1): every stored root is a nonnegative vector and the list is
    // strictly increasing, so R = R_+ and -R_+ has no overlap.
    ++rep.checks;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (!all_nonneg(roots[k]) || is_zero(roots[k])) {
        fail("R1", id, "root " + std::to_string(k) + " is not positive");
        break;
      }
      if (k > 0 && !canonical_less(roots[k - 1], roots[k])) {
        fail("R1", id, "roots are not strictly sorted");
        break;
      }
    }

    // (R2): the multiples of each simple root in R are exactly +-alpha_i.
    ++rep.checks;
    for (int i = 0; i < r; ++i)
      if (!contains(R, unit(i))) fail("R2", id, "missing simple root " + std::to_string(i + 1));
    for (const Vec& v : roots) {
      int nonzero = -1;
      bool single = true;
      for (int t = 0; t < r; ++t)
        if (v[t] != 0) {
          if (nonzero >= 0) {
            single = false;
            break;
          }
          nonzero = t;
        }
      if (single && nonzero >= 0 && v[nonzero] != 1)
        fail("R2", id, "a multiple of a simple root is listed as a root");
    }

    for (int i = 0; i < r; ++i) {
      const int t = G.transitions[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
      const RootSet& T = G.root_sets[static_cast<std::size_t>(t)];
      const CartanMatrix& CT = G.cartans[static_cast<std::size_t>(t)];

      // (C1): the transition pairing and the reflection round-trip.
      ++rep.checks;
      if (G.transitions[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] != id)
        fail("C1", id, "rho_" + std::to_string(i + 1) + " does not pair with itself");

      // (C2): row i of the Cartan matrix is shared across the edge.
      ++rep.checks;
      for (int j = 0; j < r; ++j)
        if (C.c[i][j] != CT.c[i][j]) {
          fail("C2", id, "row " + std::to_string(i + 1) + " changes across the edge");
          break;
        }

      // (R3): sigma_i maps R bijectively onto the target set, up to sign,
      // and applying sigma_i at the target returns every root.
      ++rep.checks;
      std::vector<Vec> images;
      images.reserve(roots.size());
      bool ok = true;
      for (const Vec& v : roots) {
        Vec w = reflect(C, i, v);
        Vec rep_w = all_nonneg(w) ? w : neg(w);
        if (!all_nonneg(w) && !all_nonpos(w)) {
          fail("R3", id, "mixed-sign image under sigma_" + std::to_string(i + 1));
          ok = false;
          break;
        }
        if (!contains(T, rep_w)) {
          fail("R3", id, "sigma image misses the target root set");
          ok = false;
          break;
        }
        if (!(reflect(CT, i, w) == v)) {
          fail("C1", id, "sigma_i at the target does not invert sigma_i");
          ok = false;
          break;
        }
        images.push_back(rep_w);
      }
      if (ok) {
        std::sort(images.begin(), images.end(), canonical_less);
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
          fail("R3", id, "sigma image collapses two roots onto one line");
      }
    }

    // (R4): the alternating product of length 2 m_{ij} returns both the
    // root set and the coordinates.
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        ++rep.checks;
        int mij = 0;
        for (const Vec& v : roots)
          if (support_within(v, i, j)) ++mij;
        int at = id;
        std::array<Vec, kMaxRank> cols;
        for (int k = 0; k < r; ++k) cols[static_cast<std::size_t>(k)] = unit(k);
        for (int step = 0; step < mij; ++step) {
          for (int g : {j, i}) {
            const CartanMatrix& CC = G.cartans[static_cast<std::size_t>(at)];
            for (int k = 0; k < r; ++k)
              cols[static_cast<std::size_t>(k)] = reflect(CC, g, cols[static_cast<std::size_t>(k)]);
            at = G.transitions[static_cast<std::size_t>(at)][static_cast<std::size_t>(g)];
          }
        }
        bool identity = at == id;
        for (int k = 0; identity && k < r; ++k)
          identity = cols[static_cast<std::size_t>(k)] == unit(k);
        if (!identity)
          fail("R4", id,
               "(rho_" + std::to_string(i + 1) + " rho_" + std::to_string(j + 1) + ")^" +
                   std::to_string(mij) + " is not the identity");
      }
    }
  }
  return rep;
}

bool is_irreducible(const CartanSchemeGraph& G) {
  return is_connected(dynkin_diagram(G.cartans[0]));
}

ClassificationRecord invariants(const CartanSchemeGraph& G, const GenerationLimits& limits) {
  ClassificationRecord rec;
  rec.rank = G.rank;
  rec.n_root_sets = G.n_root_sets();
  rec.n_objects = count_objects(G, limits);
  if (rec.n_objects % static_cast<std::uint64_t>(rec.n_root_sets) != 0)
    throw internal_error("object count does not divide over the root sets");
  rec.aut_order = rec.n_objects / static_cast<std::uint64_t>(rec.n_root_sets);
  rec.canonical_roots = canonical_presentation(G);
  for (const CartanMatrix& C : G.cartans)
    rec.diagram_families.push_back(classify_family(dynkin_diagram(C)));
  std::sort(rec.diagram_families.begin(), rec.diagram_families.end(),
            [](const DiagramFamily& a, const DiagramFamily& b) { return a.name() < b.name(); });
  return rec;
}

RootSet canonical_presentation(const CartanSchemeGraph& G) {
  // The representative set is the minimum over all objects and coordinate
  // permutations, comparing the lexicographically sorted sequences in the
  // ordering with alpha_1 most significant.  Only the final presentation
  // uses the height-graded storage order.
  const int r = G.rank;
  std::array<int, kMaxRank> perm{};
  std::vector<Vec> best;
  std::vector<Vec> cand;
  for (const RootSet& R : G.root_sets) {
    std::iota(perm.begin(), perm.begin() + r, 0);
    do {
      cand.clear();
      for (const Vec& v : R.roots) {
        Vec w;
        for (int k = 0; k < r; ++k) w[k] = v[perm[static_cast<std::size_t>(k)]];
        cand.push_back(w);
      }
      std::sort(cand.begin(), cand.end(), append_less);
      if (best.empty() ||
          std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                       append_less))
        best = cand;
    } while (std::next_permutation(perm.begin(), perm.begin() + r));
  }
  std::sort(best.begin(), best.end(), canonical_less);
  return RootSet{r, std::move(best)};
}

bool equivalent(const CartanSchemeGraph& a, const CartanSchemeGraph& b) {
  if (a.rank != b.rank) return false;
  return canonical_presentation(a).roots == canonical_presentation(b).roots;
}

RootSet root_subset(const RootSet& R, const std::vector<Vec>& spanning) {
  if (spanning.empty()) throw input_error("empty spanning set");
  Subspace S = Subspace::span(R.rank, spanning);
  const int k = S.dim();
  if (k == 0) throw input_error("spanning set spans the zero subspace");

  std::vector<Vec> members;
  for (const Vec& v : R.roots)
    if (S.contains(v)) members.push_back(v);

  // Base of the subset: members that are not the sum of two members.
  std::vector<Vec> base;
  for (const Vec& v : members) {
    bool is_sum = false;
    for (const Vec& u : members) {
      if (height(u) >= height(v)) break;
      Vec w = sub(v, u);
      if (all_nonneg(w) && find_root(members, w) >= 0) {
        is_sum = true;
        break;
      }
    }
    if (!is_sum) base.push_back(v);
  }
  if (static_cast<int>(base.size()) != k)
    throw root_system_error("subset base does not match the subspace rank");
  if (rank_of(base, R.rank) != k)
    throw root_system_error("subset base is degenerate");

  // Base members ascending; the d-th smallest becomes alpha_{k+1-d} of the
  // child coordinates, so child lists start with the simple words.
  std::vector<Vec> children;
  children.reserve(members.size());
  for (const Vec& v : members) {
    auto coords = solve_coordinates(base, v, R.rank);
    if (!coords) throw internal_error("subset member escapes the base span");
    Vec u;
    for (int j = 0; j < k; ++j) {
      const Rat& x = (*coords)[static_cast<std::size_t>(j)];
      if (!x.is_integer() || x.num < 0)
        throw root_system_error("subset is not in the nonnegative span of its base");
      if (x.num > INT16_MAX) throw capacity_error("coordinate overflow");
      u[k - 1 - j] = static_cast<std::int16_t>(x.num);
    }
    children.push_back(u);
  }
  return make_root_set(k, std::move(children));
}

std::vector<Vec> arrangement_normals(const RootSet& R) {
  std::vector<Vec> out;
  std::vector<Vec> directions;
  for (const Vec& v : R.roots) {
    int g = 0;
    for (int i = 0; i < R.rank; ++i) g = std::gcd(g, static_cast<int>(v[i]));
    Vec prim = v;
    if (g > 1)
      for (int i = 0; i < R.rank; ++i) prim[i] = static_cast<std::int16_t>(prim[i] / g);
    if (std::find(directions.begin(), directions.end(), prim) == directions.end()) {
      directions.push_back(prim);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace weyl
