#include "weyl/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "weyl/appendix.hpp"
#include "weyl/cartan.hpp"
#include "weyl/error.hpp"
#include "weyl/series.hpp"

namespace weyl {

namespace {

// Observed ceiling on root coordinates at these ranks.  Sums beyond it are
// pruned; a dictionary entry beyond it means the assumption broke.
constexpr int kCoordCap = 14;

using DigestPair = std::pair<std::uint64_t, std::uint64_t>;

struct PairHash {
  std::size_t operator()(const DigestPair& p) const noexcept {
    return static_cast<std::size_t>(mix64(p.first ^ (p.second * kFnvPrime)));
  }
};

DigestPair roots_digest(const std::vector<Vec>& roots) {
  Digest128 d;
  for (const Vec& v : roots)
    for (int i = 0; i < kMaxRank; ++i)
      d.feed(static_cast<std::uint64_t>(static_cast<std::uint16_t>(v[i])));
  return {d.lo, d.hi};
}

std::string coords_key(const std::vector<Vec>& sorted) {
  std::string s;
  s.reserve(sorted.size() * sizeof(Vec{}.c));
  for (const Vec& v : sorted)
    s.append(reinterpret_cast<const char*>(v.c.data()), sizeof(v.c));
  return s;
}

bool parallel_vec(const Vec& a, const Vec& b) {
  for (int i = 0; i < kMaxRank; ++i)
    for (int j = i + 1; j < kMaxRank; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool is_unit_coord(const Vec& v) {
  int ones = 0;
  for (int i = 0; i < kMaxRank; ++i) {
    if (v[i] == 1)
      ++ones;
    else if (v[i] != 0)
      return false;
  }
  return ones == 1;
}

// Primitive normal of the plane through two independent vectors living in
// the first three coordinates.
std::array<std::int64_t, 3> plane_key(const Vec& a, const Vec& b) {
  std::array<std::int64_t, 3> n = {
      static_cast<std::int64_t>(a[1]) * b[2] - static_cast<std::int64_t>(a[2]) * b[1],
      static_cast<std::int64_t>(a[2]) * b[0] - static_cast<std::int64_t>(a[0]) * b[2],
      static_cast<std::int64_t>(a[0]) * b[1] - static_cast<std::int64_t>(a[1]) * b[0]};
  std::int64_t g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
  if (g == 0) throw internal_error("plane normal of parallel vectors");
  for (auto& x : n) x /= g;
  for (const auto& x : n) {
    if (x > 0) break;
    if (x < 0) {
      for (auto& y : n) y = -y;
      break;
    }
  }
  return n;
}

// 3 + sum over planes with at least two of the vectors of (count - 3),
// evaluated on coordinate vectors spanning dimension 3.
int euler_from_coords(const std::vector<Vec>& coords) {
  std::map<std::array<std::int64_t, 3>, std::set<int>> planes;
  const int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto& members = planes[plane_key(coords[i], coords[j])];
      members.insert(i);
      members.insert(j);
    }
  int e = 3;
  for (const auto& [key, members] : planes) e += static_cast<int>(members.size()) - 3;
  return e;
}

// Change of the invariant when one more vector joins: members already in a
// plane through the newcomer raise its term by one per plane, members alone
// in their plane open a fresh two-element plane at -1.
int euler_delta(const std::vector<Vec>& coords, const Vec& alpha) {
  std::map<std::array<std::int64_t, 3>, int> classes;
  for (const Vec& u : coords) ++classes[plane_key(u, alpha)];
  int d = 0;
  for (const auto& [key, count] : classes) d += count >= 2 ? 1 : -1;
  return d;
}

bool sum_of_two(const std::vector<Vec>& coords, const Vec& target) {
  for (const Vec& u : coords) {
    Vec w;
    bool ok = true;
    for (int i = 0; i < kMaxRank; ++i) {
      int d = target[i] - u[i];
      if (d < 0) {
        ok = false;
        break;
      }
      w[i] = static_cast<std::int16_t>(d);
    }
    if (!ok || is_zero(w) || w == u) continue;
    if (std::find(coords.begin(), coords.end(), w) != coords.end()) return true;
  }
  return false;
}

std::optional<Vec> integral_coords_rational(const std::vector<Vec>& basevecs, const Vec& v) {
  auto q = solve_coordinates(basevecs, v, kMaxRank);
  if (!q) return std::nullopt;
  Vec out;
  for (std::size_t i = 0; i < q->size(); ++i) {
    const Rat& r = (*q)[i];
    if (r.den != 1 || r.num < 0 || r.num > INT16_MAX) return std::nullopt;
    out[static_cast<int>(i)] = static_cast<std::int16_t>(r.num);
  }
  return out;
}

// Fraction-free determinant (Bareiss); entries stay below 2^63 for k <= 7
// when the input entries are root coordinates.
std::int64_t det_int(std::array<std::array<std::int64_t, 8>, 8> m, int k) {
  std::int64_t sign = 1, prev = 1;
  for (int t = 0; t + 1 < k; ++t) {
    if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] == 0) {
      int sw = -1;
      for (int r = t + 1; r < k; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] != 0) {
          sw = r;
          break;
        }
      if (sw < 0) return 0;
      std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(sw)]);
      sign = -sign;
    }
    for (int r = t + 1; r < k; ++r)
      for (int c = t + 1; c < k; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                 m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] -
             m[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] *
                 m[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]) /
            prev;
    prev = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
  }
  return sign * m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
}

// Coordinates of v over independent base vectors by integer Cramer at the
// pivot columns of their span, where the base restricts invertibly; the
// solution is verified against the full vector, so callers may pass any v.
std::optional<Vec> integral_coords(const std::vector<Vec>& basevecs, const std::vector<int>& piv,
                                   const Vec& v) {
  const int k = static_cast<int>(basevecs.size());
  if (k < 1 || k > 7 || static_cast<int>(piv.size()) < k)
    return integral_coords_rational(basevecs, v);
  std::array<std::array<std::int64_t, 8>, 8> m{};
  for (int r = 0; r < k; ++r)
    for (int i = 0; i < k; ++i)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
          basevecs[static_cast<std::size_t>(i)][piv[static_cast<std::size_t>(r)]];
  const std::int64_t d0 = det_int(m, k);
  if (d0 == 0) return integral_coords_rational(basevecs, v);
  Vec out;
  for (int i = 0; i < k; ++i) {
    auto mi = m;
    for (int r = 0; r < k; ++r)
      mi[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = v[piv[static_cast<std::size_t>(r)]];
    const std::int64_t di = det_int(mi, k);
    if (di % d0 != 0) return std::nullopt;
    const std::int64_t x = di / d0;
    if (x < 0 || x > INT16_MAX) return std::nullopt;
    out[i] = static_cast<std::int16_t>(x);
  }
  for (int t = 0; t < kMaxRank; ++t) {
    std::int64_t acc = 0;
    for (int i = 0; i < k; ++i)
      acc += static_cast<std::int64_t>(out[i]) * basevecs[static_cast<std::size_t>(i)][t];
    if (acc != v[t]) return std::nullopt;
  }
  return out;
}

// Membership in the row space of the canonical primitive echelon rows by
// fraction-free elimination at the pivot columns.  Intermediate growth is
// renormalized by the content; pathological magnitudes fall back to the
// rational test.
bool in_span(const Subspace& s, const Vec& v) {
  if (s.ambient() != kMaxRank) return s.contains(v);
  const auto& rows = s.basis();
  const auto& piv = s.pivots();
  std::array<std::int64_t, kMaxRank> w;
  for (int i = 0; i < kMaxRank; ++i) w[static_cast<std::size_t>(i)] = v[i];
  constexpr std::int64_t kBig = std::int64_t{1} << 31;
  std::int64_t maxw = 32768;  // entries are int16
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const int c = piv[ri];
    const std::int64_t b = w[static_cast<std::size_t>(c)];
    if (b == 0) continue;
    const std::int64_t a = rows[ri][static_cast<std::size_t>(c)];
    std::int64_t maxr = 0;
    for (int t = 0; t < kMaxRank; ++t) {
      const std::int64_t rt = rows[ri][static_cast<std::size_t>(t)];
      maxr = std::max(maxr, rt < 0 ? -rt : rt);
    }
    if (maxr >= kBig || maxw >= kBig) return s.contains(v);
    std::int64_t nm = 0;
    for (int t = 0; t < kMaxRank; ++t) {
      const std::int64_t x =
          a * w[static_cast<std::size_t>(t)] - b * rows[ri][static_cast<std::size_t>(t)];
      w[static_cast<std::size_t>(t)] = x;
      nm = std::max(nm, x < 0 ? -x : x);
    }
    maxw = nm;
    if (maxw >= kBig) {
      std::int64_t g = 0;
      for (std::int64_t x : w) g = std::gcd(g, x);
      if (g > 1) {
        for (auto& x : w) x /= g;
        maxw /= g;
      }
      if (maxw >= kBig) return s.contains(v);
    }
  }
  for (std::int64_t x : w)
    if (x != 0) return false;
  return true;
}

// Index into the lower pair triangle; requires p < q.
std::size_t tri_index(int p, int q) {
  return static_cast<std::size_t>(q) * (static_cast<std::size_t>(q) - 1) / 2 +
         static_cast<std::size_t>(p);
}

// Connectivity of the members seen so far: nodes are the base vectors,
// edges the height-two members.
bool fragment_connected(const RsfFragment& f) {
  const int k = f.rank;
  std::array<std::uint16_t, 8> adj{};
  for (const Vec& cv : f.coords) {
    int a = -1, b = -1, extra = 0;
    for (int i = 0; i < k; ++i) {
      if (cv[i] == 1) {
        if (a < 0)
          a = i;
        else if (b < 0)
          b = i;
        else
          ++extra;
      } else if (cv[i] != 0) {
        ++extra;
      }
    }
    if (extra == 0 && b >= 0) {
      adj[static_cast<std::size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
      adj[static_cast<std::size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
    }
  }
  const std::uint16_t full = static_cast<std::uint16_t>((1u << k) - 1);
  std::uint16_t seen = 1;
  for (;;) {
    std::uint16_t grow = seen;
    for (int i = 0; i < k; ++i)
      if (seen & (1u << i)) grow |= adj[static_cast<std::size_t>(i)];
    if (grow == seen) break;
    seen = grow;
  }
  return seen == full;
}

int find_span(const Rsf& E, int k, const Subspace& s) {
  const auto& idx = E.span_index[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(s.digest(), INT32_MIN));
  for (; it != idx.end() && it->first == s.digest(); ++it)
    if (*E.fragments[static_cast<std::size_t>(k)][static_cast<std::size_t>(it->second)].span == s)
      return it->second;
  return -1;
}

void register_span(Rsf& E, int k, int fidx) {
  auto& idx = E.span_index[static_cast<std::size_t>(k)];
  auto key = std::make_pair(
      E.fragments[static_cast<std::size_t>(k)][static_cast<std::size_t>(fidx)].span->digest(), fidx);
  idx.insert(std::upper_bound(idx.begin(), idx.end(), key), key);
}

// First dictionary lookup for a fragment that just became connected: the
// entries containing its coords as a subset.  False when none remain, which
// rules the whole branch out because every connected subset of a finite
// system is itself one.  Identical coordinate sets recur across branches,
// so the lists are memoized per thread.
bool init_viable(RsfFragment& f, const Caches& c) {
  f.viable_init = true;
  const auto& pr = c.ranks[static_cast<std::size_t>(f.rank)];
  thread_local std::unordered_map<std::string, std::vector<std::int32_t>> memo;
  if (memo.size() > (1u << 20)) memo.clear();
  std::string key;
  key.reserve(sizeof(c.serial) + 1 + f.coords.size() * sizeof(Vec{}.c));
  key.append(reinterpret_cast<const char*>(&c.serial), sizeof(c.serial));
  key.push_back(static_cast<char>(f.rank));
  for (const Vec& v : f.coords)
    key.append(reinterpret_cast<const char*>(v.c.data()), sizeof(v.c));
  auto mit = memo.find(key);
  if (mit == memo.end()) {
    std::vector<std::int32_t> list;
    const std::vector<int>* plist = nullptr;
    for (const Vec& cv : f.coords) {
      auto it = pr.posting.find(cv);
      if (it == pr.posting.end()) {
        plist = nullptr;
        break;
      }
      if (!plist || it->second.size() < plist->size()) plist = &it->second;
    }
    if (plist)
      for (int ei : *plist) {
        const std::vector<Vec>& X = pr.entries[static_cast<std::size_t>(ei)];
        if (X.size() >= f.coords.size() &&
            std::includes(X.begin(), X.end(), f.coords.begin(), f.coords.end(), append_less))
          list.push_back(ei);
      }
    mit = memo.emplace(std::move(key), std::move(list)).first;
  }
  f.viable = mit->second;
  return !f.viable.empty();
}

// Drops viable entries not containing the new coordinate vector.
bool filter_viable(RsfFragment& f, const Caches::PerRank& pr, const Vec& cv) {
  if (!pr.upsilon.count(cv)) return false;
  std::size_t w = 0;
  for (std::int32_t ei : f.viable) {
    const std::vector<Vec>& X = pr.entries[static_cast<std::size_t>(ei)];
    if (std::binary_search(X.begin(), X.end(), cv, append_less))
      f.viable[w++] = ei;
  }
  f.viable.resize(w);
  return !f.viable.empty();
}

// Fills base, coords, connectivity and the rank-3 invariant from the member
// positions; false when a structural check rules the state out.
bool init_fragment(RsfFragment& f, const std::vector<Vec>& roots, const Caches* caches) {
  const int k = f.rank;
  Subspace acc(kMaxRank);
  std::vector<Vec> basevecs;
  basevecs.reserve(static_cast<std::size_t>(k));
  for (std::int16_t p : f.members) {
    if (static_cast<int>(basevecs.size()) == k) break;
    const Vec& v = roots[static_cast<std::size_t>(p)];
    if (!in_span(acc, v)) {
      acc = acc.extended(v);
      f.base[basevecs.size()] = p;
      basevecs.push_back(v);
    }
  }
  if (static_cast<int>(basevecs.size()) != k)
    throw internal_error("fragment span dimension disagrees with its members");
  f.coords.clear();
  f.coords.reserve(f.members.size());
  for (std::int16_t p : f.members) {
    auto cv = integral_coords(basevecs, f.span->pivots(), roots[static_cast<std::size_t>(p)]);
    if (!cv) return false;
    f.coords.push_back(*cv);
  }
  for (const Vec& cv : f.coords)
    if (!is_unit_coord(cv) && !sum_of_two(f.coords, cv)) return false;
  f.connected = fragment_connected(f);
  std::sort(f.coords.begin(), f.coords.end(), append_less);
  if (k == 3) f.euler = euler_from_coords(f.coords);
  if (caches && f.connected && k <= caches->rho && !init_viable(f, *caches))
    return false;
  return true;
}

bool add_member(Rsf& E, RsfFragment& f, std::int16_t pos, const Vec& alpha, const Caches* caches) {
  std::vector<Vec> basevecs;
  basevecs.reserve(static_cast<std::size_t>(f.rank));
  for (int i = 0; i < f.rank; ++i) basevecs.push_back(E.roots[static_cast<std::size_t>(f.base[static_cast<std::size_t>(i)])]);
  auto cv = integral_coords(basevecs, f.span->pivots(), alpha);
  if (!cv) return false;
  if (!is_unit_coord(*cv) && !sum_of_two(f.coords, *cv)) return false;
  if (f.rank == 3) {
    const int old = f.euler;
    f.euler += euler_delta(f.coords, *cv);
    if (old == 0 && f.euler != 0)
      ++E.euler_nonzero;
    else if (old != 0 && f.euler == 0)
      --E.euler_nonzero;
  }
  const bool was_connected = f.connected;
  f.members.push_back(pos);
  f.coords.insert(std::upper_bound(f.coords.begin(), f.coords.end(), *cv, append_less), *cv);
  if (!f.connected) f.connected = fragment_connected(f);
  if (caches && f.connected && f.rank <= caches->rho) {
    if (!was_connected) {
      if (!init_viable(f, *caches)) return false;
    } else if (!filter_viable(f, caches->ranks[static_cast<std::size_t>(f.rank)], *cv)) {
      return false;
    }
  }
  return true;
}

bool create_fragment(Rsf& E, int k, Subspace s, const Caches* caches) {
  if (s.dim() != k) throw internal_error("fragment dimension mismatch");
  RsfFragment f;
  f.rank = static_cast<std::int8_t>(k);
  f.span = std::make_shared<const Subspace>(std::move(s));
  const int n = static_cast<int>(E.roots.size());
  for (int p = 0; p < n; ++p)
    if (in_span(*f.span, E.roots[static_cast<std::size_t>(p)]))
      f.members.push_back(static_cast<std::int16_t>(p));
  if (!init_fragment(f, E.roots, caches)) return false;
  if (k == 3 && f.euler != 0) ++E.euler_nonzero;
  const int fidx = static_cast<int>(E.fragments[static_cast<std::size_t>(k)].size());
  if (k == 2)
    for (std::size_t a = 0; a < f.members.size(); ++a)
      for (std::size_t b = a + 1; b < f.members.size(); ++b)
        E.pair2[tri_index(f.members[a], f.members[b])] = static_cast<std::int16_t>(fidx);
  E.fragments[static_cast<std::size_t>(k)].push_back(std::move(f));
  register_span(E, k, fidx);
  return true;
}

int default_rho(int r) { return (r == 6 || r == 7) ? 4 : 3; }

}  // namespace

int euler_invariant(const std::vector<Vec>& roots) {
  if (Subspace::span(kMaxRank, roots).dim() != 3)
    throw input_error("euler invariant needs roots spanning dimension 3");
  std::map<std::vector<std::int64_t>, std::set<int>> planes;
  const int n = static_cast<int>(roots.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Subspace p = Subspace::span(kMaxRank, {roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]});
      if (p.dim() != 2) continue;
      std::vector<std::int64_t> key;
      for (const auto& row : p.basis()) key.insert(key.end(), row.begin(), row.end());
      auto& members = planes[key];
      members.insert(i);
      members.insert(j);
    }
  int e = 3;
  for (const auto& [key, members] : planes) e += static_cast<int>(members.size()) - 3;
  return e;
}

std::vector<KnownClass> classification(int rank) {
  if (rank < 3 || rank > 8) throw input_error("classification covers ranks 3 to 8");
  std::vector<KnownClass> out;
  const std::vector<RootSet> fixtures = load_fixtures(rank);
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Table1Row& row = table1_row(rank, static_cast<int>(i) + 1);
    CartanSchemeGraph G = generate_objects(fixtures[i]);
    KnownClass kc;
    kc.name = "rank " + std::to_string(rank) + " Nr. " + std::to_string(row.nr);
    if (row.n_root_sets == 1) kc.name += " (" + row.group_label + ")";
    kc.canonical = canonical_presentation(G);
    kc.n_root_sets = static_cast<std::uint64_t>(row.n_root_sets);
    kc.n_objects = row.n_objects;
    kc.aut_order = row.aut_order;
    out.push_back(std::move(kc));
  }
  auto add_plain = [&](std::string name, const RootSet& rs, std::uint64_t m, std::uint64_t n,
                       std::uint64_t aut) {
    CartanSchemeGraph G = generate_objects(rs);
    if (static_cast<std::uint64_t>(G.n_root_sets()) != m)
      throw internal_error("distinct root-set count disagrees with its closed form");
    out.push_back(KnownClass{std::move(name), canonical_presentation(G), m, n, aut});
  };
  const std::string R = std::to_string(rank);
  for (char fam : {'A', 'B', 'C', 'D'}) {
    if (fam == 'D' && rank == 3) continue;  // coincides with A_3
    StandardFamily sf = fam == 'A'   ? StandardFamily::A
                        : fam == 'B' ? StandardFamily::B
                        : fam == 'C' ? StandardFamily::C
                                     : StandardFamily::D;
    const std::uint64_t n = coxeter_order(std::string(1, fam) + R);
    add_plain(std::string(1, fam) + R, standard_roots(sf, rank), 1, n, n);
  }
  for (int s = 1; s <= rank - 1; ++s) {
    std::vector<int> Z;
    for (int t = 1; t <= s; ++t) Z.push_back(t);
    const SeriesCounts sc = series_counts(rank, s);
    add_plain("D'(" + R + "," + std::to_string(s) + ")", phi(rank, Z), sc.n_root_sets,
              sc.n_objects, sc.aut_order);
  }
  return out;
}

const KnownClass* find_class(const std::vector<KnownClass>& classes, const RootSet& canonical) {
  for (const KnownClass& k : classes)
    if (k.canonical.rank == canonical.rank && k.canonical.roots == canonical.roots) return &k;
  return nullptr;
}

std::vector<RootSet> seed_sets(int r, const std::vector<RootSet>& base) {
  if (r < 3 || r > kMaxRank) throw input_error("seed rank out of range");
  std::vector<RootSet> out;
  out.reserve(base.size() * static_cast<std::size_t>(r - 1));
  for (const RootSet& B : base) {
    if (B.rank != r - 1) throw input_error("seed base must have rank one less");
    std::vector<Vec> shifted;
    shifted.reserve(B.roots.size());
    for (const Vec& v : B.roots) {
      Vec w;
      for (int i = 0; i < r - 1; ++i) w[i + 1] = v[i];
      shifted.push_back(w);
    }
    for (int j = 2; j <= r; ++j) {
      std::vector<Vec> roots = shifted;
      roots.push_back(unit(0));
      roots.push_back(add(unit(0), unit(j - 1)));
      out.push_back(make_root_set(r, roots));
    }
  }
  return out;
}

namespace {

// Extracts one subset (all roots inside the span) into the dictionary,
// together with its coordinate permutations.
void harvest(Caches& c, std::vector<std::set<DigestPair>>& seen, const std::vector<Vec>& roots,
             const Subspace& s, int k) {
  std::vector<Vec> mem;
  for (const Vec& v : roots)
    if (in_span(s, v)) mem.push_back(v);
  std::sort(mem.begin(), mem.end(), append_less);
  Subspace acc(kMaxRank);
  std::vector<Vec> basevecs;
  for (const Vec& v : mem) {
    if (static_cast<int>(basevecs.size()) == k) break;
    if (!in_span(acc, v)) {
      acc = acc.extended(v);
      basevecs.push_back(v);
    }
  }
  if (static_cast<int>(basevecs.size()) != k) throw internal_error("subset span came out short");
  std::vector<Vec> coords;
  coords.reserve(mem.size());
  for (const Vec& v : mem) {
    auto cv = integral_coords(basevecs, s.pivots(), v);
    if (!cv) throw internal_error("subset coordinates are not nonnegative integers");
    for (int i = 0; i < k; ++i)
      if ((*cv)[i] > kCoordCap)
        throw divergence_error("subset coordinate exceeds the structural bound of 14");
    coords.push_back(*cv);
  }
  RsfFragment probe;
  probe.rank = static_cast<std::int8_t>(k);
  probe.coords = coords;
  if (!fragment_connected(probe)) return;  // only irreducible subsets matter
  std::sort(coords.begin(), coords.end(), append_less);
  if (!seen[static_cast<std::size_t>(k)].insert(roots_digest(coords)).second) return;
  auto& pr = c.ranks[static_cast<std::size_t>(k)];
  pr.entries.push_back(coords);
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + k, 0);
  std::vector<Vec> pc(coords.size());
  while (std::next_permutation(perm.begin(), perm.begin() + k)) {
    for (std::size_t m = 0; m < coords.size(); ++m) {
      Vec w;
      for (int i = 0; i < k; ++i) w[i] = coords[m][perm[static_cast<std::size_t>(i)]];
      pc[m] = w;
    }
    std::sort(pc.begin(), pc.end(), append_less);
    if (seen[static_cast<std::size_t>(k)].insert(roots_digest(pc)).second) pr.entries.push_back(pc);
  }
}

}  // namespace

Caches build_caches(const std::vector<RootSet>& base, int rho) {
  if (rho < 2 || rho > 7) throw input_error("completion dictionary bound must lie in 2..7");
  static std::atomic<std::uint64_t> next_serial{1};
  Caches c;
  c.rho = rho;
  c.serial = next_serial.fetch_add(1);
  c.ranks.resize(static_cast<std::size_t>(rho) + 1);
  std::vector<std::set<DigestPair>> seen(static_cast<std::size_t>(rho) + 1);
  auto push_unique = [](std::vector<Subspace>& v, std::map<std::uint64_t, std::vector<int>>& idx,
                        Subspace s) {
    auto& bucket = idx[s.digest()];
    for (int i : bucket)
      if (v[static_cast<std::size_t>(i)] == s) return;
    bucket.push_back(static_cast<int>(v.size()));
    v.push_back(std::move(s));
  };
  for (const RootSet& B : base) {
    CartanSchemeGraph G = generate_objects(B);
    for (const RootSet& RS : G.root_sets) {
      const std::vector<Vec>& roots = RS.roots;
      const int n = static_cast<int>(roots.size());
      std::vector<Subspace> cur;
      std::map<std::uint64_t, std::vector<int>> curd;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          push_unique(cur, curd,
                      Subspace::span(kMaxRank, {roots[static_cast<std::size_t>(i)],
                                                roots[static_cast<std::size_t>(j)]}));
      for (int k = 2; k <= rho; ++k) {
        for (const Subspace& s : cur) harvest(c, seen, roots, s, k);
        if (k == rho) break;
        std::vector<Subspace> nxt;
        std::map<std::uint64_t, std::vector<int>> nxd;
        for (const Subspace& s : cur)
          for (int i = 0; i < n; ++i)
            if (!in_span(s, roots[static_cast<std::size_t>(i)]))
              push_unique(nxt, nxd, s.extended(roots[static_cast<std::size_t>(i)]));
        cur = std::move(nxt);
      }
    }
  }
  for (int k = 2; k <= rho; ++k) {
    auto& pr = c.ranks[static_cast<std::size_t>(k)];
    for (int ei = 0; ei < static_cast<int>(pr.entries.size()); ++ei)
      for (const Vec& v : pr.entries[static_cast<std::size_t>(ei)]) {
        pr.posting[v].push_back(ei);
        pr.upsilon.insert(v);
      }
  }
  return c;
}

Rsf append_root(const Rsf& D, const Vec& alpha, const Caches* caches) {
  if (!D.isvalid) throw input_error("cannot extend an invalidated state");
  if (!D.roots.empty() && !append_less(D.roots.back(), alpha))
    throw input_error("appended root must exceed every present root");
  if (is_zero(alpha) || !all_nonneg(alpha))
    throw input_error("appended root must be nonzero and nonnegative");
  for (int i = D.rank; i < kMaxRank; ++i)
    if (alpha[i] != 0) throw input_error("appended root has support beyond the rank");

  // Cheap rejections first; an invalid result carries no state.
  auto reject = [&]() {
    Rsf bad;
    bad.rank = D.rank;
    bad.rho = D.rho;
    bad.isvalid = false;
    return bad;
  };
  for (int i = 0; i < D.rank; ++i)
    if (alpha[i] > kCoordCap) return reject();
  for (const Vec& b : D.roots)
    if (parallel_vec(b, alpha)) return reject();
  std::array<int, kMaxRank> supp{};
  int s = 0;
  for (int i = 0; i < D.rank; ++i)
    if (alpha[i] != 0) supp[static_cast<std::size_t>(s++)] = i;
  const int ht = height(alpha);
  if (s == 2 && ht > 2) {
    // An edge root below alpha in the append order would already be here.
    Vec edge = add(unit(supp[0]), unit(supp[1]));
    if (!std::binary_search(D.roots.begin(), D.roots.end(), edge, append_less)) return reject();
  }
  if (s >= 3) {
    std::uint16_t mask = 0;
    for (int t = 0; t < s; ++t) mask |= static_cast<std::uint16_t>(1u << supp[static_cast<std::size_t>(t)]);
    std::uint16_t reach = static_cast<std::uint16_t>(1u << supp[0]);
    for (;;) {
      std::uint16_t grow = reach;
      for (int i = 0; i < D.rank; ++i)
        if (reach & (1u << i)) grow |= static_cast<std::uint16_t>(D.adjacency[static_cast<std::size_t>(i)] & mask);
      if (grow == reach) break;
      reach = grow;
    }
    if (reach != mask) return reject();
  }

  Rsf E = D;
  const std::int16_t pos = static_cast<std::int16_t>(E.roots.size());
  E.roots.push_back(alpha);
  E.pair2.resize(E.pair2.size() + static_cast<std::size_t>(pos), -1);
  if (alpha[0] >= 2) E.has_big_first = true;
  if (s == 2 && ht == 2) {
    E.adjacency[static_cast<std::size_t>(supp[0])] |= static_cast<std::uint16_t>(1u << supp[1]);
    E.adjacency[static_cast<std::size_t>(supp[1])] |= static_cast<std::uint16_t>(1u << supp[0]);
  }

  std::vector<std::pair<int, int>> extend;
  std::vector<int> r3_with_alpha;
  for (int k = 2; k <= E.rho; ++k) {
    auto& fl = E.fragments[static_cast<std::size_t>(k)];
    const int nf = static_cast<int>(fl.size());
    for (int idx = 0; idx < nf; ++idx) {
      if (in_span(*fl[static_cast<std::size_t>(idx)].span, alpha)) {
        if (!add_member(E, fl[static_cast<std::size_t>(idx)], pos, alpha, caches)) {
          E.isvalid = false;
          return E;
        }
        if (k == 2)
          for (std::int16_t m : fl[static_cast<std::size_t>(idx)].members)
            if (m != pos) E.pair2[tri_index(m, pos)] = static_cast<std::int16_t>(idx);
        else if (k == 3)
          r3_with_alpha.push_back(idx);
      } else if (k < E.rho) {
        extend.emplace_back(k, idx);
      }
    }
  }
  // Every pair of roots lies in exactly one rank-2 fragment, so partners
  // with a triangle entry are covered and each construction below is new.
  for (int p = 0; p < pos; ++p) {
    if (E.pair2[tri_index(p, pos)] >= 0) continue;
    Subspace s2 = Subspace::span(kMaxRank, {E.roots[static_cast<std::size_t>(p)], alpha});
    if (!create_fragment(E, 2, std::move(s2), caches)) {
      E.isvalid = false;
      return E;
    }
  }
  // Distinct rank-2 fragments often extend to the same rank-3 span; once a
  // span is built or recognized, every member pair's fragment is marked as
  // done with it, including the pairs inside spans that held alpha already.
  std::vector<char> handled(E.fragments[2].size(), 0);
  auto mark_pairs = [&](const RsfFragment& f3) {
    const auto& mem = f3.members;
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b) {
        const std::int16_t j = E.pair2[tri_index(mem[a], mem[b])];
        if (j >= 0) handled[static_cast<std::size_t>(j)] = 1;
      }
  };
  if (E.rho >= 3)
    for (int idx : r3_with_alpha) mark_pairs(E.fragments[3][static_cast<std::size_t>(idx)]);
  for (const auto& [k, idx] : extend) {
    if (k == 2 && handled[static_cast<std::size_t>(idx)]) continue;
    Subspace sx =
        E.fragments[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)].span->extended(alpha);
    int found = find_span(E, k + 1, sx);
    if (found < 0) {
      if (!create_fragment(E, k + 1, std::move(sx), caches)) {
        E.isvalid = false;
        return E;
      }
      found = static_cast<int>(E.fragments[static_cast<std::size_t>(k) + 1].size()) - 1;
    }
    if (k == 2) mark_pairs(E.fragments[3][static_cast<std::size_t>(found)]);
  }
  return E;
}

Rsf seed_rsf(const RootSet& seed, int rho, const Caches* caches) {
  if (rho < 2 || rho > seed.rank)
    throw input_error("fragment rank bound must lie between 2 and the rank");
  Rsf E;
  E.rank = seed.rank;
  E.rho = rho;
  E.fragments.resize(static_cast<std::size_t>(rho) + 1);
  E.span_index.resize(static_cast<std::size_t>(rho) + 1);
  std::vector<Vec> order = seed.roots;
  std::sort(order.begin(), order.end(), append_less);
  for (const Vec& v : order) {
    E = append_root(E, v, caches);
    if (!E.isvalid) {
      if (!caches) throw internal_error("seed rejected by the construction checks");
      return E;  // no dictionary entry can complete it: nothing grows from here
    }
  }
  return E;
}

namespace {

struct EnumState {
  int rank = 0;
  bool use_omega = true;
  const Caches* caches = nullptr;
  GenerationLimits verify_limits{};
  GenerationLimits rank2_limits{};
  std::mutex mu;
  std::unordered_set<DigestPair, PairHash> omega;
  std::unordered_set<DigestPair, PairHash> submitted;
  std::map<std::string, bool> rank2_memo;
  std::map<std::string, std::pair<RootSet, CartanSchemeGraph>> classes;
  std::FILE* ckpt = nullptr;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
};

void checkpoint_omega(EnumState& st, const DigestPair& d) {
  if (st.ckpt)
    std::fprintf(st.ckpt, "omega %016llx%016llx\n", static_cast<unsigned long long>(d.first),
                 static_cast<unsigned long long>(d.second));
}

// Reflections 2..r are determined once some root has first coordinate > 1:
// every root that could change their defining maxima is below that root in
// the append order.  Images of the current set under them are recorded so
// the equivalent branches they head are skipped; a mixed-sign image kills
// the branch outright.
bool mark_images(const Rsf& D, const std::unordered_set<Vec, VecHash>& present, EnumState& st) {
  const int r = D.rank;
  std::array<std::array<int, kMaxRank>, kMaxRank> c{};
  for (int i = 1; i < r; ++i) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      int m = 0;
      for (;;) {
        Vec t = unit(j);
        t[i] = static_cast<std::int16_t>(m + 1);
        if (!present.count(t)) break;
        ++m;
        if (m > 4 * kCoordCap) throw internal_error("reflection entry runaway");
      }
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -m;
    }
  }
  std::vector<DigestPair> digests;
  digests.reserve(static_cast<std::size_t>(r) - 1);
  std::vector<Vec> img;
  img.reserve(D.roots.size());
  for (int i = 1; i < r; ++i) {
    img.clear();
    for (const Vec& v : D.roots) {
      long acc = 0;
      for (int j = 0; j < r; ++j)
        acc += static_cast<long>(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * v[j];
      Vec w = v;
      w[i] = static_cast<std::int16_t>(v[i] - acc);
      if (all_nonneg(w))
        img.push_back(w);
      else if (all_nonpos(w))
        img.push_back(neg(w));
      else
        return false;
    }
    std::sort(img.begin(), img.end(), append_less);
    digests.push_back(roots_digest(img));
  }
  std::lock_guard<std::mutex> lk(st.mu);
  for (const DigestPair& d : digests)
    if (st.omega.insert(d).second) checkpoint_omega(st, d);
  return true;
}

struct XiOutcome {
  bool prune = false;
  bool forced = false;
  Vec gamma;
};

// Walks the cached viable completions of every connected fragment.
// Entries needing a root at or below the present maximum can never complete
// on this branch and are dropped for good; a fragment with none left kills
// the node, and a root common to all remaining completions is forced and
// returned as the smallest such.
XiOutcome xi_scan(Rsf& D, const Caches& c) {
  XiOutcome out;
  const Vec& mx = D.roots.back();
  std::vector<Vec> miss, common, inter;
  for (int k = 2; k <= c.rho && k <= D.rho; ++k) {
    const auto& pr = c.ranks[static_cast<std::size_t>(k)];
    for (RsfFragment& f : D.fragments[static_cast<std::size_t>(k)]) {
      if (!f.connected || !f.viable_init) continue;
      const std::vector<Vec>& M = f.coords;
      bool complete = false;
      for (std::int32_t ei : f.viable)
        if (pr.entries[static_cast<std::size_t>(ei)].size() == M.size()) {
          complete = true;
          break;
        }
      if (complete) continue;
      std::array<Vec, 8> basevecs{};
      for (int i = 0; i < k; ++i)
        basevecs[static_cast<std::size_t>(i)] = D.roots[static_cast<std::size_t>(f.base[static_cast<std::size_t>(i)])];
      bool have_common = false, common_dead = false;
      std::size_t w = 0;
      for (std::int32_t ei : f.viable) {
        const std::vector<Vec>& X = pr.entries[static_cast<std::size_t>(ei)];
        miss.clear();
        bool viable = true;
        std::size_t mi = 0;
        for (const Vec& x : X) {
          if (mi < M.size() && x == M[mi]) {
            ++mi;
            continue;
          }
          long acc[kMaxRank] = {};
          for (int i = 0; i < k; ++i)
            if (x[i])
              for (int t = 0; t < D.rank; ++t)
                acc[t] += static_cast<long>(x[i]) * basevecs[static_cast<std::size_t>(i)][t];
          Vec g;
          bool ok = true;
          for (int t = 0; t < D.rank; ++t) {
            if (acc[t] > kCoordCap) {
              ok = false;
              break;
            }
            g[t] = static_cast<std::int16_t>(acc[t]);
          }
          if (!ok || !append_less(mx, g)) {
            viable = false;  // this completion needs a root no longer reachable
            break;
          }
          miss.push_back(g);
        }
        if (!viable) continue;
        f.viable[w++] = ei;
        if (miss.empty()) {
          common.clear();
          have_common = true;
          common_dead = true;  // fragment may already be complete: nothing is forced
        } else if (!have_common) {
          common = miss;
          std::sort(common.begin(), common.end(), append_less);
          have_common = true;
        } else if (!common_dead) {
          std::sort(miss.begin(), miss.end(), append_less);
          inter.clear();
          std::set_intersection(common.begin(), common.end(), miss.begin(), miss.end(),
                                std::back_inserter(inter), append_less);
          common = inter;
          if (common.empty()) common_dead = true;
        }
      }
      f.viable.resize(w);
      if (w == 0) {
        out.prune = true;
        return out;
      }
      if (have_common && !common.empty()) {
        const Vec& g = common.front();
        if (!out.forced || append_less(g, out.gamma)) {
          out.forced = true;
          out.gamma = g;
        }
      }
    }
  }
  return out;
}

std::vector<Vec> candidate_sums(const Rsf& D, const std::unordered_set<Vec, VecHash>& present,
                                const Vec* gamma) {
  std::unordered_set<Vec, VecHash> uniq;
  const Vec& mx = D.roots.back();
  const int n = static_cast<int>(D.roots.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec s = add(D.roots[static_cast<std::size_t>(i)], D.roots[static_cast<std::size_t>(j)]);
      bool big = false;
      for (int t = 0; t < D.rank; ++t)
        if (s[t] > kCoordCap) {
          big = true;
          break;
        }
      if (big) continue;
      if (!append_less(mx, s)) continue;
      if (gamma && append_less(*gamma, s)) continue;
      if (present.count(s)) continue;
      uniq.insert(s);
    }
  std::vector<Vec> out(uniq.begin(), uniq.end());
  std::sort(out.begin(), out.end(), append_less);
  return out;
}

// Full verification of one complete-looking set.  Every distinct root set
// of a verified scheme is remembered, so sibling systems met later on other
// branches return immediately.
void submit(const Rsf& D, EnumState& st) {
  const DigestPair dg = roots_digest(D.roots);
  {
    std::lock_guard<std::mutex> lk(st.mu);
    if (st.submitted.count(dg)) return;
  }
  for (const RsfFragment& f : D.fragments[2]) {
    const std::vector<Vec>& M = f.coords;  // kept sorted by append order
    std::string key = coords_key(M);
    bool known = false, ok = false;
    {
      std::lock_guard<std::mutex> lk(st.mu);
      auto it = st.rank2_memo.find(key);
      if (it != st.rank2_memo.end()) {
        known = true;
        ok = it->second;
      }
    }
    if (!known) {
      try {
        CartanSchemeGraph g2 = generate_objects(make_root_set(2, M), st.rank2_limits);
        ok = verify_axioms(g2).all_pass();
      } catch (const error&) {
        ok = false;
      }
      std::lock_guard<std::mutex> lk(st.mu);
      st.rank2_memo.emplace(std::move(key), ok);
    }
    if (!ok) {
      std::lock_guard<std::mutex> lk(st.mu);
      st.submitted.insert(dg);
      return;
    }
  }
  CartanSchemeGraph G;
  bool good = true;
  try {
    G = generate_objects(make_root_set(D.rank, D.roots), st.verify_limits);
    good = verify_axioms(G).all_pass() && is_irreducible(G);
  } catch (const error&) {
    good = false;
  }
  if (!good) {
    std::lock_guard<std::mutex> lk(st.mu);
    st.submitted.insert(dg);
    return;
  }
  RootSet canon = canonical_presentation(G);
  std::lock_guard<std::mutex> lk(st.mu);
  std::vector<Vec> tmp;
  for (const RootSet& S : G.root_sets) {
    tmp = S.roots;
    std::sort(tmp.begin(), tmp.end(), append_less);
    st.submitted.insert(roots_digest(tmp));
  }
  std::string key = coords_key(canon.roots);
  if (!st.classes.count(key)) {
    if (st.ckpt) {
      std::string line = "class ";
      for (std::size_t i = 0; i < canon.roots.size(); ++i) {
        if (i) line += ',';
        line += format_root_word(canon.roots[i], canon.rank);
      }
      line += '\n';
      std::fputs(line.c_str(), st.ckpt);
    }
    st.classes.emplace(std::move(key), std::make_pair(std::move(canon), std::move(G)));
  }
}

void enumerate_node(Rsf& D, const Vec* gamma, EnumState& st) {
  if (st.failed.load(std::memory_order_relaxed)) return;
  st.nodes.fetch_add(1, std::memory_order_relaxed);
  std::unordered_set<Vec, VecHash> present(D.roots.size() * 2);
  for (const Vec& v : D.roots) present.insert(v);
  if (st.use_omega) {
    const DigestPair dg = roots_digest(D.roots);
    {
      std::lock_guard<std::mutex> lk(st.mu);
      if (st.omega.count(dg)) return;
    }
    if (D.has_big_first && !mark_images(D, present, st)) return;
  }
  if (!gamma) {
    if (D.euler_nonzero == 0) submit(D, st);
    if (st.caches) {
      XiOutcome xo = xi_scan(D, *st.caches);
      if (xo.prune) return;
      if (xo.forced) {
        enumerate_node(D, &xo.gamma, st);
        return;
      }
    }
  }
  const std::vector<Vec> Y = candidate_sums(D, present, gamma);
  for (const Vec& a : Y) {
    Rsf child = append_root(D, a, st.caches);
    if (!child.isvalid) continue;
    enumerate_node(child, (gamma && a == *gamma) ? nullptr : gamma, st);
  }
}

struct CheckpointData {
  bool loaded = false;
  std::set<int> done;
  std::vector<DigestPair> omega;
  std::vector<std::vector<Vec>> classes;
};

std::string checkpoint_header(int rank, int rho, bool use_omega, bool use_xi) {
  std::ostringstream os;
  os << "rank " << rank << " rho " << rho << " omega " << (use_omega ? 1 : 0) << " xi "
     << (use_xi ? 1 : 0);
  return os.str();
}

CheckpointData load_checkpoint(const std::string& path, int rank, int rho, bool use_omega,
                               bool use_xi) {
  CheckpointData cd;
  std::ifstream in(path);
  if (!in) return cd;
  std::string line;
  if (!std::getline(in, line)) return cd;
  if (line != checkpoint_header(rank, rho, use_omega, use_xi))
    throw input_error("checkpoint header does not match this run");
  cd.loaded = true;
  auto is_hex = [](const std::string& s) {
    for (char ch : s)
      if (!std::isxdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  while (std::getline(in, line)) {
    // A truncated tail from an interrupted run is skipped, not an error.
    if (line.rfind("omega ", 0) == 0) {
      const std::string hex = line.substr(6);
      if (hex.size() == 32 && is_hex(hex))
        cd.omega.emplace_back(std::stoull(hex.substr(0, 16), nullptr, 16),
                              std::stoull(hex.substr(16, 16), nullptr, 16));
    } else if (line.rfind("class ", 0) == 0) {
      std::vector<Vec> roots;
      std::istringstream ss(line.substr(6));
      std::string word;
      bool ok = true;
      while (std::getline(ss, word, ',')) {
        try {
          roots.push_back(parse_root_word(word, rank));
        } catch (const error&) {
          ok = false;
          break;
        }
      }
      if (ok && !roots.empty()) cd.classes.push_back(std::move(roots));
    } else if (line.rfind("seed-done ", 0) == 0) {
      cd.done.insert(std::atoi(line.c_str() + 10));
    }
  }
  return cd;
}

}  // namespace

std::vector<ClassificationRecord> enumerate_rank(int r, const EnumerateConfig& cfg) {
  if (r < 4 || r > 8) throw input_error("enumeration covers ranks 4 to 8");
  const int rho = cfg.rho == 0 ? default_rho(r) : cfg.rho;
  if (rho < 3 || rho > r - 1) throw input_error("fragment rank bound must lie in 3..r-1");

  const std::vector<KnownClass> known = classification(r - 1);
  std::vector<RootSet> base;
  base.reserve(known.size());
  for (const KnownClass& k : known) base.push_back(k.canonical);
  Caches caches;
  if (cfg.use_xi) caches = build_caches(base, rho);
  const std::vector<RootSet> seeds = seed_sets(r, base);

  EnumState st;
  st.rank = r;
  st.use_omega = cfg.use_omega;
  st.caches = cfg.use_xi ? &caches : nullptr;
  st.verify_limits = GenerationLimits{cfg.limits.max_objects, 1024, 4 * kCoordCap};
  st.rank2_limits = GenerationLimits{100000, 512, 2 * kCoordCap};

  std::set<int> done;
  if (!cfg.checkpoint.empty()) {
    CheckpointData cd = load_checkpoint(cfg.checkpoint, r, rho, cfg.use_omega, cfg.use_xi);
    if (cd.loaded) {
      done = std::move(cd.done);
      for (const DigestPair& d : cd.omega) st.omega.insert(d);
      for (const auto& roots : cd.classes) {
        RootSet canon = make_root_set(r, roots);
        CartanSchemeGraph G = generate_objects(canon, st.verify_limits);
        std::vector<Vec> tmp;
        for (const RootSet& S : G.root_sets) {
          tmp = S.roots;
          std::sort(tmp.begin(), tmp.end(), append_less);
          st.submitted.insert(roots_digest(tmp));
        }
        st.classes.emplace(coords_key(canon.roots), std::make_pair(std::move(canon), std::move(G)));
      }
    }
    st.ckpt = std::fopen(cfg.checkpoint.c_str(), cd.loaded ? "a" : "w");
    if (!st.ckpt) throw input_error("cannot open checkpoint file");
    if (!cd.loaded) {
      std::fprintf(st.ckpt, "%s\n", checkpoint_header(r, rho, cfg.use_omega, cfg.use_xi).c_str());
      std::fflush(st.ckpt);
    }
  }

  std::atomic<int> cursor{0};
  const int jobs = std::max(1, std::min(cfg.jobs, static_cast<int>(seeds.size())));
  auto worker = [&]() {
    for (;;) {
      if (st.failed.load()) return;
      const int i = cursor.fetch_add(1);
      if (i >= static_cast<int>(seeds.size())) return;
      if (done.count(i)) continue;
      try {
        Rsf s = seed_rsf(seeds[static_cast<std::size_t>(i)], rho, st.caches);
        if (s.isvalid) enumerate_node(s, nullptr, st);
        std::lock_guard<std::mutex> lk(st.mu);
        if (st.ckpt) {
          std::fprintf(st.ckpt, "seed-done %d\n", i);
          std::fflush(st.ckpt);
        }
        if (cfg.progress) {
          std::ostringstream os;
          os << "rank " << r << " seed " << (i + 1) << "/" << seeds.size() << ": "
             << st.classes.size() << " classes, " << st.nodes.load() << " nodes";
          cfg.progress(os.str());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(st.mu);
        if (!st.first_error) st.first_error = std::current_exception();
        st.failed.store(true);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (st.ckpt) std::fclose(st.ckpt);
  if (st.first_error) std::rethrow_exception(st.first_error);

  std::vector<ClassificationRecord> out;
  out.reserve(st.classes.size());
  for (auto& [key, cg] : st.classes) {
    ClassificationRecord rec;
    try {
      rec = invariants(cg.second, cfg.limits);
    } catch (const capacity_error&) {
      // Object walk does not fit the packed state; identification data only.
      rec = ClassificationRecord{};
      rec.rank = r;
      rec.canonical_roots = cg.first;
      rec.n_root_sets = cg.second.n_root_sets();
      for (const CartanMatrix& C : cg.second.cartans)
        rec.diagram_families.push_back(classify_family(dynkin_diagram(C)));
      std::sort(rec.diagram_families.begin(), rec.diagram_families.end(),
                [](const DiagramFamily& a, const DiagramFamily& b) { return a.name() < b.name(); });
    }
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const ClassificationRecord& a, const ClassificationRecord& b) {
    if (a.canonical_roots.roots.size() != b.canonical_roots.roots.size())
      return a.canonical_roots.roots.size() < b.canonical_roots.roots.size();
    return std::lexicographical_compare(a.canonical_roots.roots.begin(), a.canonical_roots.roots.end(),
                                        b.canonical_roots.roots.begin(), b.canonical_roots.roots.end(),
                                        canonical_less);
  });
  return out;
}

}  // namespace weyl
