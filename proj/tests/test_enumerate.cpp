#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "weyl/appendix.hpp"
#include "weyl/enumerate.hpp"
#include "weyl/error.hpp"
#include "weyl/series.hpp"

namespace weyl {
namespace {

Vec v2(int a, int b) {
  Vec v;
  v[0] = static_cast<std::int16_t>(a);
  v[1] = static_cast<std::int16_t>(b);
  return v;
}

Vec v3(int a, int b, int c) {
  Vec v = v2(a, b);
  v[2] = static_cast<std::int16_t>(c);
  return v;
}

const std::vector<Vec> kA3 = {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1),
                              v3(1, 1, 0), v3(0, 1, 1), v3(1, 1, 1)};

TEST_CASE("euler invariant of small arrangements") {
  CHECK(euler_invariant(kA3) == 0);
  std::vector<Vec> open(kA3.begin(), kA3.end() - 1);  // drop the highest root
  CHECK(euler_invariant(open) == -1);
  CHECK(euler_invariant(standard_roots(StandardFamily::B, 3).roots) == 0);
  CHECK_THROWS_AS(euler_invariant({v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}), input_error);
  Vec e4 = unit(3);
  CHECK_THROWS_AS(euler_invariant({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), e4}), input_error);
}

TEST_CASE("known classification lists") {
  const std::vector<KnownClass> r3 = classification(3);
  CHECK(r3.size() == 55);
  std::set<std::string> names;
  for (const KnownClass& k : r3) names.insert(k.name);
  CHECK(names.size() == 55);
  CHECK(names.count("A3") == 1);
  CHECK(names.count("B3") == 1);
  CHECK(names.count("C3") == 1);
  CHECK(names.count("D'(3,1)") == 1);
  CHECK(names.count("D'(3,2)") == 1);
  CHECK(names.count("D3") == 0);  // coincides with A3
  for (const KnownClass& k : r3) {
    CHECK(k.n_objects % k.n_root_sets == 0);
    CHECK(k.n_objects / k.n_root_sets == k.aut_order);
    CHECK(find_class(r3, k.canonical) == &k);
  }
  for (std::size_t i = 0; i < r3.size(); ++i)
    for (std::size_t j = i + 1; j < r3.size(); ++j)
      CHECK(r3[i].canonical.roots != r3[j].canonical.roots);

  const std::vector<KnownClass> r4 = classification(4);
  CHECK(r4.size() == 18);
  const KnownClass* f4 = nullptr;
  for (const KnownClass& k : r4)
    if (k.n_objects == 1152) f4 = &k;
  REQUIRE(f4 != nullptr);
  CHECK(f4->name == "rank 4 Nr. 6 (F4)");
  CHECK(find_class(r4, r3[0].canonical) == nullptr);  // rank mismatch

  CHECK_THROWS_AS(classification(2), input_error);
  CHECK_THROWS_AS(classification(9), input_error);
}

TEST_CASE("seed sets shift the base and adjoin the first unit") {
  const RootSet a2 = make_root_set(2, {v2(1, 0), v2(0, 1), v2(1, 1)});
  const std::vector<RootSet> seeds = seed_sets(3, {a2});
  REQUIRE(seeds.size() == 2);
  const std::set<Vec, decltype(&canonical_less)> got(seeds[0].roots.begin(),
                                                     seeds[0].roots.end(), &canonical_less);
  const std::vector<Vec> expect = {v3(0, 1, 0), v3(0, 0, 1), v3(0, 1, 1), v3(1, 0, 0), v3(1, 1, 0)};
  CHECK(got.size() == 5);
  for (const Vec& v : expect) CHECK(got.count(v) == 1);
  CHECK(std::count(seeds[1].roots.begin(), seeds[1].roots.end(), v3(1, 0, 1)) == 1);
  CHECK_THROWS_AS(seed_sets(4, {a2}), input_error);
}

TEST_CASE("completion dictionary from rank-two systems") {
  const RootSet a2 = make_root_set(2, {v2(1, 0), v2(0, 1), v2(1, 1)});
  const Caches ca = build_caches({a2}, 2);
  CHECK(ca.n_entries(2) == 1);  // symmetric under the swap
  CHECK(ca.ranks[2].upsilon.count(v2(1, 1)) == 1);
  CHECK(ca.ranks[2].upsilon.count(v2(2, 1)) == 0);

  const RootSet b2 = make_root_set(2, {v2(1, 0), v2(0, 1), v2(1, 1), v2(2, 1)});
  const Caches cb = build_caches({b2}, 2);
  CHECK(cb.n_entries(2) == 2);  // the swap is a distinct entry
  CHECK(cb.ranks[2].upsilon.count(v2(2, 1)) == 1);
  CHECK(cb.ranks[2].upsilon.count(v2(1, 2)) == 1);

  const Caches c3 = build_caches({make_root_set(3, kA3)}, 3);
  CHECK(c3.n_entries(2) == 1);
  CHECK(c3.n_entries(3) == 3);  // six orderings modulo the reversal symmetry
  for (const Vec& v : c3.ranks[3].upsilon)
    for (int i = 0; i < kMaxRank; ++i) CHECK(v[i] <= 14);

  CHECK_THROWS_AS(build_caches({a2}, 1), input_error);
  CHECK_THROWS_AS(build_caches({a2}, 8), input_error);
}

TEST_CASE("state construction accepts decomposable appends only") {
  const Rsf a2 = seed_rsf(make_root_set(2, {v2(1, 0), v2(0, 1), v2(1, 1)}), 2, nullptr);
  CHECK(a2.isvalid);
  CHECK(a2.roots.size() == 3);
  CHECK(a2.fragments[2].size() == 1);
  CHECK(a2.fragments[2][0].connected);

  CHECK_FALSE(append_root(a2, v2(3, 1), nullptr).isvalid);   // skips (2,1)
  CHECK_FALSE(append_root(a2, v2(2, 2), nullptr).isvalid);   // parallel to (1,1)
  CHECK_FALSE(append_root(a2, v2(15, 1), nullptr).isvalid);  // beyond the growth cap

  const Rsf b2 = append_root(a2, v2(2, 1), nullptr);
  CHECK(b2.isvalid);
  const Rsf g2a = append_root(b2, v2(3, 1), nullptr);
  CHECK(g2a.isvalid);
  const Rsf g2 = append_root(g2a, v2(3, 2), nullptr);
  CHECK(g2.isvalid);
  CHECK(g2.roots.size() == 6);
  CHECK(g2.has_big_first);

  CHECK_THROWS_AS(append_root(a2, v2(1, 1), nullptr), input_error);  // not larger
  CHECK_THROWS_AS(append_root(a2, v2(0, 2), nullptr), input_error);  // smaller
  Vec beyond = unit(2);
  CHECK_THROWS_AS(append_root(a2, beyond, nullptr), input_error);  // outside the rank
}

TEST_CASE("appended roots need connected support") {
  const Rsf bare = seed_rsf(make_root_set(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}), 2, nullptr);
  CHECK_FALSE(append_root(bare, v3(1, 1, 1), nullptr).isvalid);  // no edges at all
  CHECK(append_root(bare, v3(1, 0, 1), nullptr).isvalid);        // itself an edge
  CHECK_FALSE(append_root(bare, v3(1, 0, 2), nullptr).isvalid);  // edge still missing

  const Rsf oneedge = seed_rsf(
      make_root_set(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(0, 1, 1)}), 2, nullptr);
  CHECK_FALSE(append_root(oneedge, v3(1, 1, 1), nullptr).isvalid);  // first node isolated

  const Rsf chain = seed_rsf(
      make_root_set(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(0, 1, 1), v3(1, 1, 0)}), 2,
      nullptr);
  const Rsf full = append_root(chain, v3(1, 1, 1), nullptr);
  CHECK(full.isvalid);
  CHECK(full.roots.size() == 6);
}

TEST_CASE("rank-three fragments carry the plane invariant") {
  const Rsf closed = seed_rsf(make_root_set(3, kA3), 3, nullptr);
  REQUIRE(closed.fragments[3].size() == 1);
  CHECK(closed.fragments[3][0].euler == 0);
  CHECK(closed.euler_nonzero == 0);
  CHECK(closed.fragments[2].size() == 7);  // four triples and three crossing pairs

  std::vector<Vec> open(kA3.begin(), kA3.end() - 1);
  const Rsf pending = seed_rsf(make_root_set(3, open), 3, nullptr);
  REQUIRE(pending.fragments[3].size() == 1);
  CHECK(pending.fragments[3][0].euler == -1);
  CHECK(pending.euler_nonzero == 1);
}

TEST_CASE("enumeration rejects out-of-range parameters") {
  CHECK_THROWS_AS(enumerate_rank(3), input_error);
  CHECK_THROWS_AS(enumerate_rank(9), input_error);
  EnumerateConfig bad;
  bad.rho = 2;
  CHECK_THROWS_AS(enumerate_rank(4, bad), input_error);
  bad.rho = 4;
  CHECK_THROWS_AS(enumerate_rank(4, bad), input_error);
}

}  // namespace
}  // namespace weyl
