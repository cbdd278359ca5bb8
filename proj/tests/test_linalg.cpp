#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "weyl/linalg.hpp"

using namespace weyl;

namespace {

Vec mk(std::initializer_list<int> xs) {
  Vec v;
  int i = 0;
  for (int x : xs) v[i++] = static_cast<std::int16_t>(x);
  return v;
}

// Independent rank oracle: fraction-free Gaussian elimination on a dense
// integer matrix, written from scratch so it shares no code with Subspace.
int oracle_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[piv]);
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
      long long f = m[i][col], p = m[static_cast<std::size_t>(rank)][col];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = m[i][j] * p - m[static_cast<std::size_t>(rank)][j] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(3, 4) * Rat(2, 3) == Rat(1, 2));
  CHECK(Rat(3, 4) / Rat(3, 2) == Rat(1, 2));
  CHECK(-Rat(3, 4) == Rat(-3, 4));
  CHECK(Rat(-1, 3) < Rat(1, 4));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(7, 1).is_integer());
  CHECK(to_string(Rat(-5, 3)) == "-5/3");
  CHECK(to_string(Rat(4, 2)) == "2");
  CHECK_THROWS_AS(Rat(INT64_MAX) + Rat(1), capacity_error);
  CHECK_THROWS_AS(Rat(INT64_MAX) * Rat(2), capacity_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), internal_error);
}

TEST_CASE("row_reduce produces the reduced echelon form") {
  QMat m = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(1)}};
  CHECK(row_reduce(m) == 2);
  QMat expect = {{Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(m == expect);

  QMat id = {{Rat(2), Rat(1)}, {Rat(7), Rat(4)}};
  CHECK(row_reduce(id) == 2);
  CHECK(id == QMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

TEST_CASE("subspace dimensions agree with an independent elimination") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int iter = 0; iter < 2000; ++iter) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<Vec> vs;
    std::vector<std::vector<long long>> m;
    QMat q;
    for (int i = 0; i < rows; ++i) {
      Vec v;
      std::vector<long long> row(static_cast<std::size_t>(cols));
      QVec qrow(static_cast<std::size_t>(cols));
      for (int j = 0; j < cols; ++j) {
        int x = entry(rng);
        v[j] = static_cast<std::int16_t>(x);
        row[static_cast<std::size_t>(j)] = x;
        qrow[static_cast<std::size_t>(j)] = Rat(x);
      }
      vs.push_back(v);
      m.push_back(std::move(row));
      q.push_back(std::move(qrow));
    }
    int expect = oracle_rank(m);
    CHECK(rank_of(vs, cols) == expect);
    CHECK(row_reduce(q) == expect);
    CHECK(Subspace::span(cols, vs).dim() == expect);
  }
}

TEST_CASE("subspace presentation does not depend on the generators") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int iter = 0; iter < 100000; ++iter) {
    Vec v1, v2;
    for (int j = 0; j < 4; ++j) {
      v1[j] = static_cast<std::int16_t>(entry(rng));
      v2[j] = static_cast<std::int16_t>(entry(rng));
    }
    Subspace a = Subspace::span(4, {v1, v2});
    Subspace b = Subspace::span(4, {add(v1, v2), v1});
    Subspace c = Subspace::span(4, {neg(v1), add(v2, add(v1, v1))});
    CHECK(a == b);
    CHECK(a.digest() == b.digest());
    CHECK(a == c);
    Subspace d = Subspace(4).extended(v2).extended(v1);
    CHECK(a == d);
  }
}

TEST_CASE("canonical basis rows are primitive with positive leads") {
  Subspace s = Subspace::span(3, {mk({2, 2, 0}), mk({0, -3, -3})});
  CHECK(s.dim() == 2);
  CHECK(s.basis() == std::vector<std::vector<std::int64_t>>{{1, 0, -1}, {0, 1, 1}});
  CHECK(s.pivots() == std::vector<int>{0, 1});
  CHECK(s.contains(mk({1, 1, 0})));
  CHECK(s.contains(mk({3, -1, -4})));
  CHECK(!s.contains(mk({0, 0, 1})));
}

TEST_CASE("coordinates over the canonical basis are exact") {
  Subspace s = Subspace::span(3, {mk({1, 1, 0}), mk({0, 1, 1})});
  // Basis rows are (1,0,-1) and (0,1,1).
  auto c = s.coordinates(mk({2, 3, 1}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(2));
  CHECK((*c)[1] == Rat(3));
  CHECK(!s.coordinates(mk({1, 0, 0})).has_value());
}

TEST_CASE("solve_coordinates expresses vectors over a chosen basis") {
  std::vector<Vec> basis = {mk({1, 1, 0}), mk({0, 1, 1})};
  auto x = solve_coordinates(basis, mk({1, 2, 1}), 3);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));
  auto halves = solve_coordinates(basis, mk({1, 0, -1}), 3);
  REQUIRE(halves.has_value());
  CHECK((*halves)[0] == Rat(1));
  CHECK((*halves)[1] == Rat(-1));
  CHECK(!solve_coordinates(basis, mk({1, 0, 0}), 3).has_value());
  CHECK_THROWS_AS(solve_coordinates({mk({1, 1, 0}), mk({2, 2, 0})}, mk({1, 1, 0}), 3),
                  internal_error);
}

TEST_CASE("elimination rejects inputs that overflow 64-bit intermediates") {
  // Forcing an overflow through Vec entries is impossible (they are 16-bit
  // and the eliminations stay primitive), so exercise the checked ops.
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), capacity_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), capacity_error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), capacity_error);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), capacity_error);
}
