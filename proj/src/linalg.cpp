#include "weyl/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/hash.hpp"

namespace weyl {

namespace {

int lead_index(const std::vector<std::int64_t>& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<int>(j);
  return -1;
}

// Divide by the gcd of the entries and make the leading entry positive.
void make_primitive(std::vector<std::int64_t>& row) {
  std::uint64_t g = 0;
  for (std::int64_t x : row) {
    std::uint64_t ax = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
    g = std::gcd(g, ax);
    if (g == 1) break;
  }
  if (g == 0) return;
  int lead = lead_index(row);
  bool flip = row[static_cast<std::size_t>(lead)] < 0;
  for (std::int64_t& x : row) {
    std::uint64_t ax = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
    std::int64_t q = static_cast<std::int64_t>(ax / g);
    x = (x < 0) != flip ? -q : q;
  }
}

// row := pivot_value * row - row[pivot_col] * pivot_row, fraction-free.
void eliminate(std::vector<std::int64_t>& row, const std::vector<std::int64_t>& pivot_row,
               int pivot_col) {
  std::int64_t f = row[static_cast<std::size_t>(pivot_col)];
  if (f == 0) return;
  std::int64_t p = pivot_row[static_cast<std::size_t>(pivot_col)];
  for (std::size_t j = 0; j < row.size(); ++j)
    row[j] = checked_sub(checked_mul(p, row[j]), checked_mul(f, pivot_row[j]));
  make_primitive(row);
}

std::vector<std::int64_t> to_row(const Vec& v, int ambient) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) row[static_cast<std::size_t>(i)] = v[i];
  return row;
}

}  // namespace

int row_reduce(QMat& m) {
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
    QVec& prow = m[static_cast<std::size_t>(rank)];
    Rat inv = Rat(1) / prow[col];
    for (std::size_t j = col; j < cols; ++j) prow[j] = prow[j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * prow[j];
    }
    ++rank;
  }
  return rank;
}

int rank_of(const std::vector<Vec>& rows, int ambient) {
  Subspace s(ambient);
  for (const Vec& v : rows) s = s.extended(v);
  return s.dim();
}

Subspace::Subspace(int ambient) : ambient_(ambient) { refresh_digest(); }

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
  Subspace s(ambient);
  for (const Vec& v : gens) {
    std::vector<std::int64_t> row = to_row(v, ambient);
    for (std::size_t k = 0; k < s.rows_.size(); ++k) eliminate(row, s.rows_[k], s.pivots_[k]);
    if (lead_index(row) >= 0) {
      make_primitive(row);
      s.insert(std::move(row));
    }
  }
  s.refresh_digest();
  return s;
}

Subspace Subspace::extended(const Vec& v) const {
  std::vector<std::int64_t> row = to_row(v, ambient_);
  for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(row, rows_[k], pivots_[k]);
  if (lead_index(row) < 0) return *this;
  make_primitive(row);
  Subspace s = *this;
  s.insert(std::move(row));
  s.refresh_digest();
  return s;
}

void Subspace::insert(std::vector<std::int64_t> row) {
  int pivot = lead_index(row);
  // Clear the new pivot column in the existing rows, then place the row so
  // that pivots stay increasing.  Both steps preserve the reduced form, so
  // the final basis is independent of insertion order.
  for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(rows_[k], row, pivot);
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
}

void Subspace::refresh_digest() {
  std::uint64_t h = kFnvOffset;
  h = fnv64_u64(static_cast<std::uint64_t>(ambient_), h);
  h = fnv64_u64(static_cast<std::uint64_t>(rows_.size()), h);
  for (const auto& row : rows_)
    for (std::int64_t x : row) h = fnv64_u64(static_cast<std::uint64_t>(x), h);
  digest_ = h;
}

bool Subspace::contains(const Vec& v) const {
  std::vector<std::int64_t> row = to_row(v, ambient_);
  for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(row, rows_[k], pivots_[k]);
  return lead_index(row) < 0;
}

std::optional<QVec> Subspace::coordinates(const Vec& v) const {
  // Rows are in reduced form, so the coefficient of each basis row is read
  // off at its pivot; the expansion is then verified exactly.
  QVec coeff(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k)
    coeff[k] = Rat(v[pivots_[k]], rows_[k][static_cast<std::size_t>(pivots_[k])]);
  for (int j = 0; j < ambient_; ++j) {
    Rat s = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      s = s + coeff[k] * Rat(rows_[k][static_cast<std::size_t>(j)]);
    if (!(s == Rat(v[j]))) return std::nullopt;
  }
  return coeff;
}

std::optional<QVec> solve_coordinates(const std::vector<Vec>& basis, const Vec& v,
                                      int ambient) {
  std::size_t k = basis.size();
  QMat m(static_cast<std::size_t>(ambient), QVec(k + 1));
  for (int i = 0; i < ambient; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[static_cast<std::size_t>(i)][j] = Rat(basis[j][i]);
    m[static_cast<std::size_t>(i)][k] = Rat(v[i]);
  }
  int rank = row_reduce(m);
  // Inconsistent system: a pivot in the right-hand column.
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool zero_lhs = true;
    for (std::size_t j = 0; j < k; ++j)
      if (!m[i][j].is_zero()) {
        zero_lhs = false;
        break;
      }
    if (zero_lhs && !m[i][k].is_zero()) return std::nullopt;
  }
  if (rank != static_cast<int>(k)) throw internal_error("solve_coordinates needs independent basis");
  QVec x(k);
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
    std::size_t lead = 0;
    while (lead < k && m[i][lead].is_zero()) ++lead;
    x[lead] = m[i][k];
  }
  return x;
}

}  // namespace weyl
