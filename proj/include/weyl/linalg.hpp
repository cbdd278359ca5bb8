#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/rational.hpp"
#include "weyl/vec.hpp"

namespace weyl {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form over Q (leading entries 1, zeros above
// and below each pivot).  Returns the rank.
int row_reduce(QMat& m);

// Rank of a set of integer vectors inside Z^ambient, computed fraction-free.
int rank_of(const std::vector<Vec>& rows, int ambient);

// Rational subspace of Q^ambient in a canonical presentation: the reduced
// row echelon basis, with each row scaled to a primitive integer vector
// whose leading entry is positive.  Two Subspace values compare equal
// exactly when they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient);

  static Subspace span(int ambient, const std::vector<Vec>& gens);

  // Span of this subspace together with one more vector.
  Subspace extended(const Vec& v) const;

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool contains(const Vec& v) const;

  // Coefficients of v over the canonical basis rows, or nullopt if v lies
  // outside the subspace.
  std::optional<QVec> coordinates(const Vec& v) const;

  const std::vector<std::vector<std::int64_t>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::uint64_t digest() const { return digest_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.digest_ == b.digest_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void insert(std::vector<std::int64_t> row);
  void refresh_digest();

  int ambient_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> pivots_;
  std::uint64_t digest_ = 0;
};

// Coefficients x with sum_i x_i basis[i] = v, for linearly independent
// basis vectors; nullopt if v is outside their span.  Throws
// internal_error if the basis vectors are dependent.
std::optional<QVec> solve_coordinates(const std::vector<Vec>& basis, const Vec& v,
                                      int ambient);

}  // namespace weyl
