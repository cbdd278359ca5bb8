#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

// Hard upper bound on the rank handled by this build.  Everything sizes
// its stack buffers from it.
inline constexpr int kMaxRank = 12;

// Coordinate vector over the simple roots alpha_1..alpha_r.  Entries at
// indices >= rank must stay zero; all comparators and hashes rely on that
// and therefore need no rank argument.
struct Vec {
  std::array<std::int16_t, kMaxRank> c{};

  std::int16_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  std::int16_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Vec&, const Vec&) = default;
};

inline Vec unit(int i) {
  Vec v;
  v[i] = 1;
  return v;
}

inline int height(const Vec& v) {
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += v[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (int i = 0; i < kMaxRank; ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool all_nonneg(const Vec& v) {
  for (int i = 0; i < kMaxRank; ++i)
    if (v[i] < 0) return false;
  return true;
}

inline bool all_nonpos(const Vec& v) {
  for (int i = 0; i < kMaxRank; ++i)
    if (v[i] > 0) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r;
  for (int i = 0; i < kMaxRank; ++i) {
    int s = a[i] + b[i];
    if (s < INT16_MIN || s > INT16_MAX) throw capacity_error("coordinate overflow");
    r[i] = static_cast<std::int16_t>(s);
  }
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r;
  for (int i = 0; i < kMaxRank; ++i) {
    int s = a[i] - b[i];
    if (s < INT16_MIN || s > INT16_MAX) throw capacity_error("coordinate overflow");
    r[i] = static_cast<std::int16_t>(s);
  }
  return r;
}

inline Vec neg(const Vec& a) {
  Vec r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(-a[i]);
  return r;
}

// Order in which root lists are stored and printed: by height, and within
// one height the vector whose last differing coordinate is larger comes
// first.  Matches the order of the tabulated root lists.
inline bool canonical_less(const Vec& a, const Vec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  for (int j = kMaxRank - 1; j >= 0; --j)
    if (a[j] != b[j]) return a[j] > b[j];
  return false;
}

// Order in which the enumerator appends candidate roots: plain
// lexicographic with the alpha_1 coordinate most significant.  Any root
// with first coordinate >= 2 is larger than every root with first
// coordinate <= 1, which the pruning logic depends on.
inline bool append_less(const Vec& a, const Vec& b) {
  for (int j = 0; j < kMaxRank; ++j)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

// Word notation for a root: the word d1 d2 ... with digit d standing for
// alpha_{rank+1-d}, exponents written d^{e}.  Only defined for rank <= 9.
std::string format_root_word(const Vec& v, int rank);
Vec parse_root_word(const std::string& word, int rank);

}  // namespace weyl
