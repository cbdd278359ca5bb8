#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw capacity_error("integer overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw capacity_error("integer overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw capacity_error("integer overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw capacity_error("integer overflow");
  return -a;
}

// Exact rational with 64-bit numerator and denominator, always in lowest
// terms with positive denominator.  Every operation that could overflow
// throws capacity_error instead of wrapping.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit on purpose
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw internal_error("rational with zero denominator");
    if (num == 0) {
      den = 1;
      return;
    }
    std::uint64_t an = num < 0 ? ~static_cast<std::uint64_t>(num) + 1 : static_cast<std::uint64_t>(num);
    std::uint64_t ad = den < 0 ? ~static_cast<std::uint64_t>(den) + 1 : static_cast<std::uint64_t>(den);
    std::uint64_t g = std::gcd(an, ad);
    an /= g;
    ad /= g;
    bool negative = (num < 0) != (den < 0);
    if (an > static_cast<std::uint64_t>(INT64_MAX) + (negative ? 1u : 0u) ||
        ad > static_cast<std::uint64_t>(INT64_MAX))
      throw capacity_error("integer overflow");
    num = negative ? -static_cast<std::int64_t>(an) : static_cast<std::int64_t>(an);
    den = static_cast<std::int64_t>(ad);
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rat&, const Rat&) = default;
};

inline Rat operator+(const Rat& a, const Rat& b) {
  return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
             checked_mul(a.den, b.den));
}

inline Rat operator-(const Rat& a, const Rat& b) {
  return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
             checked_mul(a.den, b.den));
}

inline Rat operator*(const Rat& a, const Rat& b) {
  return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

inline Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw internal_error("rational division by zero");
  return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

inline Rat operator-(const Rat& a) { return Rat(checked_neg(a.num), a.den); }

inline bool operator<(const Rat& a, const Rat& b) {
  return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

inline std::string to_string(const Rat& a) {
  std::string s = std::to_string(a.num);
  if (a.den != 1) s += "/" + std::to_string(a.den);
  return s;
}

}  // namespace weyl
