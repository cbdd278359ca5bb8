#pragma once

#include <cstddef>
#include <cstdint>

namespace weyl {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv64(const void* data, std::size_t n,
                           std::uint64_t h = kFnvOffset) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv64_u64(std::uint64_t v, std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= v & 0xffu;
    h *= kFnvPrime;
    v >>= 8;
  }
  return h;
}

// Finalizing mixer; spreads packed keys before open-addressing probes.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Two independent 64-bit streams; used where a 64-bit digest would make
// accidental collisions across hundreds of millions of keys plausible.
struct Digest128 {
  std::uint64_t lo = kFnvOffset;
  std::uint64_t hi = 0x9ae16a3b2f90404full;

  void feed(std::uint64_t v) {
    lo = fnv64_u64(v, lo);
    hi = fnv64_u64(v ^ 0x5851f42d4c957f2dull, hi * kFnvPrime + 0x2545f4914f6cdd1dull);
  }
  bool operator==(const Digest128&) const = default;
};

}  // namespace weyl
