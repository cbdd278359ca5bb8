#pragma once

#include <string>
#include <vector>

#include "weyl/vec.hpp"

namespace weyl {

// Positive roots of one object, sorted by canonical_less, all coordinates
// nonnegative, no duplicates, every simple root present.
struct RootSet {
  int rank = 0;
  std::vector<Vec> roots;

  friend bool operator==(const RootSet&, const RootSet&) = default;
};

// Sorts, validates and wraps a list of positive roots; throws
// root_system_error if a coordinate is negative, a root repeats, or a
// simple root is missing, and input_error for out-of-range ranks.
RootSet make_root_set(int rank, std::vector<Vec> roots);

bool contains(const RootSet& R, const Vec& v);

// Plain text exchange format: a "rank r" header, then one root per line as
// r space-separated nonnegative integers.
std::string format_root_set_text(const RootSet& R);
RootSet parse_root_set_text(const std::string& text);

// Word form: one root word per line, with lines starting with '#' ignored
// except for "# rank r" which sets the rank.
std::string format_root_set_words(const RootSet& R);
RootSet parse_root_set_words(const std::string& text);

// Either of the two formats, decided by the first non-blank character.
RootSet parse_root_set_auto(const std::string& text);

}  // namespace weyl
