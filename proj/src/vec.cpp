#include "weyl/vec.hpp"

#include <cctype>

namespace weyl {

std::string format_root_word(const Vec& v, int rank) {
  if (rank < 1 || rank > 9) throw input_error("word notation needs rank between 1 and 9");
  std::string out;
  for (int d = 1; d <= rank; ++d) {
    int e = v[rank - d];
    if (e < 0) throw input_error("word notation is only defined for nonnegative vectors");
    if (e == 0) continue;
    out += static_cast<char>('0' + d);
    if (e > 1) {
      out += "^{";
      out += std::to_string(e);
      out += '}';
    }
  }
  if (out.empty()) throw input_error("word notation is only defined for nonzero vectors");
  return out;
}

Vec parse_root_word(const std::string& word, int rank) {
  if (rank < 1 || rank > 9) throw input_error("word notation needs rank between 1 and 9");
  Vec v;
  std::size_t i = 0;
  bool saw_digit = false;
  while (i < word.size()) {
    char ch = word[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw input_error("bad character in root word: " + word);
    int d = ch - '0';
    if (d < 1 || d > rank) throw input_error("digit out of range in root word: " + word);
    ++i;
    long e = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      bool braced = i < word.size() && word[i] == '{';
      if (braced) ++i;
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
        throw input_error("bad exponent in root word: " + word);
      e = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
        e = e * 10 + (word[i] - '0');
        if (e > INT16_MAX) throw input_error("exponent too large in root word: " + word);
        ++i;
      }
      if (braced) {
        if (i >= word.size() || word[i] != '}')
          throw input_error("unterminated exponent in root word: " + word);
        ++i;
      }
      if (e < 1) throw input_error("bad exponent in root word: " + word);
    }
    int idx = rank - d;
    long total = v[idx] + e;
    if (total > INT16_MAX) throw input_error("exponent too large in root word: " + word);
    v[idx] = static_cast<std::int16_t>(total);
    saw_digit = true;
  }
  if (!saw_digit) throw input_error("empty root word");
  return v;
}

}  // namespace weyl
