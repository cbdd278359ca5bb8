#include "weyl/rootset.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

RootSet make_root_set(int rank, std::vector<Vec> roots) {
  if (rank < 1 || rank > kMaxRank)
    throw input_error("rank must be between 1 and " + std::to_string(kMaxRank));
  for (const Vec& v : roots) {
    for (int i = 0; i < rank; ++i)
      if (v[i] < 0) throw root_system_error("positive root with a negative coordinate");
    for (int i = rank; i < kMaxRank; ++i)
      if (v[i] != 0) throw root_system_error("root has coordinates beyond the rank");
    if (is_zero(v)) throw root_system_error("zero vector listed as a root");
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  for (std::size_t k = 1; k < roots.size(); ++k)
    if (roots[k] == roots[k - 1]) throw root_system_error("duplicate root");
  for (int i = 0; i < rank; ++i)
    if (!std::binary_search(roots.begin(), roots.end(), unit(i), canonical_less))
      throw root_system_error("missing simple root");
  return RootSet{rank, std::move(roots)};
}

bool contains(const RootSet& R, const Vec& v) {
  return std::binary_search(R.roots.begin(), R.roots.end(), v, canonical_less);
}

std::string format_root_set_text(const RootSet& R) {
  std::ostringstream out;
  out << "rank " << R.rank << "\n";
  for (const Vec& v : R.roots) {
    for (int i = 0; i < R.rank; ++i) out << (i ? " " : "") << v[i];
    out << "\n";
  }
  return out.str();
}

RootSet parse_root_set_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int rank = 0;
  bool have_rank = false;
  std::vector<Vec> roots;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_rank) {
      if (first != "rank") throw input_error("expected a 'rank r' header line");
      if (!(ls >> rank) || rank < 1 || rank > kMaxRank)
        throw input_error("bad rank in header line");
      have_rank = true;
      continue;
    }
    Vec v;
    int x = 0;
    std::istringstream rs(line);
    for (int i = 0; i < rank; ++i) {
      if (!(rs >> x)) throw input_error("root line with fewer than rank entries: " + line);
      if (x < 0 || x > INT16_MAX) throw input_error("root coordinate out of range: " + line);
      v[i] = static_cast<std::int16_t>(x);
    }
    if (rs >> x) throw input_error("root line with more than rank entries: " + line);
    roots.push_back(v);
  }
  if (!have_rank) throw input_error("missing 'rank r' header line");
  return make_root_set(rank, std::move(roots));
}

std::string format_root_set_words(const RootSet& R) {
  std::ostringstream out;
  out << "# rank " << R.rank << "\n";
  for (const Vec& v : R.roots) out << format_root_word(v, R.rank) << "\n";
  return out.str();
}

RootSet parse_root_set_words(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int rank = 0;
  std::vector<std::string> words;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream ls(line.substr(start + 1));
      std::string key;
      int value = 0;
      if (ls >> key >> value && key == "rank") {
        if (rank != 0) throw input_error("repeated '# rank' line");
        if (value < 1 || value > 9) throw input_error("bad rank in '# rank' line");
        rank = value;
      }
      continue;
    }
    words.push_back(line.substr(start));
  }
  if (rank == 0) throw input_error("word input needs a '# rank r' line");
  std::vector<Vec> roots;
  roots.reserve(words.size());
  for (const std::string& w : words) roots.push_back(parse_root_word(w, rank));
  return make_root_set(rank, std::move(roots));
}

RootSet parse_root_set_auto(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw input_error("empty root set input");
  if (text[start] == '#') return parse_root_set_words(text);
  return parse_root_set_text(text);
}

}  // namespace weyl
