#include "weyl/cartan.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/rootset.hpp"

namespace weyl {

namespace {

// Entries of real Cartan matrices stay tiny; a chain this long means the
// input is not a finite positive system.
constexpr int kMaxChain = 30;

}  // namespace

CartanMatrix gcm_from_root_set(const RootSet& R) {
  const int r = R.rank;
  for (int i = 0; i < r; ++i)
    if (!contains(R, unit(i))) throw root_system_error("missing simple root");
  CartanMatrix C;
  C.rank = r;
  for (int i = 0; i < r; ++i) C.c[i][i] = 2;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      Vec v = unit(j);
      int k = 0;
      while (k < kMaxChain && contains(R, add(v, unit(i)))) {
        v = add(v, unit(i));
        ++k;
      }
      if (k == kMaxChain) throw root_system_error("unbounded root chain");
      C.c[i][j] = static_cast<std::int16_t>(-k);
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if ((C.c[i][j] == 0) != (C.c[j][i] == 0))
        throw root_system_error("asymmetric Cartan matrix");
  return C;
}

Vec reflect(const CartanMatrix& C, int i, const Vec& v) {
  int s = 0;
  for (int j = 0; j < C.rank; ++j) s += C.c[i][j] * v[j];
  Vec w = v;
  int x = v[i] - s;
  if (x < INT16_MIN || x > INT16_MAX) throw capacity_error("coordinate overflow");
  w[i] = static_cast<std::int16_t>(x);
  return w;
}

DynkinDiagram dynkin_diagram(const CartanMatrix& C) {
  DynkinDiagram D;
  D.rank = C.rank;
  for (int i = 0; i < C.rank; ++i)
    for (int j = 0; j < C.rank; ++j)
      if (i != j && C.c[i][j] != 0) D.label[i][j] = static_cast<std::int16_t>(-C.c[i][j]);
  return D;
}

bool is_connected(const DynkinDiagram& D) {
  if (D.rank <= 1) return true;
  std::array<bool, kMaxRank> seen{};
  std::array<int, kMaxRank> stack{};
  int top = 0;
  stack[top++] = 0;
  seen[0] = true;
  int found = 1;
  while (top > 0) {
    int v = stack[--top];
    for (int w = 0; w < D.rank; ++w) {
      if (seen[w] || (D.label[v][w] == 0 && D.label[w][v] == 0)) continue;
      seen[w] = true;
      ++found;
      stack[top++] = w;
    }
  }
  return found == D.rank;
}

namespace {

DynkinDiagram family_pattern(DiagramFamily::Kind kind, int r) {
  DynkinDiagram D;
  D.rank = r;
  auto edge = [&D](int i, int j, int lij, int lji) {
    D.label[i][j] = static_cast<std::int16_t>(lij);
    D.label[j][i] = static_cast<std::int16_t>(lji);
  };
  switch (kind) {
    case DiagramFamily::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, 1, 1);
      break;
    case DiagramFamily::B:
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, 1, 1);
      edge(r - 2, r - 1, 1, 2);
      break;
    case DiagramFamily::C:
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, 1, 1);
      edge(r - 2, r - 1, 2, 1);
      break;
    case DiagramFamily::D:
      for (int i = 0; i + 3 < r; ++i) edge(i, i + 1, 1, 1);
      edge(r - 3, r - 2, 1, 1);
      edge(r - 3, r - 1, 1, 1);
      break;
    case DiagramFamily::Dprime:
      for (int i = 0; i + 3 < r; ++i) edge(i, i + 1, 1, 1);
      edge(r - 3, r - 2, 1, 1);
      edge(r - 3, r - 1, 1, 1);
      edge(r - 2, r - 1, 1, 1);
      break;
    case DiagramFamily::Other:
      break;
  }
  return D;
}

int degree(const DynkinDiagram& D, int v) {
  int d = 0;
  for (int w = 0; w < D.rank; ++w)
    if (w != v && (D.label[v][w] != 0 || D.label[w][v] != 0)) ++d;
  return d;
}

bool extend_isomorphism(const DynkinDiagram& a, const DynkinDiagram& b,
                        std::array<int, kMaxRank>& map, std::array<bool, kMaxRank>& used,
                        int next) {
  if (next == a.rank) return true;
  for (int cand = 0; cand < b.rank; ++cand) {
    if (used[cand] || degree(a, next) != degree(b, cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = a.label[next][prev] == b.label[cand][map[prev]] &&
           a.label[prev][next] == b.label[map[prev]][cand];
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

bool isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.rank != b.rank) return false;
  std::array<int, kMaxRank> map{};
  std::array<bool, kMaxRank> used{};
  return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace

std::string canonical_diagram_encoding(const DynkinDiagram& D) {
  const int r = D.rank;
  if (r > 10) throw capacity_error("diagram encoding is limited to rank 10");
  std::array<int, kMaxRank> perm{};
  std::iota(perm.begin(), perm.begin() + r, 0);
  std::string best;
  std::vector<std::string> edges;
  do {
    edges.clear();
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (D.label[i][j] == 0) continue;
        std::string e;
        e += static_cast<char>('a' + perm[i]);
        e += static_cast<char>('a' + perm[j]);
        e += ':';
        e += std::to_string(D.label[i][j]);
        edges.push_back(std::move(e));
      }
    }
    std::sort(edges.begin(), edges.end());
    std::string enc;
    for (const std::string& e : edges) {
      if (!enc.empty()) enc += ';';
      enc += e;
    }
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.begin() + r));
  if (best.empty()) best = "r" + std::to_string(r);
  return best;
}

std::string DiagramFamily::name() const {
  switch (kind) {
    case A: return "A" + std::to_string(rank);
    case B: return "B" + std::to_string(rank);
    case C: return "C" + std::to_string(rank);
    case D: return "D" + std::to_string(rank);
    case Dprime: return "D'" + std::to_string(rank);
    case Other: return "Other(" + encoding + ")";
  }
  return "?";
}

DiagramFamily classify_family(const DynkinDiagram& D) {
  const int r = D.rank;
  struct Candidate {
    DiagramFamily::Kind kind;
    int min_rank;
  };
  // B before C so that the ambiguous rank-2 case lands on B.
  constexpr Candidate candidates[] = {{DiagramFamily::A, 1},
                                      {DiagramFamily::B, 2},
                                      {DiagramFamily::C, 3},
                                      {DiagramFamily::D, 4},
                                      {DiagramFamily::Dprime, 3}};
  for (const Candidate& cand : candidates) {
    if (r < cand.min_rank) continue;
    if (isomorphic(D, family_pattern(cand.kind, r)))
      return DiagramFamily{cand.kind, r, {}};
  }
  return DiagramFamily{DiagramFamily::Other, r, canonical_diagram_encoding(D)};
}

}  // namespace weyl
