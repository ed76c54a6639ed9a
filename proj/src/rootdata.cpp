#include "qw/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "qw/errors.hpp"

namespace qw {

namespace {

struct ParentDiagram {
  int rank;
  std::vector<std::pair<int, int>> edges;  // 0-based
  std::vector<int> perm;                   // automorphism
};

// Parent diagrams and automorphisms, one per supported family.
//   A_n : A_n itself, trivial automorphism (passthrough).
//   B_n : D_{n+1}, fork swap (Bourbaki numbering, fork attached to node n-1).
//   C_n : A_{2n-1}, chain flip i <-> 2n-i.
//   G_2 : D_4 with node 1 the triality-fixed center, 2 -> 3 -> 4 -> 2.
//   F_4 : E_6 (Bourbaki numbering: chain 1-3-4-5-6, node 2 on 4), 1<->6, 3<->5.
ParentDiagram parent_diagram(GType family, int rank) {
  ParentDiagram p;
  switch (family) {
    case GType::A: {
      p.rank = rank;
      for (int i = 0; i + 1 < rank; ++i) p.edges.emplace_back(i, i + 1);
      p.perm.resize(rank);
      std::iota(p.perm.begin(), p.perm.end(), 0);
      return p;
    }
    case GType::B: {
      if (rank < 2) throw UnsupportedType("B requires rank >= 2");
      p.rank = rank + 1;
      for (int i = 0; i + 1 < rank; ++i) p.edges.emplace_back(i, i + 1);
      p.edges.emplace_back(rank - 2, rank);  // second fork tip
      p.perm.resize(p.rank);
      std::iota(p.perm.begin(), p.perm.end(), 0);
      std::swap(p.perm[rank - 1], p.perm[rank]);
      return p;
    }
    case GType::C: {
      if (rank < 2) throw UnsupportedType("C requires rank >= 2");
      p.rank = 2 * rank - 1;
      for (int i = 0; i + 1 < p.rank; ++i) p.edges.emplace_back(i, i + 1);
      p.perm.resize(p.rank);
      for (int i = 0; i < p.rank; ++i) p.perm[i] = p.rank - 1 - i;
      return p;
    }
    case GType::G: {
      if (rank != 2) throw UnsupportedType("G requires rank 2");
      p.rank = 4;
      p.edges = {{0, 1}, {0, 2}, {0, 3}};
      p.perm = {0, 2, 3, 1};
      return p;
    }
    case GType::F: {
      if (rank != 4) throw UnsupportedType("F requires rank 4");
      p.rank = 6;
      p.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      p.perm = {5, 1, 4, 3, 2, 0};
      return p;
    }
  }
  throw UnsupportedType("unknown family");
}

// Orbit list in the order of the resulting index set I. The conventions match
// the rank-2 presentations used by the shipped fixtures: for C_n the collapsed
// chain pairs come first and the fixed middle node is last; for B_n the fixed
// chain nodes come first and the collapsed fork is last; for G_2 the fixed
// center is alpha_1; for F_4 the fixed nodes give alpha_1, alpha_2 and the
// free orbits give alpha_3, alpha_4.
std::vector<std::vector<int>> orbit_list(GType family, int rank, const ParentDiagram& p) {
  std::vector<std::vector<int>> orbits;
  switch (family) {
    case GType::A:
      for (int i = 0; i < rank; ++i) orbits.push_back({i});
      break;
    case GType::B:
      for (int i = 0; i < rank - 1; ++i) orbits.push_back({i});
      orbits.push_back({rank - 1, rank});
      break;
    case GType::C:
      for (int i = 0; i < rank - 1; ++i) orbits.push_back({i, p.rank - 1 - i});
      orbits.push_back({rank - 1});
      break;
    case GType::G:
      orbits.push_back({0});
      orbits.push_back({1, 2, 3});
      break;
    case GType::F:
      orbits.push_back({1});
      orbits.push_back({3});
      orbits.push_back({2, 4});
      orbits.push_back({0, 5});
      break;
  }
  return orbits;
}

// Exact column rank over the rationals.
int column_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

void validate(const FoldingDatum& F) {
  const int n = F.rank;
  for (int i : F.I0)
    if (F.d_i[i] != F.d) throw Error("d_i mismatch on I0");
  for (int i : F.I1)
    if (F.d_i[i] != 1) throw Error("d_i mismatch on I1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (F.pairing[i][j] != F.d_i[j] * F.cartan[j][i])
        throw Error("pairing/cartan inconsistency");
    }
  // d (alpha_i, alpha_j) = (a(alpha_i), a(alpha_j)) on the basis, hence on
  // the whole lattice by bilinearity.
  for (int i = 0; i < n; ++i) {
    std::vector<int> ai(F.parent_rank), aj(F.parent_rank);
    for (int p = 0; p < F.parent_rank; ++p) ai[p] = F.a_matrix[p][i];
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < F.parent_rank; ++p) aj[p] = F.a_matrix[p][j];
      if (parent_pairing(F, ai, aj) != static_cast<long>(F.d) * F.pairing[i][j])
        throw Error("folding identity fails on basis");
    }
  }
  std::vector<std::vector<Rat>> am(F.parent_rank, std::vector<Rat>(n));
  for (int p = 0; p < F.parent_rank; ++p)
    for (int i = 0; i < n; ++i) am[p][i] = F.a_matrix[p][i];
  if (column_rank(std::move(am)) != n) throw Error("a-map not injective");
}

}  // namespace

FoldingDatum build_folding(GType family, int rank) {
  if (rank < 1) throw UnsupportedType("rank must be positive");
  if (family == GType::G && rank != 2) throw UnsupportedType("G2 has rank 2");
  if (family == GType::F && rank != 4) throw UnsupportedType("F4 has rank 4");
  if ((family == GType::B || family == GType::C) && rank < 2)
    throw UnsupportedType("B/C require rank >= 2");

  FoldingDatum F;
  F.family = family;
  F.rank = rank;
  const char* letters = "ABCFG";
  F.name = std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);

  ParentDiagram p = parent_diagram(family, rank);
  F.parent_rank = p.rank;
  F.parent_adj.assign(p.rank, std::vector<int>(p.rank, 0));
  for (auto [u, v] : p.edges) F.parent_adj[u][v] = F.parent_adj[v][u] = 1;
  F.parent_perm = p.perm;

  // Automorphism order.
  F.d = 1;
  {
    std::vector<int> cur(p.perm);
    std::vector<int> id(p.rank);
    std::iota(id.begin(), id.end(), 0);
    while (cur != id) {
      std::vector<int> next(p.rank);
      for (int i = 0; i < p.rank; ++i) next[i] = p.perm[cur[i]];
      cur = next;
      ++F.d;
      if (F.d > 3) throw UnsupportedType("automorphism order too large");
    }
  }

  auto orbits = orbit_list(family, rank, p);
  assert(static_cast<int>(orbits.size()) == rank);
  F.orbit_of.assign(p.rank, -1);
  F.a_matrix.assign(p.rank, std::vector<int>(rank, 0));
  F.d_i.assign(rank, 0);
  for (int i = 0; i < rank; ++i) {
    const auto& orb = orbits[i];
    for (int node : orb) F.orbit_of[node] = i;
    if (orb.size() == 1 && F.d > 1) {
      F.I0.push_back(i);
      F.d_i[i] = F.d;
      F.a_matrix[orb[0]][i] = F.d;
    } else {
      F.I1.push_back(i);
      F.d_i[i] = 1;
      for (int node : orb) F.a_matrix[node][i] = 1;
    }
  }

  // Pairing from the parent: (alpha_i, alpha_j) = (a(alpha_i), a(alpha_j))/d.
  F.pairing.assign(rank, std::vector<int>(rank, 0));
  F.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    std::vector<int> ai(p.rank), aj(p.rank);
    for (int q = 0; q < p.rank; ++q) ai[q] = F.a_matrix[q][i];
    for (int j = 0; j < rank; ++j) {
      for (int q = 0; q < p.rank; ++q) aj[q] = F.a_matrix[q][j];
      long pp = parent_pairing(F, ai, aj);
      assert(pp % F.d == 0);
      F.pairing[i][j] = static_cast<int>(pp / F.d);
    }
  }
  for (int i = 0; i < rank; ++i) {
    assert(F.pairing[i][i] == 2 * F.d_i[i]);
    for (int j = 0; j < rank; ++j) {
      assert(F.pairing[i][j] % F.d_i[i] == 0);
      F.cartan[i][j] = F.pairing[i][j] / F.d_i[i];
    }
  }

  validate(F);
  return F;
}

FoldingDatum build_folding(const std::string& label) {
  if (label.size() < 2) throw UnsupportedType("bad label '" + label + "'");
  GType family;
  switch (label[0]) {
    case 'A': family = GType::A; break;
    case 'B': family = GType::B; break;
    case 'C': family = GType::C; break;
    case 'F': family = GType::F; break;
    case 'G': family = GType::G; break;
    default: throw UnsupportedType("unknown Dynkin label '" + label + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') throw UnsupportedType("bad label '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  return build_folding(family, rank);
}

std::vector<int> a_map(const FoldingDatum& F, const RootVector& alpha) {
  assert(static_cast<int>(alpha.size()) == F.rank);
  std::vector<int> out(F.parent_rank, 0);
  for (int p = 0; p < F.parent_rank; ++p)
    for (int i = 0; i < F.rank; ++i) out[p] += F.a_matrix[p][i] * alpha[i];
  return out;
}

long norm_half(const FoldingDatum& F, const RootVector& beta) {
  assert(static_cast<int>(beta.size()) == F.rank);
  long twice = 0;
  for (int i = 0; i < F.rank; ++i)
    for (int j = 0; j < F.rank; ++j)
      twice += static_cast<long>(beta[i]) * beta[j] * F.pairing[i][j];
  assert(twice % 2 == 0);
  return twice / 2;
}

long parent_pairing(const FoldingDatum& F, const std::vector<int>& x,
                    const std::vector<int>& y) {
  assert(static_cast<int>(x.size()) == F.parent_rank);
  assert(static_cast<int>(y.size()) == F.parent_rank);
  long s = 0;
  for (int p = 0; p < F.parent_rank; ++p) {
    s += 2L * x[p] * y[p];
    for (int r = 0; r < F.parent_rank; ++r)
      if (F.parent_adj[p][r]) s -= static_cast<long>(x[p]) * y[r];
  }
  return s;
}

std::vector<RootVector> enumerate_below(const RootVector& alpha) {
  for (int c : alpha) assert(c >= 0);
  std::vector<RootVector> out;
  RootVector cur(alpha.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = alpha.size();
    while (pos > 0) {
      --pos;
      if (cur[pos] < alpha[pos]) {
        ++cur[pos];
        for (std::size_t r = pos + 1; r < alpha.size(); ++r) cur[r] = 0;
        break;
      }
      if (pos == 0) return out;
    }
    if (alpha.empty()) return out;
  }
}

WeightVector reflect(const FoldingDatum& F, int i, const WeightVector& mu) {
  assert(i >= 0 && i < F.rank);
  assert(static_cast<int>(mu.size()) == F.rank);
  WeightVector out(mu);
  const int m = mu[i];
  // alpha-check_i expands in the fundamental-weight basis as the i-th column
  // of the Cartan matrix.
  for (int j = 0; j < F.rank; ++j) out[j] -= m * F.cartan[j][i];
  return out;
}

WeightVector coroot_weight(const FoldingDatum& F, const RootVector& beta) {
  assert(static_cast<int>(beta.size()) == F.rank);
  WeightVector out(F.rank, 0);
  for (int j = 0; j < F.rank; ++j)
    for (int i = 0; i < F.rank; ++i) out[j] += beta[i] * F.cartan[j][i];
  return out;
}

Rat weight_form(const FoldingDatum& F, const WeightVector& mu, const WeightVector& nu) {
  // (mu, nu) = m(mu)^T D C^{-1} m(nu): solve C y = m(nu), then sum d_i m_i y_i.
  const int n = F.rank;
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = F.cartan[i][j];
    aug[i][n] = nu[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    assert(piv < n);
    std::swap(aug[piv], aug[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat f = aug[r][col] / aug[col][col];
      for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Rat s = 0;
  for (int i = 0; i < n; ++i) s += Rat(F.d_i[i]) * Rat(mu[i]) * (aug[i][n] / aug[i][i]);
  return s;
}

bool is_dominant(const WeightVector& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int m) { return m >= 0; });
}

int height(const RootVector& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

}  // namespace qw
