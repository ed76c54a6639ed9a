#ifndef QW_ROOTDATA_HPP
#define QW_ROOTDATA_HPP

#include <string>
#include <vector>

#include "qw/rational.hpp"

namespace qw {

// Coefficients over the simple-root index set I (the folded side).
using RootVector = std::vector<int>;
// Coordinates in the fundamental-weight basis; m_i is the pairing of the
// weight with the i-th simple coroot.
using WeightVector = std::vector<int>;

enum class GType { A, B, C, F, G };

// A folded root system: the non-simply-laced (or passthrough) root data
// together with its simply-laced parent diagram, the diagram automorphism,
// and the map a from coinvariants to invariants.
struct FoldingDatum {
  GType family;
  int rank = 0;
  std::string name;  // e.g. "C2"

  int d = 1;                 // order of the folding automorphism
  std::vector<int> d_i;      // 1 for short (I1), d for long (I0)
  std::vector<int> I0, I1;   // 0-based indices into I

  // cartan[i][j] = <alpha_j, alpha-check_i> = (alpha_i, alpha_j) / d_i
  std::vector<std::vector<int>> cartan;
  // pairing[i][j] = (alpha_i, alpha_j); diagonal 2 d_i
  std::vector<std::vector<int>> pairing;

  int parent_rank = 0;
  std::vector<std::vector<int>> parent_adj;  // 0/1 adjacency of the parent
  std::vector<int> parent_perm;              // the automorphism on parent nodes
  std::vector<int> orbit_of;                 // parent node -> index in I
  // a_matrix[p][i]: coefficient of parent node p in a(alpha_i)
  std::vector<std::vector<int>> a_matrix;

  bool is_passthrough() const { return d == 1; }
};

FoldingDatum build_folding(GType family, int rank);
// Label form, e.g. "A1", "B3", "C2", "F4", "G2".
FoldingDatum build_folding(const std::string& label);

// a(alpha) in the parent root lattice.
std::vector<int> a_map(const FoldingDatum& F, const RootVector& alpha);

// (beta, beta)/2, always an integer.
long norm_half(const FoldingDatum& F, const RootVector& beta);

// Simply-laced parent pairing (diagonal 2) of two parent-lattice vectors.
long parent_pairing(const FoldingDatum& F, const std::vector<int>& x,
                    const std::vector<int>& y);

// All beta with 0 <= beta <= alpha, in lexicographic order.
std::vector<RootVector> enumerate_below(const RootVector& alpha);

// Simple reflection s_i on fundamental-weight coordinates.
WeightVector reflect(const FoldingDatum& F, int i, const WeightVector& mu);

// z-exponent of z^{beta*}: each simple root maps to the corresponding simple
// coroot, expanded in fundamental-weight coordinates (columns of cartan).
WeightVector coroot_weight(const FoldingDatum& F, const RootVector& beta);

// W-invariant symmetric form on the weight space, normalized so that short
// roots have squared length 2 (rational on general weights).
Rat weight_form(const FoldingDatum& F, const WeightVector& mu, const WeightVector& nu);

bool is_dominant(const WeightVector& mu);
int height(const RootVector& alpha);  // |alpha|

}  // namespace qw

#endif
