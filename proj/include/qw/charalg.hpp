#ifndef QW_CHARALG_HPP
#define QW_CHARALG_HPP

#include <map>
#include <string>
#include <vector>

#include "qw/exactalg.hpp"
#include "qw/rootdata.hpp"

namespace qw {

// A bigraded polynomial ring presentation: weighted variables and homogeneous
// relations. The fixture format for zastava coordinate rings.
struct WeightedVariable {
  std::string name;
  GradedWeight weight;
};

struct RelationTerm {
  Rat coeff;
  std::map<std::string, int> monomial;  // variable -> exponent
};

struct WeightedRelation {
  GradedWeight weight;
  std::vector<RelationTerm> terms;
};

struct WeightedPresentation {
  int rank = 0;  // length of the z-grading vectors
  std::vector<WeightedVariable> variables;
  std::vector<WeightedRelation> relations;
};

// One coefficient slot of a V_{omega_j}-valued polynomial of a quasimap of
// degree alpha: slot j, t-power k below the monic degree n_j, and the weight
// drop beta' in the parent root lattice.
struct SlotCoefficient {
  int slot = 0;  // parent fundamental-weight index (0-based)
  int t_power = 0;
  std::vector<int> depth;  // over parent nodes
};

// (q, z)-weight of a slot coefficient: q-exponent n_j - k, z-exponent the
// orbit collapse of the depth. Throws SlotOverflow for k >= n_j.
GradedWeight assign_weight(const FoldingDatum& F, const RootVector& alpha,
                           const SlotCoefficient& s);

// Throws InhomogeneousRelation unless every relation is homogeneous for the
// bigrading and all variable q-weights are >= 1.
void audit_presentation(const WeightedPresentation& P);

// Complete-intersection closed form (1 - q^{k_r} z^{mu_r}) / prod_v (1 - ...)
// for a single-relation presentation.
RationalCharacter hypersurface_series(const WeightedPresentation& P);

// Exact graded dimensions of the quotient ring for every multidegree with
// q-part <= N, by monomial enumeration and rank over the rationals.
std::map<GradedWeight, long> graded_hilbert_function(const WeightedPresentation& P, int N);

// Fixture JSON round-trip (schema documented in the README).
WeightedPresentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const WeightedPresentation& P);
WeightedPresentation load_presentation(const std::string& path);

}  // namespace qw

#endif
