#ifndef QW_TODA_HPP
#define QW_TODA_HPP

#include <map>
#include <string>
#include <vector>

#include "qw/exactalg.hpp"
#include "qw/rootdata.hpp"

namespace qw {

// One monomial c * q^{q_exp} * x1^{e_1} ... xn^{e_n} of a shift coefficient;
// the symbol x_i evaluates to q^{m_i} at the lattice point with coordinates m.
struct CoeffMonomial {
  Rat c;
  int q_exp = 0;
  std::vector<int> x_exp;
};

struct OperatorTerm {
  WeightVector shift;
  std::vector<CoeffMonomial> coeff;
};

// A lattice q-difference operator: finitely many shifts with coefficients
// polynomial in q and the evaluation symbols, plus its W-invariant eigenvalue.
struct DifferenceOperator {
  std::string type_label;
  std::vector<OperatorTerm> terms;
  LaurentPoly eigenvalue;
  std::string provenance;
};

DifferenceOperator parse_operator(const std::string& json_text, const FoldingDatum& F);
DifferenceOperator load_operator(const std::string& path, const FoldingDatum& F);
std::string operator_to_json(const DifferenceOperator& op);

// Coefficient evaluated at a lattice point (a pure q-Laurent polynomial,
// embedded at the rank of the operator).
LaurentPoly eval_coeff(const OperatorTerm& term, const WeightVector& point, int rank);

// Table of solved values on the dominant box height <= box_bound; lookups of
// non-dominant points return 0.
struct WhittakerTable {
  int rank = 0;
  int box_bound = 0;
  std::map<WeightVector, RationalCharacter> entries;

  // Zero for non-dominant points; BoxExceeded for dominant points beyond the
  // box.
  RationalCharacter lookup(const WeightVector& mu) const;
};

RationalCharacter lattice_apply(const DifferenceOperator& op, const WhittakerTable& table,
                                const WeightVector& lambda);

struct EigenReport {
  bool pass = false;
  int box = 0;
  std::vector<WeightVector> failures;
};

// Residuals of the eigen-equation at every dominant lambda with height <= B.
EigenReport eigencheck(const DifferenceOperator& op, const WhittakerTable& table, int B);

// Triangular solve from Psi_0 = 1 by induction on dominance height, with a
// full eigencheck re-verification before returning.
WhittakerTable solve_whittaker(const FoldingDatum& F, const DifferenceOperator& op, int B);

std::vector<WeightVector> dominant_box(int rank, int height_bound);

}  // namespace qw

#endif
