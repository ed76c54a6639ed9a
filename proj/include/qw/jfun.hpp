#ifndef QW_JFUN_HPP
#define QW_JFUN_HPP

#include <map>
#include <optional>
#include <string>

#include "qw/charalg.hpp"
#include "qw/exactalg.hpp"
#include "qw/rootdata.hpp"

namespace qw {

// (q)_gamma = prod_i prod_{s=1..c_i} (1 - q^{d_i s}) as a list of factors.
std::vector<GradedWeight> q_pochhammer_factors(const FoldingDatum& F, const RootVector& gamma);
LaurentPoly q_pochhammer(const FoldingDatum& F, const RootVector& gamma);

// Memoized solver for the recurrence
//   J_alpha = sum_{0 <= beta <= alpha} q^{(beta,beta)/2} z^{beta*} J_beta / (q)_{alpha-beta}
// with J_0 = 1, solved by isolating the beta = alpha term. Values are kept in
// factored form; every denominator factor has q-exponent >= 1.
class JContext {
 public:
  explicit JContext(FoldingDatum F) : F_(std::move(F)) {}

  const FoldingDatum& folding() const { return F_; }
  const RationalCharacter& compute(const RootVector& alpha);

 private:
  FoldingDatum F_;
  std::map<RootVector, RationalCharacter> memo_;
};

RationalCharacter compute_J(const FoldingDatum& F, const RootVector& alpha);

struct ZastavaMatchReport {
  bool pass = false;
  bool exact = false;  // closed-form comparison (single-relation fixture)
  int series_bound = 0;
  std::optional<GradedWeight> first_mismatch;
  std::string detail;
};

// Compares compute_J(F, alpha) with the character of the fixture: exactly for
// a single-relation presentation, degreewise up to N otherwise.
ZastavaMatchReport check_zastava_character(const FoldingDatum& F, const RootVector& alpha,
                                     const WeightedPresentation& fixture, int N = 10);

}  // namespace qw

#endif
