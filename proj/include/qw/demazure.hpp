#ifndef QW_DEMAZURE_HPP
#define QW_DEMAZURE_HPP

#include <map>
#include <string>
#include <vector>

#include "qw/exactalg.hpp"
#include "qw/rootdata.hpp"

namespace qw {

// Twisted affinization attached to a folding: the affine GCM of the twisted
// loop algebra of the parent (untwisted affinization for a passthrough).
// Affine node 0 corresponds to delta - theta with theta the highest short
// root of the finite part; node i >= 1 is the finite node i-1.
struct AffineData {
  FoldingDatum F;
  std::vector<std::vector<int>> gcm;  // (rank+1) x (rank+1)
  std::vector<int> marks;             // delta = sum marks[i] * alpha_i
  std::vector<int> comarks;           // K = sum comarks[i] * alpha-check_i
  RootVector theta;                   // highest short root, finite basis
  std::vector<int> theta_coroot;      // <mu, theta-check> = sum theta_coroot[i] m_i
  WeightVector theta_z;               // z-exponent of theta
};

// An affine weight level*Lambda_0 + mu + delta_exp * delta. The loop grading
// is read off the delta coefficient; the A1 validation pins the sign so that
// characters end up polynomial in q.
struct AffineWeight {
  int level = 0;
  WeightVector mu;
  int delta_exp = 0;

  bool operator==(const AffineWeight& o) const {
    return level == o.level && delta_exp == o.delta_exp && mu == o.mu;
  }
  bool operator<(const AffineWeight& o) const {
    if (level != o.level) return level < o.level;
    if (delta_exp != o.delta_exp) return delta_exp < o.delta_exp;
    return mu < o.mu;
  }
};

// Group-algebra element: finite sum of exponentials with Rat coefficients.
class AffineGroupElement {
 public:
  AffineGroupElement() = default;
  static AffineGroupElement exponential(const AffineWeight& w, const Rat& c = 1);

  void add(const AffineWeight& w, const Rat& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<AffineWeight, Rat>& terms() const { return terms_; }
  bool operator==(const AffineGroupElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<AffineWeight, Rat> terms_;
};

AffineData build_affine(const FoldingDatum& F);

// <w, alpha-check_i> for affine index i in 0..rank.
int affine_pairing(const AffineData& A, const AffineWeight& w, int i);
// The affine simple root as a weight (level 0).
AffineWeight affine_root(const AffineData& A, int i);
AffineWeight affine_reflect(const AffineData& A, int i, const AffineWeight& w);

// Demazure operator D_i f = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}),
// realized by exact string summation; idempotent.
AffineGroupElement demazure_step(const AffineData& A, int i, const AffineGroupElement& f);

enum class SignConvention { plus, minus };

std::string to_string(SignConvention s);
SignConvention sign_from_string(const std::string& s);

// Greedy descent of Lambda_0 + iota(sign * lambda) to the dominant chamber,
// picking the smallest affine index with negative pairing. Returns the word
// in operator-application order (first entry applied first to the dominant
// end); the dominant endpoint is written to *dominant_end when non-null.
std::vector<int> translation_word(const AffineData& A, const WeightVector& lambda,
                                  SignConvention sign,
                                  AffineWeight* dominant_end = nullptr);

// Character of the level-one twisted Demazure module attached to lambda;
// Laurent polynomial in z with polynomial q coefficients, normalized so the
// z^lambda coefficient is 1 + O(q).
LaurentPoly demazure_character(const AffineData& A, const WeightVector& lambda,
                               SignConvention sign = SignConvention::minus);

LaurentPoly normalize_character(const FoldingDatum& F, LaurentPoly raw,
                                const WeightVector& lambda);

// Character of the global module: psi_hat / prod_i prod_{r=1..m_i} (1-q_i^r).
RationalCharacter global_weyl_character(const FoldingDatum& F, const LaurentPoly& psi_hat,
                                        const WeightVector& lambda);

// Finite Weyl character by finite Demazure operators along a reduced word for
// the longest element; the q -> 0 oracle.
LaurentPoly weyl_character_finite(const FoldingDatum& F, const WeightVector& lambda);

// Reduced word for the longest finite Weyl group element (0-based indices).
std::vector<int> longest_element_word(const FoldingDatum& F);
// Image of a weight under the longest element.
WeightVector w0_image(const FoldingDatum& F, const WeightVector& mu);

bool laurent_w_invariant(const FoldingDatum& F, const LaurentPoly& p);

}  // namespace qw

#endif
