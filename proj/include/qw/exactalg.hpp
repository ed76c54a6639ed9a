#ifndef QW_EXACTALG_HPP
#define QW_EXACTALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qw/rational.hpp"

namespace qw {

// A bigraded monomial exponent q^k * z^mu. The z-exponent mu is stored in
// fundamental-weight coordinates of the folded type (length = rank).
struct GradedWeight {
  int k = 0;
  std::vector<int> mu;

  GradedWeight() = default;
  GradedWeight(int k_, std::vector<int> mu_) : k(k_), mu(std::move(mu_)) {}

  bool is_unit() const;  // (0, 0)
  GradedWeight operator+(const GradedWeight& o) const;
  GradedWeight scaled(int s) const;
  // Componentwise division by an integer; nullopt unless every entry is a
  // multiple of s.
  std::optional<GradedWeight> divided(int s) const;

  bool operator==(const GradedWeight& o) const { return k == o.k && mu == o.mu; }
  // Canonical term order: q-degree ascending, then z-exponent lexicographic.
  bool operator<(const GradedWeight& o) const {
    if (k != o.k) return k < o.k;
    return mu < o.mu;
  }
};

// Finite Laurent polynomial in q, z_1..z_n over Rat. No zero coefficients are
// stored; the map order is the canonical term order.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly one(int rank);
  static LaurentPoly monomial(const GradedWeight& w, const Rat& c = 1);
  // 1 - q^k z^mu
  static LaurentPoly one_minus(const GradedWeight& w);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<GradedWeight, Rat>& terms() const { return terms_; }

  void add_term(const GradedWeight& w, const Rat& c);
  Rat coeff(const GradedWeight& w) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rat& c) const;
  LaurentPoly shifted(const GradedWeight& w) const;  // multiply by monomial

  bool operator==(const LaurentPoly& o) const;

  int min_q_degree() const;  // throws on zero polynomial
  int max_q_degree() const;
  LaurentPoly truncate_q(int N) const;         // keep terms with k <= N
  LaurentPoly q_slice(int k) const;            // z-polynomial at fixed q-degree
  LaurentPoly mul_truncated(const LaurentPoly& o, int N) const;

  // Exact division; the divisor's canonically-lowest term must be a nonzero
  // constant and all other divisor terms must have q-degree >= 1. Returns
  // nullopt when the division is not exact.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  // True when every coefficient is a nonnegative integer.
  bool nonneg_integral() const;

 private:
  int rank_;
  std::map<GradedWeight, Rat> terms_;
};

// num / prod (1 - q^k z^mu). Factors are kept as a sorted multiset and never
// multiplied out; equality is cross-multiplied polynomial equality.
struct RationalCharacter {
  LaurentPoly num;
  std::vector<GradedWeight> den;  // sorted; each factor non-unit, k >= 0

  explicit RationalCharacter(int rank = 0) : num(LaurentPoly::zero(rank)) {}
  explicit RationalCharacter(LaurentPoly n, std::vector<GradedWeight> d = {});

  static RationalCharacter one(int rank);
  static RationalCharacter zero(int rank) { return RationalCharacter(rank); }

  int rank() const { return num.rank(); }
  bool is_zero() const { return num.is_zero(); }

  void sort_den();
  void check_den() const;  // factor invariants
};

RationalCharacter rc_add(const RationalCharacter& a, const RationalCharacter& b);
RationalCharacter rc_sub(const RationalCharacter& a, const RationalCharacter& b);
RationalCharacter rc_mul(const RationalCharacter& a, const RationalCharacter& b);
RationalCharacter rc_mul_poly(const RationalCharacter& a, const LaurentPoly& p);
bool rc_equal(const RationalCharacter& a, const RationalCharacter& b);

// Best-effort numerator cleanup: divides the numerator by any denominator
// factor that exactly divides it, and reduces factors (1 - X^j) to their
// primitive part (1 - X) when the numerator absorbs the cofactor
// 1 + X + ... + X^{j-1}. Keeps closed forms readable; rc_equal is normative.
// One instance of `keep` (tracked through primitive reduction) is exempt from
// full cancellation, so a distinguished factor stays visible in the result.
RationalCharacter rc_simplify(RationalCharacter a,
                              std::optional<GradedWeight> keep = std::nullopt);

// q-adic expansion up to q-degree N. Every denominator factor must have
// q-exponent >= 1; otherwise NonExpandable is thrown.
LaurentPoly series_expand(const RationalCharacter& a, int N);

// Canonical text forms (documented in the README).
std::string monomial_text(const GradedWeight& w, const std::string& sep = "*");
std::string laurent_text(const LaurentPoly& p);
std::string rc_text(const RationalCharacter& a);

}  // namespace qw

#endif
