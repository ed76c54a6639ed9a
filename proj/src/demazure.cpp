#include "qw/demazure.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "qw/errors.hpp"

namespace qw {

namespace {

constexpr int kDescentBound = 200000;

// <beta, alpha-check_i> for beta in root coordinates.
int root_pairing(const FoldingDatum& F, const RootVector& beta, int i) {
  int s = 0;
  for (int j = 0; j < F.rank; ++j) s += beta[j] * F.cartan[i][j];
  return s;
}

// The unique dominant short root (the highest root for a passthrough, where
// every root is short).
RootVector highest_short_root(const FoldingDatum& F) {
  std::set<RootVector> roots;
  std::vector<RootVector> queue;
  for (int i = 0; i < F.rank; ++i) {
    RootVector e(F.rank, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < F.rank; ++i) {
      RootVector r(beta);
      r[i] -= root_pairing(F, beta, i);
      if (roots.insert(r).second) queue.push_back(r);
    }
  }
  for (const auto& beta : roots) {
    if (norm_half(F, beta) != 1) continue;
    bool dominant = true;
    for (int i = 0; i < F.rank && dominant; ++i) dominant = root_pairing(F, beta, i) >= 0;
    if (dominant) return beta;
  }
  throw Error("no dominant short root found");
}

}  // namespace

AffineGroupElement AffineGroupElement::exponential(const AffineWeight& w, const Rat& c) {
  AffineGroupElement f;
  f.add(w, c);
  return f;
}

void AffineGroupElement::add(const AffineWeight& w, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AffineData build_affine(const FoldingDatum& F) {
  AffineData A;
  A.F = F;
  A.theta = highest_short_root(F);
  A.theta_coroot.resize(F.rank);
  for (int i = 0; i < F.rank; ++i) A.theta_coroot[i] = A.theta[i] * F.d_i[i];
  A.theta_z = coroot_weight(F, A.theta);

  const int n = F.rank;
  A.gcm.assign(n + 1, std::vector<int>(n + 1, 0));
  A.gcm[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += A.theta_coroot[i] * F.cartan[i][j];
    A.gcm[0][j + 1] = -s;             // <alpha_j, alpha-check_0>
    A.gcm[j + 1][0] = -A.theta_z[j];  // <alpha_0, alpha-check_j>
    for (int i = 0; i < n; ++i) A.gcm[i + 1][j + 1] = F.cartan[i][j];
  }

  A.marks.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) A.marks[i + 1] = A.theta[i];
  A.comarks.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) A.comarks[i + 1] = A.theta_coroot[i];

  // Null root property: delta = sum marks[j] alpha_j pairs to zero with every
  // simple affine coroot.
  for (int i = 0; i <= n; ++i) {
    int s = 0;
    for (int j = 0; j <= n; ++j) s += A.gcm[i][j] * A.marks[j];
    if (s != 0) throw Error("null root property fails for " + F.name);
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if ((A.gcm[i][j] == 0) != (A.gcm[j][i] == 0))
        throw Error("affine GCM not sign-symmetric");
      if (i != j && A.gcm[i][j] > 0) throw Error("affine GCM has positive entry");
    }
  return A;
}

int affine_pairing(const AffineData& A, const AffineWeight& w, int i) {
  assert(i >= 0 && i <= A.F.rank);
  if (i == 0) {
    int s = 0;
    for (int j = 0; j < A.F.rank; ++j) s += A.theta_coroot[j] * w.mu[j];
    return w.level - s;
  }
  return w.mu[i - 1];
}

AffineWeight affine_root(const AffineData& A, int i) {
  AffineWeight r;
  r.level = 0;
  r.mu.assign(A.F.rank, 0);
  if (i == 0) {
    for (int j = 0; j < A.F.rank; ++j) r.mu[j] = -A.theta_z[j];
    r.delta_exp = 1;
  } else {
    for (int j = 0; j < A.F.rank; ++j) r.mu[j] = A.F.cartan[j][i - 1];
  }
  return r;
}

AffineWeight affine_reflect(const AffineData& A, int i, const AffineWeight& w) {
  const int p = affine_pairing(A, w, i);
  AffineWeight root = affine_root(A, i);
  AffineWeight out(w);
  out.delta_exp -= p * root.delta_exp;
  for (int j = 0; j < A.F.rank; ++j) out.mu[j] -= p * root.mu[j];
  return out;
}

AffineGroupElement demazure_step(const AffineData& A, int i, const AffineGroupElement& f) {
  // String form of (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}); exact by
  // construction, which is the content of the InexactDivision contract.
  AffineGroupElement out;
  const AffineWeight root = affine_root(A, i);
  for (const auto& [w, c] : f.terms()) {
    const int p = affine_pairing(A, w, i);
    if (p >= 0) {
      AffineWeight cur(w);
      for (int t = 0; t <= p; ++t) {
        out.add(cur, c);
        cur.delta_exp -= root.delta_exp;
        for (int j = 0; j < A.F.rank; ++j) cur.mu[j] -= root.mu[j];
      }
    } else if (p <= -2) {
      AffineWeight cur(w);
      for (int t = 1; t <= -p - 1; ++t) {
        cur.delta_exp += root.delta_exp;
        for (int j = 0; j < A.F.rank; ++j) cur.mu[j] += root.mu[j];
        out.add(cur, -c);
      }
    }
  }
  return out;
}

std::string to_string(SignConvention s) {
  return s == SignConvention::plus ? "plus" : "minus";
}

SignConvention sign_from_string(const std::string& s) {
  if (s == "plus") return SignConvention::plus;
  if (s == "minus") return SignConvention::minus;
  throw SchemaError("bad sign convention '" + s + "'");
}

std::vector<int> translation_word(const AffineData& A, const WeightVector& lambda,
                                  SignConvention sign, AffineWeight* dominant_end) {
  assert(is_dominant(lambda));
  AffineWeight tau;
  tau.level = 1;
  tau.mu = lambda;
  if (sign == SignConvention::minus)
    for (auto& m : tau.mu) m = -m;
  tau.delta_exp = 0;

  std::vector<int> word;
  for (int steps = 0; steps < kDescentBound; ++steps) {
    int desc = -1;
    for (int i = 0; i <= A.F.rank; ++i) {
      if (affine_pairing(A, tau, i) < 0) {
        desc = i;
        break;
      }
    }
    if (desc < 0) {
      if (dominant_end) *dominant_end = tau;
      std::reverse(word.begin(), word.end());
      return word;
    }
    tau = affine_reflect(A, desc, tau);
    word.push_back(desc);
  }
  throw NotInOrbit("greedy descent for " + A.F.name + " did not terminate");
}

LaurentPoly demazure_character(const AffineData& A, const WeightVector& lambda,
                               SignConvention sign) {
  assert(is_dominant(lambda));
  AffineWeight dom;
  std::vector<int> word = translation_word(A, lambda, sign, &dom);
  AffineGroupElement f = AffineGroupElement::exponential(dom);
  for (int i : word) f = demazure_step(A, i, f);

  LaurentPoly raw(A.F.rank);
  for (const auto& [w, c] : f.terms()) {
    assert(w.level == 1);
    raw.add_term(GradedWeight(w.delta_exp, w.mu), c);
  }
  return normalize_character(A.F, std::move(raw), lambda);
}

LaurentPoly normalize_character(const FoldingDatum& F, LaurentPoly raw,
                                const WeightVector& lambda) {
  if (raw.is_zero()) throw NormalizationFailure("character vanished");

  auto coeff_of = [&](const WeightVector& target) {
    LaurentPoly c(F.rank);
    for (const auto& [w, cc] : raw.terms())
      if (w.mu == target) c.add_term(GradedWeight(w.k, std::vector<int>(F.rank, 0)), cc);
    return c;
  };

  LaurentPoly c = coeff_of(lambda);
  if (c.is_zero()) {
    // Wrong chamber: apply the global z -> z^{w_0} flip.
    if (coeff_of(w0_image(F, lambda)).is_zero())
      throw NormalizationFailure("neither z^lambda nor z^{w_0 lambda} present");
    LaurentPoly flipped(F.rank);
    for (const auto& [w, cc] : raw.terms())
      flipped.add_term(GradedWeight(w.k, w0_image(F, w.mu)), cc);
    raw = std::move(flipped);
    c = coeff_of(lambda);
  }

  const int e = c.min_q_degree();
  if (e != 0) {
    LaurentPoly shifted(F.rank);
    for (const auto& [w, cc] : raw.terms())
      shifted.add_term(GradedWeight(w.k - e, w.mu), cc);
    raw = std::move(shifted);
    c = coeff_of(lambda);
  }
  if (c.terms().begin()->second != 1)
    throw NormalizationFailure("z^lambda coefficient is not 1 + O(q)");
  return raw;
}

RationalCharacter global_weyl_character(const FoldingDatum& F, const LaurentPoly& psi_hat,
                                        const WeightVector& lambda) {
  std::vector<GradedWeight> den;
  const std::vector<int> zero(F.rank, 0);
  for (int i = 0; i < F.rank; ++i)
    for (int r = 1; r <= lambda[i]; ++r) den.emplace_back(F.d_i[i] * r, zero);
  return RationalCharacter(psi_hat, std::move(den));
}

std::vector<int> longest_element_word(const FoldingDatum& F) {
  // Greedy descent of -rho records a reduced word for w_0.
  WeightVector mu(F.rank, -1);
  std::vector<int> word;
  for (int steps = 0; steps < kDescentBound; ++steps) {
    int desc = -1;
    for (int i = 0; i < F.rank; ++i) {
      if (mu[i] < 0) {
        desc = i;
        break;
      }
    }
    if (desc < 0) return word;
    mu = reflect(F, desc, mu);
    word.push_back(desc);
  }
  throw NotInOrbit("finite descent did not terminate");
}

WeightVector w0_image(const FoldingDatum& F, const WeightVector& mu) {
  WeightVector out(mu);
  for (int i : longest_element_word(F)) out = reflect(F, i, out);
  return out;
}

LaurentPoly weyl_character_finite(const FoldingDatum& F, const WeightVector& lambda) {
  assert(is_dominant(lambda));
  // Finite Demazure operators on the z-lattice along a reduced word for w_0.
  LaurentPoly f = LaurentPoly::monomial(GradedWeight(0, lambda));
  std::vector<int> word = longest_element_word(F);
  std::reverse(word.begin(), word.end());
  for (int i : word) {
    LaurentPoly out(F.rank);
    for (const auto& [w, c] : f.terms()) {
      const int p = w.mu[i];
      if (p >= 0) {
        WeightVector cur = w.mu;
        for (int t = 0; t <= p; ++t) {
          out.add_term(GradedWeight(w.k, cur), c);
          for (int j = 0; j < F.rank; ++j) cur[j] -= F.cartan[j][i];
        }
      } else if (p <= -2) {
        WeightVector cur = w.mu;
        for (int t = 1; t <= -p - 1; ++t) {
          for (int j = 0; j < F.rank; ++j) cur[j] += F.cartan[j][i];
          out.add_term(GradedWeight(w.k, cur), -c);
        }
      }
    }
    f = std::move(out);
  }
  return f;
}

bool laurent_w_invariant(const FoldingDatum& F, const LaurentPoly& p) {
  for (int i = 0; i < F.rank; ++i) {
    LaurentPoly refl(F.rank);
    for (const auto& [w, c] : p.terms())
      refl.add_term(GradedWeight(w.k, reflect(F, i, w.mu)), c);
    if (!(refl == p)) return false;
  }
  return true;
}

}  // namespace qw
