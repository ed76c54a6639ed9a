#include "qw/jfun.hpp"

#include <algorithm>
#include <sstream>

#include "qw/errors.hpp"

namespace qw {

namespace {

void require_positive(const RootVector& gamma) {
  for (int c : gamma) {
    if (c < 0) {
      std::ostringstream os;
      os << "coordinate " << c << " outside Y_+";
      throw NegativeCoordinate(os.str());
    }
  }
}

}  // namespace

std::vector<GradedWeight> q_pochhammer_factors(const FoldingDatum& F, const RootVector& gamma) {
  require_positive(gamma);
  std::vector<GradedWeight> out;
  const std::vector<int> zero(F.rank, 0);
  for (int i = 0; i < F.rank; ++i)
    for (int s = 1; s <= gamma[i]; ++s) out.emplace_back(F.d_i[i] * s, zero);
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly q_pochhammer(const FoldingDatum& F, const RootVector& gamma) {
  LaurentPoly p = LaurentPoly::one(F.rank);
  for (const auto& w : q_pochhammer_factors(F, gamma)) p = p * LaurentPoly::one_minus(w);
  return p;
}

const RationalCharacter& JContext::compute(const RootVector& alpha) {
  require_positive(alpha);
  if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;

  // Bottom-up over the dominance box keeps each step a sum of known values.
  for (const auto& beta : enumerate_below(alpha)) {
    if (memo_.count(beta)) continue;
    if (height(beta) == 0) {
      memo_.emplace(beta, RationalCharacter::one(F_.rank));
      continue;
    }
    RationalCharacter sum = RationalCharacter::zero(F_.rank);
    for (const auto& gamma : enumerate_below(beta)) {
      if (gamma == beta) continue;
      RootVector diff(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i)
        diff[i] = beta[i] - gamma[i];
      RationalCharacter term = memo_.at(gamma);
      GradedWeight mono(static_cast<int>(norm_half(F_, gamma)), coroot_weight(F_, gamma));
      term.num = term.num.shifted(mono);
      auto poch = q_pochhammer_factors(F_, diff);
      term.den.insert(term.den.end(), poch.begin(), poch.end());
      term.sort_den();
      sum = rc_add(sum, term);
    }
    // Isolate the beta = beta term: divide by (1 - q^{(beta,beta)/2} z^{beta*}).
    // That boundary factor is kept visible (up to primitive reduction) even
    // when the numerator happens to absorb it.
    GradedWeight boundary(static_cast<int>(norm_half(F_, beta)), coroot_weight(F_, beta));
    sum.den.push_back(boundary);
    sum.sort_den();
    sum.check_den();
    memo_.emplace(beta, rc_simplify(std::move(sum), boundary));
  }
  return memo_.at(alpha);
}

RationalCharacter compute_J(const FoldingDatum& F, const RootVector& alpha) {
  JContext ctx(F);
  return ctx.compute(alpha);
}

ZastavaMatchReport check_zastava_character(const FoldingDatum& F, const RootVector& alpha,
                                     const WeightedPresentation& fixture, int N) {
  if (fixture.rank != F.rank)
    throw GradingMismatch("fixture z-grading rank " + std::to_string(fixture.rank) +
                          " does not match folding rank " + std::to_string(F.rank));
  ZastavaMatchReport rep;
  rep.series_bound = N;
  RationalCharacter J = compute_J(F, alpha);

  if (fixture.relations.size() == 1) {
    rep.exact = true;
    rep.pass = rc_equal(J, hypersurface_series(fixture));
    if (!rep.pass) rep.detail = "closed forms differ";
    return rep;
  }

  rep.exact = false;
  LaurentPoly series = series_expand(J, N);
  auto dims = graded_hilbert_function(fixture, N);
  // Union of supports; absent keys count as 0 on either side.
  for (const auto& [w, c] : series.terms()) {
    auto it = dims.find(w);
    long dim = it == dims.end() ? 0 : it->second;
    if (c != dim) {
      rep.first_mismatch = w;
      rep.detail = "series coefficient " + rat_to_string(c) + " vs dimension " +
                   std::to_string(dim) + " at " + monomial_text(w);
      return rep;
    }
  }
  for (const auto& [w, dim] : dims) {
    if (w.k > N) continue;
    if (series.coeff(w) != dim) {
      rep.first_mismatch = w;
      rep.detail = "series coefficient " + rat_to_string(series.coeff(w)) +
                   " vs dimension " + std::to_string(dim) + " at " + monomial_text(w);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace qw
