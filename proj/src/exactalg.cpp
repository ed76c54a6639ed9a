#include "qw/exactalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "qw/errors.hpp"

namespace qw {

bool GradedWeight::is_unit() const {
  if (k != 0) return false;
  return std::all_of(mu.begin(), mu.end(), [](int m) { return m == 0; });
}

GradedWeight GradedWeight::operator+(const GradedWeight& o) const {
  assert(mu.size() == o.mu.size());
  GradedWeight r(k + o.k, mu);
  for (std::size_t i = 0; i < mu.size(); ++i) r.mu[i] += o.mu[i];
  return r;
}

GradedWeight GradedWeight::scaled(int s) const {
  GradedWeight r(k * s, mu);
  for (auto& m : r.mu) m *= s;
  return r;
}

std::optional<GradedWeight> GradedWeight::divided(int s) const {
  if (s <= 0 || k % s != 0) return std::nullopt;
  GradedWeight r(k / s, mu);
  for (auto& m : r.mu) {
    if (m % s != 0) return std::nullopt;
    m /= s;
  }
  return r;
}

LaurentPoly LaurentPoly::one(int rank) {
  LaurentPoly p(rank);
  p.add_term(GradedWeight(0, std::vector<int>(rank, 0)), 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(const GradedWeight& w, const Rat& c) {
  LaurentPoly p(static_cast<int>(w.mu.size()));
  p.add_term(w, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const GradedWeight& w) {
  LaurentPoly p = one(static_cast<int>(w.mu.size()));
  p.add_term(w, -1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const GradedWeight& w, const Rat& c) {
  assert(static_cast<int>(w.mu.size()) == rank_);
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LaurentPoly::coeff(const GradedWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(rank_);
  if (c == 0) return r;
  for (const auto& [w, cc] : terms_) r.terms_.emplace(w, cc * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const GradedWeight& w) const {
  LaurentPoly r(rank_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t + w, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(rank_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

int LaurentPoly::min_q_degree() const {
  assert(!terms_.empty());
  return terms_.begin()->first.k;
}

int LaurentPoly::max_q_degree() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first.k;
}

LaurentPoly LaurentPoly::truncate_q(int N) const {
  LaurentPoly r(rank_);
  for (const auto& [w, c] : terms_) {
    if (w.k <= N) r.terms_.emplace(w, c);
  }
  return r;
}

LaurentPoly LaurentPoly::q_slice(int k) const {
  LaurentPoly r(rank_);
  for (const auto& [w, c] : terms_) {
    if (w.k == k) r.terms_.emplace(GradedWeight(0, w.mu), c);
  }
  return r;
}

LaurentPoly LaurentPoly::mul_truncated(const LaurentPoly& o, int N) const {
  LaurentPoly r(rank_);
  for (const auto& [wa, ca] : terms_) {
    if (wa.k > N) continue;
    for (const auto& [wb, cb] : o.terms_) {
      if (wa.k + wb.k > N) continue;
      r.add_term(wa + wb, ca * cb);
    }
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  const auto& d0 = *divisor.terms_.begin();
  if (!d0.first.is_unit()) return std::nullopt;
  for (const auto& [w, c] : divisor.terms_) {
    if (!w.is_unit() && w.k < 1) return std::nullopt;
  }
  if (is_zero()) return LaurentPoly(rank_);

  const int qmax = max_q_degree();
  LaurentPoly rem(*this);
  LaurentPoly quot(rank_);
  while (!rem.is_zero()) {
    const auto& lt = *rem.terms_.begin();
    if (lt.first.k > qmax) return std::nullopt;
    Rat qc = lt.second / d0.second;
    GradedWeight qw = lt.first;
    quot.add_term(qw, qc);
    for (const auto& [w, c] : divisor.terms_) rem.add_term(qw + w, -qc * c);
  }
  return quot;
}

bool LaurentPoly::nonneg_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_nonneg_integer(t.second); });
}

RationalCharacter::RationalCharacter(LaurentPoly n, std::vector<GradedWeight> d)
    : num(std::move(n)), den(std::move(d)) {
  sort_den();
  check_den();
}

RationalCharacter RationalCharacter::one(int rank) {
  return RationalCharacter(LaurentPoly::one(rank));
}

void RationalCharacter::sort_den() { std::sort(den.begin(), den.end()); }

void RationalCharacter::check_den() const {
  for (const auto& w : den) {
    if (w.is_unit() || w.k < 0)
      throw InternalNonFactored("denominator factor (1 - " + monomial_text(w, " ") +
                                ") is not admissible");
  }
}

namespace {

// Multiset difference b \ a assuming both sorted.
std::vector<GradedWeight> multiset_diff(const std::vector<GradedWeight>& b,
                                        const std::vector<GradedWeight>& a) {
  std::vector<GradedWeight> out;
  std::size_t i = 0, j = 0;
  while (i < b.size()) {
    if (j < a.size() && a[j] == b[i]) {
      ++i;
      ++j;
    } else if (j < a.size() && a[j] < b[i]) {
      ++j;
    } else {
      out.push_back(b[i]);
      ++i;
    }
  }
  return out;
}

std::vector<GradedWeight> multiset_union_max(const std::vector<GradedWeight>& a,
                                             const std::vector<GradedWeight>& b) {
  // Per-factor maximum of multiplicities; inputs sorted.
  std::vector<GradedWeight> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly product_of_factors(int rank, const std::vector<GradedWeight>& fs) {
  LaurentPoly p = LaurentPoly::one(rank);
  for (const auto& w : fs) p = p * LaurentPoly::one_minus(w);
  return p;
}

}  // namespace

RationalCharacter rc_add(const RationalCharacter& a, const RationalCharacter& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<GradedWeight> common = multiset_union_max(a.den, b.den);
  LaurentPoly na = a.num * product_of_factors(a.rank(), multiset_diff(common, a.den));
  LaurentPoly nb = b.num * product_of_factors(b.rank(), multiset_diff(common, b.den));
  RationalCharacter r(a.rank());
  r.num = na + nb;
  r.den = r.num.is_zero() ? std::vector<GradedWeight>{} : std::move(common);
  return r;
}

RationalCharacter rc_sub(const RationalCharacter& a, const RationalCharacter& b) {
  RationalCharacter nb(b);
  nb.num = -nb.num;
  return rc_add(a, nb);
}

RationalCharacter rc_mul(const RationalCharacter& a, const RationalCharacter& b) {
  RationalCharacter r(a.rank());
  r.num = a.num * b.num;
  if (r.num.is_zero()) return r;
  r.den = a.den;
  r.den.insert(r.den.end(), b.den.begin(), b.den.end());
  r.sort_den();
  return r;
}

RationalCharacter rc_mul_poly(const RationalCharacter& a, const LaurentPoly& p) {
  RationalCharacter r(a.rank());
  r.num = a.num * p;
  if (!r.num.is_zero()) r.den = a.den;
  return r;
}

bool rc_equal(const RationalCharacter& a, const RationalCharacter& b) {
  // Cancel shared factors first; the cross-multiplication then stays small.
  std::vector<GradedWeight> ra = multiset_diff(a.den, b.den);
  std::vector<GradedWeight> rb = multiset_diff(b.den, a.den);
  LaurentPoly lhs = a.num * product_of_factors(a.rank(), rb);
  LaurentPoly rhs = b.num * product_of_factors(b.rank(), ra);
  return lhs == rhs;
}

RationalCharacter rc_simplify(RationalCharacter a, std::optional<GradedWeight> keep) {
  if (a.num.is_zero()) {
    a.den.clear();
    return a;
  }
  bool keep_available = keep.has_value();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.den.size(); ++i) {
      const GradedWeight w = a.den[i];
      const bool protected_here = keep_available && w == *keep;
      // Full cancellation of the factor against the numerator.
      if (!protected_here) {
        if (auto q = a.num.divide_exact(LaurentPoly::one_minus(w))) {
          a.num = *q;
          a.den.erase(a.den.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
      // Primitive reduction: if w = j*w' then 1 - X^j = (1 - X')(1 + X' + ...),
      // and the cofactor may divide the numerator.
      int content = w.k;
      for (int m : w.mu) content = std::gcd(content, std::abs(m));
      for (int j = content; j >= 2; --j) {
        auto wp = w.divided(j);
        if (!wp) continue;
        LaurentPoly cof(a.rank());
        for (int t = 0; t < j; ++t) cof.add_term(wp->scaled(t), 1);
        if (auto q = a.num.divide_exact(cof)) {
          a.num = *q;
          a.den[i] = *wp;
          if (protected_here) keep = *wp;
          a.sort_den();
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  a.sort_den();
  return a;
}

LaurentPoly series_expand(const RationalCharacter& a, int N) {
  for (const auto& w : a.den) {
    if (w.k == 0)
      throw NonExpandable("denominator factor (1 - " + monomial_text(w, " ") +
                          ") has q-exponent 0");
  }
  LaurentPoly result = a.num.truncate_q(N);
  if (result.is_zero()) return result;
  for (const auto& w : a.den) {
    const int lo = result.min_q_degree();
    LaurentPoly geom(a.rank());
    for (int j = 0; lo + j * w.k <= N; ++j) geom.add_term(w.scaled(j), 1);
    result = result.mul_truncated(geom, N);
    if (result.is_zero()) return result;
  }
  return result;
}

std::string monomial_text(const GradedWeight& w, const std::string& sep) {
  std::ostringstream os;
  bool first = true;
  auto piece = [&](const std::string& var, int e) {
    if (e == 0) return;
    if (!first) os << sep;
    first = false;
    os << var;
    if (e != 1) os << "^" << e;
  };
  piece("q", w.k);
  for (std::size_t i = 0; i < w.mu.size(); ++i) piece("z" + std::to_string(i + 1), w.mu[i]);
  if (first) os << "1";
  return os.str();
}

std::string laurent_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (w.is_unit()) {
      os << rat_to_string(ac);
    } else if (ac == 1) {
      os << monomial_text(w);
    } else {
      os << rat_to_string(ac) << "*" << monomial_text(w);
    }
  }
  return os.str();
}

std::string rc_text(const RationalCharacter& a) {
  std::string num = laurent_text(a.num);
  if (a.den.empty()) return num;
  std::ostringstream os;
  if (a.num.size() > 1) {
    os << "(" << num << ")";
  } else {
    os << num;
  }
  os << " / [";
  bool first = true;
  for (const auto& w : a.den) {
    if (!first) os << " ";
    first = false;
    os << "(1 - " << monomial_text(w, " ") << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace qw
