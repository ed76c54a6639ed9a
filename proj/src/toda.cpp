#include "qw/toda.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qw/demazure.hpp"
#include "qw/errors.hpp"
#include "qw/jsonfmt.hpp"

namespace qw {

namespace {

using ojson = nlohmann::ordered_json;

LaurentPoly laurent_from_json(const ojson& j, int rank) {
  LaurentPoly p(rank);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw SchemaError("laurent term must be [k,[m...],c]");
    GradedWeight w(t[0].get<int>(), t[1].get<std::vector<int>>());
    if (static_cast<int>(w.mu.size()) != rank) throw SchemaError("z-exponent length mismatch");
    p.add_term(w, rat_from_string(t[2].get<std::string>()));
  }
  return p;
}

ojson laurent_to_json(const LaurentPoly& p) {
  ojson j = ojson::array();
  for (const auto& [w, c] : p.terms()) j.push_back(ojson::array({w.k, w.mu, rat_to_string(c)}));
  return j;
}

}  // namespace

DifferenceOperator parse_operator(const std::string& json_text, const FoldingDatum& F) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad operator JSON: ") + e.what());
  }
  DifferenceOperator op;
  op.type_label = j.value("type", std::string());
  if (op.type_label != F.name)
    throw SchemaError("operator type '" + op.type_label + "' does not match folding " + F.name);
  op.provenance = j.value("provenance", std::string());
  if (!j.contains("terms") || !j.contains("eigenvalue"))
    throw SchemaError("operator needs 'terms' and 'eigenvalue'");
  for (const auto& t : j.at("terms")) {
    OperatorTerm term;
    term.shift = t.at("shift").get<std::vector<int>>();
    if (static_cast<int>(term.shift.size()) != F.rank)
      throw SchemaError("shift length mismatch");
    const int q_shift = t.value("q_shift", 0);
    for (const auto& m : t.at("coeff")) {
      if (!m.is_array() || m.size() != 3) throw SchemaError("coeff monomial must be [q,[e...],c]");
      CoeffMonomial cm;
      cm.q_exp = m[0].get<int>() + q_shift;
      cm.x_exp = m[1].get<std::vector<int>>();
      if (static_cast<int>(cm.x_exp.size()) != F.rank)
        throw SchemaError("x-exponent length mismatch");
      cm.c = rat_from_string(m[2].get<std::string>());
      term.coeff.push_back(std::move(cm));
    }
    op.terms.push_back(std::move(term));
  }
  op.eigenvalue = laurent_from_json(j.at("eigenvalue"), F.rank);
  if (!laurent_w_invariant(F, op.eigenvalue))
    throw NonInvariantEigenvalue("eigenvalue of '" + op.type_label + "' is not W-invariant");
  return op;
}

DifferenceOperator load_operator(const std::string& path, const FoldingDatum& F) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open operator config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_operator(ss.str(), F);
}

std::string operator_to_json(const DifferenceOperator& op) {
  ojson j;
  j["type"] = op.type_label;
  j["terms"] = ojson::array();
  for (const auto& t : op.terms) {
    ojson jt;
    jt["shift"] = t.shift;
    jt["coeff"] = ojson::array();
    for (const auto& m : t.coeff)
      jt["coeff"].push_back(ojson::array({m.q_exp, m.x_exp, rat_to_string(m.c)}));
    j["terms"].push_back(std::move(jt));
  }
  j["eigenvalue"] = laurent_to_json(op.eigenvalue);
  j["provenance"] = op.provenance;
  return pretty_json(j);
}

LaurentPoly eval_coeff(const OperatorTerm& term, const WeightVector& point, int rank) {
  LaurentPoly p(rank);
  const std::vector<int> zero(rank, 0);
  for (const auto& m : term.coeff) {
    int k = m.q_exp;
    for (std::size_t i = 0; i < m.x_exp.size(); ++i) k += m.x_exp[i] * point[i];
    p.add_term(GradedWeight(k, zero), m.c);
  }
  return p;
}

RationalCharacter WhittakerTable::lookup(const WeightVector& mu) const {
  if (!is_dominant(mu)) return RationalCharacter::zero(rank);
  auto it = entries.find(mu);
  if (it != entries.end()) return it->second;
  int h = 0;
  for (int m : mu) h += m;
  if (h > box_bound)
    throw BoxExceeded("dominant entry of height " + std::to_string(h) + " beyond box " +
                      std::to_string(box_bound));
  return RationalCharacter::zero(rank);
}

RationalCharacter lattice_apply(const DifferenceOperator& op, const WhittakerTable& table,
                                const WeightVector& lambda) {
  RationalCharacter acc = RationalCharacter::zero(table.rank);
  for (const auto& term : op.terms) {
    WeightVector target(lambda);
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += term.shift[i];
    RationalCharacter value = table.lookup(target);
    if (value.is_zero()) continue;
    acc = rc_add(acc, rc_mul_poly(value, eval_coeff(term, lambda, table.rank)));
  }
  return acc;
}

std::vector<WeightVector> dominant_box(int rank, int height_bound) {
  std::vector<WeightVector> out;
  WeightVector cur(rank, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, height_bound);
  std::sort(out.begin(), out.end(), [](const WeightVector& a, const WeightVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

EigenReport eigencheck(const DifferenceOperator& op, const WhittakerTable& table, int B) {
  EigenReport rep;
  rep.box = B;
  for (const auto& lambda : dominant_box(table.rank, B)) {
    RationalCharacter lhs = lattice_apply(op, table, lambda);
    RationalCharacter rhs = rc_mul_poly(table.lookup(lambda), op.eigenvalue);
    RationalCharacter residual = rc_sub(lhs, rhs);
    if (!residual.is_zero()) rep.failures.push_back(lambda);
  }
  rep.pass = rep.failures.empty();
  return rep;
}

namespace {

// Factor a coefficient polynomial as c * q^k z^sigma * prod (1 - q^a z^nu):
// the form a denominator multiset can absorb.
struct FactoredCoeff {
  Rat scalar;
  GradedWeight shift;
  std::vector<GradedWeight> factors;
};

FactoredCoeff factor_coeff(LaurentPoly p) {
  if (p.is_zero()) throw SingularCoefficient("leading coefficient vanishes at a lattice point");
  FactoredCoeff out;
  out.shift = p.terms().begin()->first;
  out.scalar = p.terms().begin()->second;
  LaurentPoly monic(p.rank());
  for (const auto& [w, c] : p.terms()) {
    GradedWeight d(w.k - out.shift.k, w.mu);
    for (std::size_t i = 0; i < d.mu.size(); ++i) d.mu[i] -= out.shift.mu[i];
    monic.add_term(d, c / out.scalar);
  }
  while (!monic.is_one()) {
    bool reduced = false;
    for (const auto& [w, c] : monic.terms()) {
      if (w.is_unit()) continue;
      if (auto q = monic.divide_exact(LaurentPoly::one_minus(w))) {
        out.factors.push_back(w);
        monic = *q;
        reduced = true;
        break;
      }
    }
    if (!reduced)
      throw InternalNonFactored("coefficient " + laurent_text(monic) +
                                " is not a product of admissible binomials");
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

WhittakerTable solve_whittaker(const FoldingDatum& F, const DifferenceOperator& op, int B) {
  // Triangularity: exactly one shift of positive height, the rest at most 0.
  int max_term = -1;
  for (std::size_t t = 0; t < op.terms.size(); ++t) {
    const int h = std::accumulate(op.terms[t].shift.begin(), op.terms[t].shift.end(), 0);
    if (h > 0) {
      if (max_term >= 0) throw NotTriangular("several height-increasing shifts");
      max_term = static_cast<int>(t);
    }
  }
  if (max_term < 0 && B >= 1) throw NotTriangular("no height-increasing shift");

  WhittakerTable table;
  table.rank = F.rank;
  table.box_bound = B;
  table.entries[WeightVector(F.rank, 0)] = RationalCharacter::one(F.rank);
  if (B == 0 || op.terms.empty()) return table;

  const WeightVector& up = op.terms[max_term].shift;
  const int up_h = std::accumulate(up.begin(), up.end(), 0);

  for (const auto& mu : dominant_box(F.rank, B)) {
    const int h = std::accumulate(mu.begin(), mu.end(), 0);
    if (h == 0) continue;
    // Solve the eigen-equation at the site mu - up for the unknown Psi_mu.
    WeightVector site(mu);
    for (int i = 0; i < F.rank; ++i) site[i] -= up[i];
    RationalCharacter rhs = rc_mul_poly(table.lookup(site), op.eigenvalue);
    for (std::size_t t = 0; t < op.terms.size(); ++t) {
      if (static_cast<int>(t) == max_term) continue;
      WeightVector target(site);
      for (int i = 0; i < F.rank; ++i) target[i] += op.terms[t].shift[i];
      RationalCharacter value = table.lookup(target);
      if (value.is_zero()) continue;
      rhs = rc_sub(rhs, rc_mul_poly(value, eval_coeff(op.terms[t], site, F.rank)));
    }
    FactoredCoeff lead = factor_coeff(eval_coeff(op.terms[max_term], site, F.rank));
    RationalCharacter psi(F.rank);
    psi.num = rhs.num.scaled(1 / lead.scalar).shifted(lead.shift.scaled(-1));
    psi.den = rhs.den;
    psi.den.insert(psi.den.end(), lead.factors.begin(), lead.factors.end());
    psi.sort_den();
    psi.check_den();
    table.entries[mu] = rc_simplify(std::move(psi));
  }

  EigenReport rep = eigencheck(op, table, B - up_h);
  if (!rep.pass) {
    std::ostringstream os;
    os << "re-verification failed at";
    for (const auto& mu : rep.failures) {
      os << " (";
      for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
      os << ")";
    }
    throw InconsistentSystem(os.str());
  }
  return table;
}

}  // namespace qw
