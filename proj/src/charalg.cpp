#include "qw/charalg.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qw/errors.hpp"
#include "qw/jsonfmt.hpp"

namespace qw {

GradedWeight assign_weight(const FoldingDatum& F, const RootVector& alpha,
                           const SlotCoefficient& s) {
  if (s.slot < 0 || s.slot >= F.parent_rank) throw SlotOverflow("slot out of range");
  std::vector<int> a = a_map(F, alpha);
  const int n_j = a[s.slot];
  if (s.t_power < 0 || s.t_power >= n_j)
    throw SlotOverflow("t-power " + std::to_string(s.t_power) + " not below slot degree " +
                       std::to_string(n_j));
  if (static_cast<int>(s.depth.size()) != F.parent_rank)
    throw SlotOverflow("depth vector has wrong length");
  // Collapse the parent root-lattice depth along orbits; each parent simple
  // root contributes the simple coroot of its orbit.
  RootVector collapsed(F.rank, 0);
  for (int p = 0; p < F.parent_rank; ++p) collapsed[F.orbit_of[p]] += s.depth[p];
  return GradedWeight(n_j - s.t_power, coroot_weight(F, collapsed));
}

namespace {

GradedWeight monomial_weight(const WeightedPresentation& P,
                             const std::map<std::string, int>& mono,
                             const std::map<std::string, std::size_t>& index) {
  GradedWeight w(0, std::vector<int>(P.rank, 0));
  for (const auto& [name, exp] : mono) {
    auto it = index.find(name);
    if (it == index.end()) throw SchemaError("unknown variable '" + name + "' in relation");
    w = w + P.variables[it->second].weight.scaled(exp);
  }
  return w;
}

std::map<std::string, std::size_t> variable_index(const WeightedPresentation& P) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < P.variables.size(); ++v) index[P.variables[v].name] = v;
  return index;
}

// Exact rank of a sparse rational matrix given as rows of (column, value).
long sparse_rank(std::vector<std::map<int, Rat>> rows) {
  long rank = 0;
  std::map<int, std::size_t> pivot_of_col;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    while (!row.empty()) {
      const int col = row.begin()->first;
      auto piv = pivot_of_col.find(col);
      if (piv == pivot_of_col.end()) break;
      const auto& prow = rows[piv->second];
      Rat f = row.begin()->second / prow.begin()->second;
      for (const auto& [c, v] : prow) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -f * v);
        } else {
          it->second -= f * v;
          if (it->second == 0) row.erase(it);
        }
      }
    }
    if (!row.empty()) {
      pivot_of_col[row.begin()->first] = r;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

void audit_presentation(const WeightedPresentation& P) {
  auto index = variable_index(P);
  for (const auto& v : P.variables) {
    if (v.weight.k < 1)
      throw InhomogeneousRelation("variable '" + v.name + "' has q-weight < 1");
    if (static_cast<int>(v.weight.mu.size()) != P.rank)
      throw InhomogeneousRelation("variable '" + v.name + "' has wrong z-grading length");
  }
  for (std::size_t r = 0; r < P.relations.size(); ++r) {
    const auto& rel = P.relations[r];
    for (const auto& t : rel.terms) {
      if (t.coeff == 0) throw InhomogeneousRelation("zero coefficient stored");
      GradedWeight w = monomial_weight(P, t.monomial, index);
      if (!(w == rel.weight))
        throw InhomogeneousRelation("relation " + std::to_string(r) + " term of weight " +
                                    monomial_text(w) + " does not match tag " +
                                    monomial_text(rel.weight));
    }
  }
}

RationalCharacter hypersurface_series(const WeightedPresentation& P) {
  if (P.relations.size() != 1)
    throw NotHypersurface("presentation has " + std::to_string(P.relations.size()) +
                          " relations");
  audit_presentation(P);
  std::vector<GradedWeight> den;
  den.reserve(P.variables.size());
  for (const auto& v : P.variables) den.push_back(v.weight);
  return RationalCharacter(LaurentPoly::one_minus(P.relations[0].weight), std::move(den));
}

std::map<GradedWeight, long> graded_hilbert_function(const WeightedPresentation& P, int N) {
  audit_presentation(P);
  auto index = variable_index(P);
  const std::size_t nv = P.variables.size();

  // Enumerate all monomials of q-degree <= N, bucketed by multidegree.
  std::map<GradedWeight, std::vector<std::vector<int>>> bucket;
  std::vector<int> exps(nv, 0);
  std::function<void(std::size_t, GradedWeight)> rec = [&](std::size_t v, GradedWeight w) {
    if (v == nv) {
      bucket[w].push_back(exps);
      return;
    }
    rec(v + 1, w);
    const GradedWeight& vw = P.variables[v].weight;
    GradedWeight cur = w;
    for (int e = 1; cur.k + vw.k <= N; ++e) {
      cur = cur + vw;
      exps[v] = e;
      rec(v + 1, cur);
    }
    exps[v] = 0;
  };
  rec(0, GradedWeight(0, std::vector<int>(P.rank, 0)));

  // Index monomials within each bucket.
  std::map<GradedWeight, std::map<std::vector<int>, int>> mono_index;
  for (const auto& [w, monos] : bucket) {
    auto& mi = mono_index[w];
    int c = 0;
    for (const auto& m : monos) mi[m] = c++;
  }

  // For each multidegree D: rows = shifts m * rel for every relation rel and
  // every monomial m of multidegree D - weight(rel).
  std::map<GradedWeight, long> dims;
  std::vector<std::vector<std::pair<std::vector<int>, Rat>>> rel_vec;
  for (const auto& rel : P.relations) {
    std::vector<std::pair<std::vector<int>, Rat>> terms;
    for (const auto& t : rel.terms) {
      std::vector<int> e(nv, 0);
      for (const auto& [name, exp] : t.monomial) e[index.at(name)] = exp;
      terms.emplace_back(std::move(e), t.coeff);
    }
    rel_vec.push_back(std::move(terms));
  }

  for (const auto& [D, monos] : bucket) {
    std::vector<std::map<int, Rat>> rows;
    const auto& mi = mono_index.at(D);
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      const GradedWeight& rw = P.relations[r].weight;
      GradedWeight shift_deg(D.k - rw.k, D.mu);
      for (std::size_t i = 0; i < D.mu.size(); ++i) shift_deg.mu[i] -= rw.mu[i];
      if (shift_deg.k < 0) continue;
      auto bit = bucket.find(shift_deg);
      if (bit == bucket.end()) continue;
      for (const auto& shift : bit->second) {
        std::map<int, Rat> row;
        for (const auto& [e, c] : rel_vec[r]) {
          std::vector<int> prod(nv);
          for (std::size_t v = 0; v < nv; ++v) prod[v] = shift[v] + e[v];
          row[mi.at(prod)] = c;
        }
        rows.push_back(std::move(row));
      }
    }
    dims[D] = static_cast<long>(monos.size()) - sparse_rank(std::move(rows));
  }
  return dims;
}

namespace {

using ojson = nlohmann::ordered_json;

GradedWeight weight_from_json(const ojson& j) {
  if (!j.contains("q") || !j.contains("z")) throw SchemaError("weight needs q and z");
  GradedWeight w;
  w.k = j.at("q").get<int>();
  w.mu = j.at("z").get<std::vector<int>>();
  return w;
}

ojson weight_fields(const GradedWeight& w) {
  ojson j;
  j["q"] = w.k;
  j["z"] = w.mu;
  return j;
}

}  // namespace

WeightedPresentation presentation_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad fixture JSON: ") + e.what());
  }
  WeightedPresentation P;
  if (!j.contains("variables")) throw SchemaError("fixture needs 'variables'");
  for (const auto& v : j.at("variables")) {
    WeightedVariable wv;
    wv.name = v.at("name").get<std::string>();
    wv.weight = weight_from_json(v);
    P.variables.push_back(std::move(wv));
  }
  if (P.variables.empty()) throw SchemaError("fixture has no variables");
  P.rank = static_cast<int>(P.variables[0].weight.mu.size());
  for (const auto& r : j.value("relations", ojson::array())) {
    WeightedRelation rel;
    rel.weight = weight_from_json(r);
    for (const auto& t : r.at("terms")) {
      RelationTerm term;
      term.coeff = rat_from_string(t.at("coeff").get<std::string>());
      for (const auto& [var, exp] : t.at("monomial").items())
        term.monomial[var] = exp.get<int>();
      rel.terms.push_back(std::move(term));
    }
    P.relations.push_back(std::move(rel));
  }
  return P;
}

std::string presentation_to_json(const WeightedPresentation& P) {
  ojson j;
  j["variables"] = ojson::array();
  for (const auto& v : P.variables) {
    ojson jv;
    jv["name"] = v.name;
    jv["q"] = v.weight.k;
    jv["z"] = v.weight.mu;
    j["variables"].push_back(std::move(jv));
  }
  j["relations"] = ojson::array();
  for (const auto& r : P.relations) {
    ojson jr = weight_fields(r.weight);
    jr["terms"] = ojson::array();
    for (const auto& t : r.terms) {
      ojson jt;
      jt["coeff"] = rat_to_string(t.coeff);
      ojson jm;
      for (const auto& [var, exp] : t.monomial) jm[var] = exp;
      jt["monomial"] = std::move(jm);
      jr["terms"].push_back(std::move(jt));
    }
    j["relations"].push_back(std::move(jr));
  }
  return pretty_json(j);
}

WeightedPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return presentation_from_json(ss.str());
}

}  // namespace qw
