#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qw/charalg.hpp"
#include "qw/errors.hpp"
#include "qw/jfun.hpp"
#include "qw/verify.hpp"

using namespace qw;

namespace {

const std::string kFixtures = default_fixture_dir();

GradedWeight gw(int k, std::vector<int> mu) { return GradedWeight(k, std::move(mu)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("slot coefficient weights for the C2 degree (1,1) quasimap data") {
  FoldingDatum F = build_folding("C2");
  RootVector alpha{1, 1};
  // a_2: first fundamental slot, monic degree 1, drop beta'_1.
  CHECK(assign_weight(F, alpha, {0, 0, {1, 0, 0}}) == gw(1, {2, -1}));
  // a_13: middle slot, monic degree 2, drop beta'_2.
  CHECK(assign_weight(F, alpha, {1, 0, {0, 1, 0}}) == gw(2, {-2, 2}));
  // b_14: t-coefficient one step below the monic one.
  CHECK(assign_weight(F, alpha, {1, 1, {1, 1, 0}}) == gw(1, {0, 1}));
  // The monic leading coefficient is not a variable.
  CHECK_THROWS_AS(assign_weight(F, alpha, {0, 1, {0, 0, 0}}), SlotOverflow);
  CHECK_THROWS_AS(assign_weight(F, alpha, {1, 2, {0, 0, 0}}), SlotOverflow);
}

TEST_CASE("shipped fixtures reproduce the slot-weight tables") {
  FoldingDatum C2 = build_folding("C2");
  auto reduced = load_presentation(kFixtures + "/zastava_c2_reduced.json");
  audit_presentation(reduced);
  RootVector alpha{1, 1};
  std::map<std::string, SlotCoefficient> slots = {
      {"a1", {0, 0, {0, 0, 0}}},  {"a2", {0, 0, {1, 0, 0}}},
      {"a3", {0, 0, {1, 1, 0}}},  {"a12", {1, 0, {0, 0, 0}}},
      {"a13", {1, 0, {0, 1, 0}}},
  };
  for (const auto& v : reduced.variables) {
    REQUIRE(slots.count(v.name));
    CHECK(v.weight == assign_weight(C2, alpha, slots.at(v.name)));
  }

  FoldingDatum G2 = build_folding("G2");
  auto g2 = load_presentation(kFixtures + "/zastava_g2_reduced.json");
  audit_presentation(g2);
  std::map<std::string, SlotCoefficient> g2slots = {
      {"f", {0, 0, {0, 0, 0, 0}}}, {"e", {0, 0, {1, 0, 0, 0}}},
      {"a", {1, 0, {0, 0, 0, 0}}}, {"b", {1, 0, {0, 1, 0, 0}}},
      {"c", {1, 0, {1, 1, 0, 0}}},
  };
  for (const auto& v : g2.variables) {
    REQUIRE(g2slots.count(v.name));
    CHECK(v.weight == assign_weight(G2, RootVector{1, 1}, g2slots.at(v.name)));
  }
}

TEST_CASE("boundary and factorization coordinates carry the expected weights") {
  FoldingDatum C2 = build_folding("C2");
  auto reduced = load_presentation(kFixtures + "/zastava_c2_reduced.json");
  // Boundary variable weight = q^{(alpha,alpha)/2} z^{alpha*}.
  GradedWeight boundary(static_cast<int>(norm_half(C2, {1, 1})), coroot_weight(C2, {1, 1}));
  bool saw_boundary = false;
  for (const auto& v : reduced.variables)
    if (v.name == "a3") saw_boundary = (v.weight == boundary);
  CHECK(saw_boundary);
  // Factorization coordinates have z-weight 0 and loop weights q^{d_i s}.
  for (const auto& v : reduced.variables) {
    if (v.name == "a1") CHECK(v.weight == gw(1, {0, 0}));
    if (v.name == "a12") CHECK(v.weight == gw(2, {0, 0}));
  }
  auto g2 = load_presentation(kFixtures + "/zastava_g2_reduced.json");
  GradedWeight g2boundary(static_cast<int>(norm_half(build_folding("G2"), {1, 1})),
                          coroot_weight(build_folding("G2"), {1, 1}));
  for (const auto& v : g2.variables) {
    if (v.name == "c") CHECK(v.weight == g2boundary);
    if (v.name == "a") CHECK(v.weight == gw(1, {0, 0}));
    if (v.name == "f") CHECK(v.weight == gw(3, {0, 0}));
  }
}

TEST_CASE("homogeneity audit rejects a broken relation") {
  auto fixture = load_presentation(kFixtures + "/zastava_c2_reduced.json");
  fixture.relations[0].weight.k += 1;
  CHECK_THROWS_AS(audit_presentation(fixture), InhomogeneousRelation);

  WeightedPresentation bad;
  bad.rank = 1;
  bad.variables.push_back({"x", gw(0, {1})});
  CHECK_THROWS_AS(audit_presentation(bad), InhomogeneousRelation);
}

TEST_CASE("hypersurface closed form") {
  auto reduced = load_presentation(kFixtures + "/zastava_c2_reduced.json");
  RationalCharacter hs = hypersurface_series(reduced);
  CHECK(hs.num == LaurentPoly::one_minus(gw(3, {0, 1})));
  CHECK(hs.den.size() == 5);

  WeightedPresentation tiny;
  tiny.rank = 1;
  tiny.variables.push_back({"x", gw(1, {0})});
  WeightedRelation rel;
  rel.weight = gw(1, {0});
  rel.terms.push_back({Rat(1), {{"x", 1}}});
  tiny.relations.push_back(rel);
  CHECK(rc_equal(hypersurface_series(tiny), RationalCharacter::one(1)));

  tiny.relations.clear();
  CHECK_THROWS_AS(hypersurface_series(tiny), NotHypersurface);
}

TEST_CASE("graded dimensions of small explicit rings") {
  WeightedPresentation freering;
  freering.rank = 1;
  freering.variables.push_back({"x", gw(1, {1})});
  freering.variables.push_back({"y", gw(1, {-1})});
  auto dims = graded_hilbert_function(freering, 2);
  CHECK(dims.at(gw(1, {1})) == 1);
  CHECK(dims.at(gw(1, {-1})) == 1);
  CHECK(dims.at(gw(2, {2})) == 1);
  CHECK(dims.at(gw(2, {0})) == 1);
  CHECK(dims.at(gw(2, {-2})) == 1);

  WeightedPresentation quot = freering;
  WeightedRelation xy;
  xy.weight = gw(2, {0});
  xy.terms.push_back({Rat(1), {{"x", 1}, {"y", 1}}});
  quot.relations.push_back(xy);
  dims = graded_hilbert_function(quot, 2);
  CHECK(dims.at(gw(2, {2})) == 1);
  CHECK(dims.at(gw(2, {-2})) == 1);
  CHECK(dims.at(gw(2, {0})) == 0);
}

TEST_CASE("closed form and degreewise engine agree on both hypersurfaces") {
  for (const std::string& name : {"zastava_c2_reduced.json", "zastava_g2_reduced.json"}) {
    auto fixture = load_presentation(kFixtures + "/" + name);
    const int N = 10;
    LaurentPoly series = series_expand(hypersurface_series(fixture), N);
    auto dims = graded_hilbert_function(fixture, N);
    for (const auto& [w, dim] : dims) CHECK(series.coeff(w) == dim);
    for (const auto& [w, c] : series.terms()) {
      REQUIRE(dims.count(w));
      CHECK(Rat(dims.at(w)) == c);
    }
  }
}

TEST_CASE("fixture files round-trip byte-exactly") {
  for (const std::string& name :
       {"zastava_c2_reduced.json", "zastava_c2_full.json", "zastava_g2_reduced.json"}) {
    std::string text = slurp(kFixtures + "/" + name);
    WeightedPresentation P = presentation_from_json(text);
    CHECK(presentation_to_json(P) == text);
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(presentation_from_json("{"), SchemaError);
  CHECK_THROWS_AS(presentation_from_json("{\"variables\": []}"), SchemaError);
  CHECK_THROWS_AS(load_presentation("/nonexistent/path.json"), SchemaError);
}
