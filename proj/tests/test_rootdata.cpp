#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qw/errors.hpp"
#include "qw/rootdata.hpp"
#include "qw/toda.hpp"

using namespace qw;

TEST_CASE("C2 folding matches the sp(4)-from-A3 presentation") {
  FoldingDatum F = build_folding("C2");
  CHECK(F.d == 2);
  CHECK(F.I1 == std::vector<int>{0});
  CHECK(F.I0 == std::vector<int>{1});
  CHECK(F.d_i == std::vector<int>{1, 2});
  CHECK(F.parent_rank == 3);
  // a(alpha_1) = beta_1 + beta_3, a(alpha_2) = 2 beta_2
  CHECK(a_map(F, {1, 0}) == std::vector<int>{1, 0, 1});
  CHECK(a_map(F, {0, 1}) == std::vector<int>{0, 2, 0});
  CHECK(F.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(F.pairing == std::vector<std::vector<int>>{{2, -2}, {-2, 4}});
}

TEST_CASE("G2 folding matches the D4 triality presentation") {
  FoldingDatum F = build_folding("G2");
  CHECK(F.d == 3);
  CHECK(F.I0 == std::vector<int>{0});
  CHECK(F.I1 == std::vector<int>{1});
  CHECK(a_map(F, {1, 0}) == std::vector<int>{3, 0, 0, 0});
  CHECK(a_map(F, {0, 1}) == std::vector<int>{0, 1, 1, 1});
  CHECK(a_map(F, {1, 1}) == std::vector<int>{3, 1, 1, 1});
  CHECK(F.cartan == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("A1 passthrough") {
  FoldingDatum F = build_folding("A1");
  CHECK(F.d == 1);
  CHECK(F.I0.empty());
  CHECK(F.I1 == std::vector<int>{0});
  CHECK(a_map(F, {5}) == std::vector<int>{5});
  CHECK(F.cartan == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("B2 is the transposed rank-2 folding") {
  FoldingDatum B2 = build_folding("B2");
  FoldingDatum C2 = build_folding("C2");
  CHECK(B2.cartan[0][1] == C2.cartan[1][0]);
  CHECK(B2.cartan[1][0] == C2.cartan[0][1]);
  CHECK(B2.d_i == std::vector<int>{2, 1});
}

TEST_CASE("unsupported labels are rejected") {
  CHECK_THROWS_AS(build_folding("D4"), UnsupportedType);
  CHECK_THROWS_AS(build_folding("E6"), UnsupportedType);
  CHECK_THROWS_AS(build_folding("G3"), UnsupportedType);
  CHECK_THROWS_AS(build_folding("C1"), UnsupportedType);
  CHECK_THROWS_AS(build_folding("Q2"), UnsupportedType);
}

TEST_CASE("a_map is linear and vanishes at zero") {
  FoldingDatum F = build_folding("C2");
  CHECK(a_map(F, {0, 0}) == std::vector<int>(3, 0));
  auto s = a_map(F, {2, 3});
  auto x = a_map(F, {1, 0});
  auto y = a_map(F, {0, 1});
  for (int p = 0; p < 3; ++p) CHECK(s[p] == 2 * x[p] + 3 * y[p]);
}

TEST_CASE("norm_half values") {
  FoldingDatum C2 = build_folding("C2");
  CHECK(norm_half(C2, {1, 0}) == 1);
  CHECK(norm_half(C2, {0, 1}) == 2);
  CHECK(norm_half(C2, {1, 1}) == 1);
  FoldingDatum G2 = build_folding("G2");
  CHECK(norm_half(G2, {1, 1}) == 1);
  CHECK(norm_half(G2, {1, 0}) == 3);
  FoldingDatum A1 = build_folding("A1");
  CHECK(norm_half(A1, {2}) == 4);
}

TEST_CASE("enumerate_below walks the box lexicographically") {
  auto box = enumerate_below({1, 1});
  REQUIRE(box.size() == 4);
  CHECK(box[0] == RootVector{0, 0});
  CHECK(box[1] == RootVector{0, 1});
  CHECK(box[2] == RootVector{1, 0});
  CHECK(box[3] == RootVector{1, 1});

  CHECK(enumerate_below({0, 0}) == std::vector<RootVector>{{0, 0}});
  CHECK(enumerate_below({2}) == std::vector<RootVector>{{0}, {1}, {2}});
}

TEST_CASE("reflections") {
  FoldingDatum A1 = build_folding("A1");
  CHECK(reflect(A1, 0, {1}) == WeightVector{-1});

  FoldingDatum C2 = build_folding("C2");
  CHECK(reflect(C2, 0, {0, 5}) == WeightVector{0, 5});  // m_1 = 0 fixed
  CHECK(reflect(C2, 0, {1, 0}) == WeightVector{-1, 1}); // omega_1 - alpha-check_1
}

TEST_CASE("reflect is an involution preserving the invariant form") {
  for (const std::string& label : {"C2", "G2", "B3", "F4", "A2"}) {
    FoldingDatum F = build_folding(label);
    std::vector<WeightVector> sample;
    for (int a = -2; a <= 2; ++a)
      for (int b = -1; b <= 1; ++b) {
        WeightVector mu(F.rank, 0);
        mu[0] = a;
        mu[F.rank - 1] = b;
        if (F.rank > 2) mu[1] = a + b;
        sample.push_back(mu);
      }
    for (int i = 0; i < F.rank; ++i) {
      for (const auto& mu : sample) {
        CHECK(reflect(F, i, reflect(F, i, mu)) == mu);
        for (const auto& nu : sample) {
          CHECK(weight_form(F, reflect(F, i, mu), reflect(F, i, nu)) ==
                weight_form(F, mu, nu));
        }
      }
    }
  }
}

TEST_CASE("folding identity and injectivity on the height-6 box") {
  for (const std::string& label : {"A1", "A2", "B2", "C2", "B3", "C3", "G2", "F4"}) {
    FoldingDatum F = build_folding(label);
    std::set<std::vector<int>> images;
    for (const auto& alpha : dominant_box(F.rank, 6)) {
      auto a = a_map(F, alpha);
      CHECK(parent_pairing(F, a, a) == 2L * F.d * norm_half(F, alpha));
      CHECK(images.insert(a).second);
    }
  }
}

TEST_CASE("coroot weights expand along cartan columns") {
  FoldingDatum C2 = build_folding("C2");
  CHECK(coroot_weight(C2, {1, 0}) == WeightVector{2, -1});
  CHECK(coroot_weight(C2, {0, 1}) == WeightVector{-2, 2});
  CHECK(coroot_weight(C2, {1, 1}) == WeightVector{0, 1});
  FoldingDatum G2 = build_folding("G2");
  CHECK(coroot_weight(G2, {1, 1}) == WeightVector{1, -1});
}
