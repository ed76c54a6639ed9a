#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qw/exactalg.hpp"
#include "qw/errors.hpp"

using namespace qw;

namespace {

GradedWeight gw(int k, std::vector<int> mu) { return GradedWeight(k, std::move(mu)); }

LaurentPoly mono(int k, std::vector<int> mu, const Rat& c = 1) {
  return LaurentPoly::monomial(gw(k, std::move(mu)), c);
}

// Deterministic small polynomials for property checks.
struct Lcg {
  unsigned long s;
  explicit Lcg(unsigned long seed) : s(seed) {}
  int next(int lo, int hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((s >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
};

LaurentPoly random_poly(Lcg& rng, int rank) {
  LaurentPoly p(rank);
  const int nterms = rng.next(0, 4);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> mu(rank);
    for (int& m : mu) m = rng.next(-2, 2);
    p.add_term(gw(rng.next(-2, 3), mu), Rat(rng.next(-4, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent multiplication basics") {
  LaurentPoly one = LaurentPoly::one(1);
  LaurentPoly qz = mono(1, {1});
  LaurentPoly a = one + qz;
  LaurentPoly b = one - qz;
  CHECK(a * b == one - mono(2, {2}));

  LaurentPoly anything = mono(2, {-1}, Rat(3)) + mono(0, {4}, Rat(-2, 5));
  CHECK(anything * one == anything);

  LaurentPoly s = mono(0, {1}) + mono(0, {-1});
  LaurentPoly sq = s * s;
  CHECK(sq == mono(0, {2}) + mono(0, {0}, 2) + mono(0, {-2}));
}

TEST_CASE("ring axioms hold exactly on sampled triples") {
  Lcg rng(20240517);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly a = random_poly(rng, 2);
    LaurentPoly b = random_poly(rng, 2);
    LaurentPoly c = random_poly(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
  }
}

TEST_CASE("rc_add produces the unreduced common denominator") {
  GradedWeight f_q = gw(1, {0});
  RationalCharacter a(LaurentPoly::one(1), {f_q});   // 1/(1-q)
  RationalCharacter b(mono(1, {0}), {f_q});          // q/(1-q)
  RationalCharacter sum = rc_add(a, b);
  CHECK(sum.den == std::vector<GradedWeight>{f_q});
  RationalCharacter expected(LaurentPoly::one(1) + mono(1, {0}), {f_q});
  CHECK(rc_equal(sum, expected));

  RationalCharacter zero = RationalCharacter::zero(1);
  CHECK(rc_equal(rc_add(a, zero), a));

  GradedWeight f_qz = gw(1, {1});
  RationalCharacter c(LaurentPoly::one(1), {f_qz});
  RationalCharacter d(mono(1, {1}), {f_qz});
  CHECK(rc_equal(rc_add(c, d), RationalCharacter(LaurentPoly::one(1) + mono(1, {1}), {f_qz})));
}

TEST_CASE("rc_equal compares cross-multiplied forms") {
  RationalCharacter a(LaurentPoly::one(1) - mono(2, {0}), {gw(1, {0})});  // (1-q^2)/(1-q)
  RationalCharacter b(LaurentPoly::one(1) + mono(1, {0}));                // 1+q
  CHECK(rc_equal(a, b));

  RationalCharacter c(LaurentPoly::one(1), {gw(1, {0})});
  RationalCharacter d(LaurentPoly::one(1), {gw(2, {0})});
  CHECK_FALSE(rc_equal(c, d));

  // Multiset semantics: the ordering of the factor list is irrelevant.
  LaurentPoly num = LaurentPoly::one(2) - mono(3, {1, 1});
  std::vector<GradedWeight> den1 = {gw(1, {0, 0}), gw(2, {0, 0}), gw(1, {1, 0}),
                                    gw(2, {0, 1}), gw(1, {1, 1})};
  std::vector<GradedWeight> den2 = {den1[4], den1[2], den1[0], den1[3], den1[1]};
  CHECK(rc_equal(RationalCharacter(num, den1), RationalCharacter(num, den2)));
}

TEST_CASE("rc_equal is an equivalence relation on equal-by-construction forms") {
  Lcg rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    LaurentPoly n = random_poly(rng, 1);
    if (n.is_zero()) n = LaurentPoly::one(1);
    GradedWeight f = gw(rng.next(1, 3), {rng.next(-1, 1)});
    if (f.is_unit()) f = gw(1, {0});
    RationalCharacter a(n, {f});
    RationalCharacter b(n * LaurentPoly::one_minus(gw(2, {0})), {f, gw(2, {0})});
    RationalCharacter c(n * LaurentPoly::one_minus(gw(1, {1})), {gw(1, {1}), f});
    CHECK(rc_equal(a, a));
    CHECK(rc_equal(a, b));
    CHECK(rc_equal(b, a));
    CHECK(rc_equal(b, c));
    CHECK(rc_equal(a, c));
  }
}

TEST_CASE("series expansion of geometric factors") {
  RationalCharacter a(LaurentPoly::one(1), {gw(1, {0})});
  CHECK(series_expand(a, 3) ==
        LaurentPoly::one(1) + mono(1, {0}) + mono(2, {0}) + mono(3, {0}));

  RationalCharacter b(LaurentPoly::one(1), {gw(1, {0}), gw(1, {1})});
  LaurentPoly expect = LaurentPoly::one(1) + mono(1, {0}) + mono(1, {1}) + mono(2, {0}) +
                       mono(2, {1}) + mono(2, {2});
  CHECK(series_expand(b, 2) == expect);

  RationalCharacter bad(LaurentPoly::one(1), {gw(0, {1})});
  CHECK_THROWS_AS(series_expand(bad, 4), NonExpandable);
}

TEST_CASE("series expansion is additive") {
  Lcg rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPoly na = random_poly(rng, 1);
    LaurentPoly nb = random_poly(rng, 1);
    RationalCharacter a(na, {gw(1, {0}), gw(rng.next(1, 2), {1})});
    RationalCharacter b(nb, {gw(2, {0})});
    LaurentPoly lhs = series_expand(a, 6) + series_expand(b, 6);
    CHECK(lhs == series_expand(rc_add(a, b), 6));
  }
}

TEST_CASE("exact division by binomials") {
  LaurentPoly p = LaurentPoly::one(1) - mono(2, {2});
  auto quo = p.divide_exact(LaurentPoly::one_minus(gw(1, {1})));
  REQUIRE(quo.has_value());
  CHECK(*quo == LaurentPoly::one(1) + mono(1, {1}));

  CHECK_FALSE(p.divide_exact(LaurentPoly::one_minus(gw(1, {0}))).has_value());
}

TEST_CASE("rc_simplify cancels factors and reduces to primitive parts") {
  // (1-q)(1+q^2 z) / [(1-q)(1-q^4 z^2)] -> 1 / (1 - q^2 z)
  LaurentPoly num = LaurentPoly::one_minus(gw(1, {0})) * (LaurentPoly::one(1) + mono(2, {1}));
  RationalCharacter a(num, {gw(1, {0}), gw(4, {2})});
  RationalCharacter s = rc_simplify(a);
  CHECK(s.num == LaurentPoly::one(1));
  CHECK(s.den == std::vector<GradedWeight>{gw(2, {1})});
  CHECK(rc_equal(s, a));
}

TEST_CASE("canonical text forms") {
  CHECK(laurent_text(LaurentPoly::one(1) + mono(1, {1})) == "1 + q*z1");
  CHECK(rc_text(RationalCharacter(LaurentPoly::one(1), {gw(1, {0})})) == "1 / [(1 - q)]");
  CHECK(monomial_text(gw(2, {-1, 0})) == "q^2*z1^-1");
  CHECK(monomial_text(gw(0, {0, 0})) == "1");
  CHECK(laurent_text(mono(0, {1, 0}, Rat(-3, 2)) + mono(1, {0, 0})) == "-3/2*z1 + q");
  RationalCharacter g(LaurentPoly::one(2) - mono(3, {0, 1}),
                      {gw(1, {0, 0}), gw(1, {0, 1})});
  CHECK(rc_text(g) == "(1 - q^3*z2) / [(1 - q) (1 - q z2)]");
}
