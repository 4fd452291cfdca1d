#include <doctest.h>

#include "towerlab/io.hpp"
#include "towerlab/rank.hpp"
#include "towerlab/rng.hpp"

using namespace towerlab;

static QField Q;

TEST_CASE("strength of worked examples") {
  FpField F3(3);

  // x1^2 -> 1 with certificate (x1, x1)
  auto r1 = strength_finite(F3, parse_form(F3, "x1^2", 1), {});
  CHECK(r1.bound.exact());
  CHECK(r1.bound.lower.value == 1);
  REQUIRE(r1.certificate.has_value());
  REQUIRE(r1.certificate->pairs.size() == 1);
  CHECK(format_form(F3, r1.certificate->pairs[0].first) == "x1");
  CHECK(format_form(F3, r1.certificate->pairs[0].second) == "x1");

  // x1*x2 + x3*x4 over Q -> exactly 2
  auto r2 = strength_rational(Q, parse_form(Q, "x1*x2 + x3*x4", 4), {});
  CHECK(r2.bound.exact());
  CHECK(r2.bound.lower.value == 2);

  // x1*x2 + x3*x4 mod (x1) -> exactly 1; one verified pair (the minimal
  // certificate is tie-broken by enumeration order, e.g. (x1+x4, x3))
  auto r3 = strength_finite(F3, parse_form(F3, "x1*x2 + x3*x4", 4), {parse_form(F3, "x1", 4)});
  CHECK(r3.bound.exact());
  CHECK(r3.bound.lower.value == 1);
  REQUIRE(r3.certificate.has_value());
  REQUIRE(r3.certificate->pairs.size() == 1);
  CHECK(r3.certificate->verify(F3, parse_form(F3, "x1*x2 + x3*x4", 4)));
  CHECK(ideal_membership(F3, r3.certificate->ideal_witness, {parse_form(F3, "x1", 4)}));

  // linear forms have infinite strength
  auto r4 = strength_finite(F3, parse_form(F3, "x1 + x2", 2), {});
  CHECK(r4.bound.lower.infinite);
  CHECK(r4.bound.upper.infinite);

  // strength 0 iff the form lies in the ideal
  auto r5 = strength_finite(F3, parse_form(F3, "x1*x2", 2), {parse_form(F3, "x1", 2)});
  CHECK(r5.bound.exact());
  CHECK(r5.bound.lower.value == 0);
}

TEST_CASE("strength over F_3 differs from the closure value on anisotropic quadrics") {
  // x1^2 + x2^2 is irreducible over F_3 (-1 is a nonresidue), so its
  // field-level strength is 2 while the closure value is 1; over F_9 the
  // factorization exists. This is the discrepancy the quadratic oracle's
  // F_{p^2} validation is designed around.
  FpField F3(3);
  Fp2Field F9(3);
  auto q3 = parse_form(F3, "x1^2 + x2^2", 2);
  auto r3 = strength_finite(F3, q3, {});
  CHECK(r3.bound.exact());
  CHECK(r3.bound.lower.value == 2);

  auto q9 = parse_form(F9, "x1^2 + x2^2", 2);
  auto r9 = strength_finite(F9, q9, {});
  CHECK(r9.bound.exact());
  CHECK(r9.bound.lower.value == 1);

  CHECK(quadratic_strength(F3, q3).lower.value == 1);
}

TEST_CASE("quadratic oracle worked examples") {
  CHECK(quadratic_strength(Q, parse_form(Q, "x1^2", 1)).lower.value == 1);
  CHECK(quadratic_strength(Q, parse_form(Q, "x1*x2 + x3*x4", 4)).lower.value == 2);
  // nondegenerate in 5 variables -> 3
  CHECK(quadratic_strength(Q, parse_form(Q, "x1^2+x2^2+x3^2+x4^2+x5^2", 5)).lower.value == 3);
  CHECK(quadratic_strength(Q, parse_form(Q, "x1*x2 + x2*x3 + x3*x1", 3)).lower.value == 2);
  FpField F2(2);
  CHECK_THROWS_AS(quadratic_strength(F2, parse_form(F2, "x1*x2", 2)), DomainError);
}

TEST_CASE("quadratic oracle agrees with the exhaustive search over F_9 (sample)") {
  FpField F3(3);
  Fp2Field F9(3);
  Rng rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    auto q3 = random_form(F3, rng, n, 2, 4);
    // lift to F_9 coefficient-wise
    std::vector<Form<Fp2Field>::Term> ts;
    for (const auto& [m, c] : q3.terms()) ts.emplace_back(m, F9.from_int(c));
    auto q9 = Form<Fp2Field>::from_terms(F9, n, 2, std::move(ts));
    auto oracle = strength_finite(F9, q9, {});
    REQUIRE(oracle.bound.exact());
    if (q3.is_zero()) {
      CHECK(oracle.bound.lower.value == 0);
      continue;
    }
    auto closed = quadratic_strength(F3, q3);
    CHECK(closed.lower.value == oracle.bound.lower.value);
  }
}

TEST_CASE("collective strength worked examples") {
  FpField F3(3);
  // {x1^2, x2^2}: the combination (1,0) already has strength 1
  auto c1 = collective_strength(F3, {parse_form(F3, "x1^2", 2), parse_form(F3, "x2^2", 2)}, {});
  CHECK(c1.bound.exact());
  CHECK(c1.bound.lower.value == 1);

  // {x1x2+x3x4, x1x3+x2x4}: the sum factors as (x1+x4)(x2+x3)
  auto c2 = collective_strength(
      F3, {parse_form(F3, "x1*x2 + x3*x4", 4), parse_form(F3, "x1*x3 + x2*x4", 4)}, {});
  CHECK(c2.bound.exact());
  CHECK(c2.bound.lower.value == 1);

  // single form: equals its strength
  auto c3 = collective_strength(F3, {parse_form(F3, "x1*x2 + x3*x4", 4)}, {});
  CHECK(c3.bound.exact());
  CHECK(c3.bound.lower.value == 2);
}

TEST_CASE("monotonicity: a larger modulus never increases exact strength") {
  FpField F3(3);
  Rng rng(31415);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    auto f = random_nonzero_form(F3, rng, n, 2, 4);
    auto g = random_nonzero_form(F3, rng, n, 1, 2);
    auto h = random_nonzero_form(F3, rng, n, 1, 2);
    auto small = strength_finite(F3, f, {g});
    auto big = strength_finite(F3, f, {g, h});
    REQUIRE(small.bound.exact());
    REQUIRE(big.bound.exact());
    CHECK(big.bound.lower.leq(small.bound.lower));
    // strength 0 iff membership
    CHECK((big.bound.lower.value == 0) == ideal_membership(F3, f, {g, h}));
  }
}

TEST_CASE("birch rank worked examples") {
  auto b1 = birch_rank(Q, {parse_form(Q, "x1*x2", 2)});
  CHECK(b1.exact());
  CHECK(b1.lower.value == 2);

  auto b2 = birch_rank(Q, {parse_form(Q, "x1^2 + x2^2 + x3^2", 3)});
  CHECK(b2.exact());
  CHECK(b2.lower.value == 3);

  auto b3 = birch_rank(Q, {parse_form(Q, "x1*x2*x3", 3)});
  CHECK(b3.exact());
  CHECK(b3.lower.value == 2);
}

TEST_CASE("klp interval worked examples") {
  // a quadratic with Brk = 4: interval [2, 4]
  auto k1 = klp_interval(Q, {parse_form(Q, "x1*x2 + x3*x4", 4)});
  CHECK(k1.lower.value == 2);
  CHECK(k1.upper.value == 4);

  // a cubic with Brk = 2 and s = 1: interval [1, 4]
  auto k2 = klp_interval(Q, {parse_form(Q, "x1*x2*x3", 3)});
  CHECK(k2.lower.value == 1);
  CHECK(k2.upper.value == 4);

  // the interval brackets the exact closure strength for quadratics
  auto q = parse_form(Q, "x1*x2 + x3*x4", 4);
  auto exact_closure = quadratic_strength(Q, q);
  CHECK(k1.lower.leq(exact_closure.lower));
  CHECK(exact_closure.upper.leq(k1.upper));
}

TEST_CASE("rationals: bracket via reduction plus cover") {
  auto f = parse_form(Q, "x1*x2*x3 + x4^3", 4);
  auto r = strength_rational(Q, f, {});
  CHECK(r.bound.lower.value >= 1);
  CHECK(!r.bound.upper.infinite);
  CHECK(r.bound.lower.leq(r.bound.upper));
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->verify(Q, f));
}
