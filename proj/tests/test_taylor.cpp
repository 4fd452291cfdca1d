#include <doctest.h>

#include "towerlab/io.hpp"
#include "towerlab/multilinear.hpp"
#include "towerlab/rng.hpp"
#include "towerlab/taylor.hpp"
#include "towerlab/tower.hpp"

using namespace towerlab;

static QField Q;

// f(x_1+...+x_m) rebuilt from the components, as one polynomial identity
template <class F>
static bool reconstruction_holds(const F& field, const Form<F>& f, int m) {
  const int n = f.nvars();
  std::vector<std::vector<typename F::Elem>> images(n, std::vector<typename F::Elem>(n * m, field.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) images[i][j * n + i] = field.one();
  Form<F> direct = substitute_linear(field, f, n * m, images);
  Form<F> sum(n * m, f.degree());
  for (const auto& [e, comp] : taylor_expand(field, f, m)) sum = add(field, sum, comp.underlying);
  return sum.equals(field, direct);
}

TEST_CASE("taylor expansion of x^2 in two blocks") {
  auto f = parse_form(Q, "x1^2", 1);
  auto comps = taylor_expand(Q, f, 2);
  REQUIRE(comps.size() == 3);
  MultiDegree e20{{2, 0}}, e11{{1, 1}}, e02{{0, 2}};
  CHECK(format_form(Q, comps.at(e20).underlying) == "x1^2");
  CHECK(format_form(Q, comps.at(e11).underlying) == "2*x1*x2");
  CHECK(format_form(Q, comps.at(e02).underlying) == "x2^2");
}

TEST_CASE("taylor component of x^3 obeys the multinomial identity") {
  auto f = parse_form(Q, "x1^3", 1);
  auto comps = taylor_expand(Q, f, 2);
  MultiDegree e21{{2, 1}};
  auto comp = comps.at(e21);
  CHECK(format_form(Q, comp.underlying) == "3*x1^2*x2");
  auto diag = diagonal_collapse(Q, comp);
  // 3*x^3 = C(3;2,1) * f
  CHECK(diag.equals(Q, scale(Q, f, Q.from_int(3))));
  CHECK(multinomial(3, {2, 1}) == 3);
}

TEST_CASE("linear form splits into one copy per block") {
  auto f = parse_form(Q, "2*x1 - x2", 2);
  auto comps = taylor_expand(Q, f, 3);
  REQUIRE(comps.size() == 3);
  for (const auto& [e, comp] : comps) {
    CHECK(e.total() == 1);
    CHECK(comp.underlying.term_count() == 2);
  }
}

TEST_CASE("reconstruction and multinomial identities on random rational forms") {
  Rng rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    int d = 1 + static_cast<int>(rng.next_below(4));
    int m = 1 + static_cast<int>(rng.next_below(3));
    auto f = random_form(Q, rng, n, d, 4);
    CHECK(reconstruction_holds(Q, f, m));
    for (const auto& [e, comp] : taylor_expand(Q, f, m)) {
      auto diag = diagonal_collapse(Q, comp);
      auto expect = scale(Q, f, Q.from_fraction(multinomial(d, e.e), 1));
      CHECK(diag.equals(Q, expect));
    }
  }
}

TEST_CASE("taylor expansion rejects m < 1") {
  CHECK_THROWS_AS(taylor_expand(Q, parse_form(Q, "x1^2", 1), 0), DomainError);
}

TEST_CASE("polarization worked examples") {
  // f = x^2 -> 2*h*h'
  auto p1 = polarize(Q, parse_form(Q, "x1^2", 1));
  REQUIRE(p1.support == std::vector<int>{1, 2});
  REQUIRE(p1.tensor.size() == 1);
  CHECK(Q.eq(p1.tensor[0].second, Q.from_int(2)));

  // f = x1*x2 -> h1 h'2 + h2 h'1
  auto p2 = polarize(Q, parse_form(Q, "x1*x2", 2));
  REQUIRE(p2.tensor.size() == 2);
  for (const auto& [idx, c] : p2.tensor) CHECK(Q.eq(c, Q.one()));

  // f = x^3 -> 6 h h' h''; diagonal gives 3! f
  auto p3 = polarize(Q, parse_form(Q, "x1^3", 1));
  REQUIRE(p3.tensor.size() == 1);
  CHECK(Q.eq(p3.tensor[0].second, Q.from_int(6)));
}

TEST_CASE("polarization symmetry and diagonal identity on random forms") {
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    int d = 1 + static_cast<int>(rng.next_below(3));
    auto f = random_nonzero_form(Q, rng, n, d, 4);
    auto tilde = polarize(Q, f);
    // symmetry: swapping any two blocks leaves the tensor invariant
    for (int b1 = 0; b1 < d; ++b1)
      for (int b2 = b1 + 1; b2 < d; ++b2) {
        auto swapped = tilde;
        for (auto& [idx, c] : swapped.tensor) std::swap(idx[b1], idx[b2]);
        std::sort(swapped.tensor.begin(), swapped.tensor.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        CHECK(tilde.equals(Q, swapped));
      }
    // diagonal: evaluating every block at x gives d! f(x)
    BlockSpace space{std::vector<int>(d, n)};
    auto flat = flatten(Q, tilde, space);
    std::vector<std::vector<mpq_class>> images(n * d, std::vector<mpq_class>(n, Q.zero()));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i) images[j * n + i][i] = Q.one();
    auto diag = substitute_linear(Q, flat, n, images);
    mpq_class fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    CHECK(diag.equals(Q, scale(Q, f, fact)));
  }
}

TEST_CASE("polarization refuses small characteristic") {
  FpField F3(3);
  Rng rng(1);
  auto f = random_nonzero_form(F3, rng, 2, 3, 3);
  CHECK_THROWS_AS(polarize(F3, f), DomainError);
  // p > d is fine
  FpField F5(5);
  auto g = parse_form(F5, "x1^3", 1);
  CHECK_NOTHROW(polarize(F5, g));
}

TEST_CASE("subspace restriction worked examples") {
  auto f = parse_form(Q, "x1^2 + x2^2", 2);
  auto r1 = subspace_restrict(Q, f, {{Q.one(), Q.zero()}});
  CHECK(format_form(Q, r1) == "x1^2");

  auto g = parse_form(Q, "x1*x2", 2);
  auto r2 = subspace_restrict(Q, g, {{Q.one(), Q.zero()}, {Q.zero(), Q.one()}});
  CHECK(format_form(Q, r2) == "x1*x2");

  auto r3 = subspace_restrict(Q, g, {{Q.one(), Q.one()}});
  CHECK(format_form(Q, r3) == "x1^2");
}

TEST_CASE("taylor tower layer contents") {
  auto f = parse_form(Q, "x1*x2", 2);
  auto T = Tower<QField>::from_forms(Q, 2, {f});
  auto T2 = taylor_tower(Q, T, 2);
  REQUIRE(T2.height() == 1);
  // multidegrees (2,0), (1,1), (0,2): one nonzero component each
  CHECK(T2.layers()[0].forms.size() == 3);
  CHECK(T2.layers()[0].degree == 2);
  CHECK(T2.nvars() == 4);

  // a layer of linear forms yields one copy per block
  auto lin = Tower<QField>::from_forms(Q, 2, {parse_form(Q, "x1 + x2", 2)});
  auto L3 = taylor_tower(Q, lin, 3);
  CHECK(L3.layers()[0].forms.size() == 3);

  // empty tower stays empty
  Tower<QField> empty(2);
  CHECK(taylor_tower(Q, empty, 2).height() == 0);
}
