#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "towerlab/groebner.hpp"
#include "towerlab/io.hpp"
#include "towerlab/linalg.hpp"
#include "towerlab/rng.hpp"

using namespace towerlab;
using nlohmann::json;

static QField Q;

TEST_CASE("groebner basics") {
  // {x1, x2} is already reduced
  auto gb = groebner(Q, {parse_poly(Q, "x1", 3), parse_poly(Q, "x2", 3)});
  CHECK(gb.status == GbStatus::done);
  CHECK(gb.generators.size() == 2);

  // empty input: the zero ideal
  auto gb0 = groebner(Q, std::vector<Poly<QField>>{});
  CHECK(gb0.generators.empty());

  // idempotence: the reduced basis is a fixed point
  auto gb1 = groebner(Q, {parse_poly(Q, "x1^2", 2), parse_poly(Q, "x1*x2 - x1", 2)});
  auto gb2 = groebner(Q, gb1.generators);
  REQUIRE(gb1.generators.size() == gb2.generators.size());
  for (size_t i = 0; i < gb1.generators.size(); ++i)
    CHECK(gb1.generators[i].equals(Q, gb2.generators[i]));
}

TEST_CASE("golden corpus: dimensions and reduced bases match the CAS oracle") {
  std::ifstream in(std::string(TL_DATA_DIR) + "/golden_dims.json");
  REQUIRE(in.good());
  json golden = json::parse(in);
  int checked = 0;
  for (const auto& item : golden) {
    const int n = item["nvars"].get<int>();
    const std::string field_tag = item["field"].get<std::string>();
    INFO("golden item ", item["name"].get<std::string>());
    if (field_tag == "Q") {
      std::vector<Poly<QField>> gens;
      for (const auto& g : item["generators"]) gens.push_back(parse_poly(Q, g.get<std::string>(), n));
      auto gb = groebner(Q, gens);
      REQUIRE(gb.status == GbStatus::done);
      auto dims = dimension(Q, gb, n);
      CHECK(dims.dim == item["dim"].get<int>());
      CHECK(dims.codim == item["codim"].get<int>());
      // reduced bases agree up to ordering
      std::vector<Poly<QField>> expected;
      for (const auto& b : item["reduced_basis"]) expected.push_back(parse_poly(Q, b.get<std::string>(), n));
      REQUIRE(gb.generators.size() == expected.size());
      for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gb.generators)
          if (g.equals(Q, e)) found = true;
        CHECK(found);
      }
    } else {
      auto p = static_cast<std::uint32_t>(std::stoul(field_tag.substr(3)));
      FpField P(p);
      std::vector<Poly<FpField>> gens;
      for (const auto& g : item["generators"]) gens.push_back(parse_poly(P, g.get<std::string>(), n));
      auto gb = groebner(P, gens);
      REQUIRE(gb.status == GbStatus::done);
      auto dims = dimension(P, gb, n);
      CHECK(dims.dim == item["dim"].get<int>());
      CHECK(dims.codim == item["codim"].get<int>());
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("dimension of generic linear forms is n - s") {
  Rng rng(31337);
  FpField F7(7);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    int s = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<Poly<FpField>> gens;
    Echelon<FpField> coeffs(F7, n);
    int independent = 0;
    for (int k = 0; k < s; ++k) {
      std::vector<FpField::Elem> row(n);
      for (int i = 0; i < n; ++i) row[i] = F7.element(rng.next_below(7));
      std::vector<Poly<FpField>::Term> ts;
      for (int i = 0; i < n; ++i)
        if (!F7.is_zero(row[i])) {
          Expo m(n);
          m.e[i] = 1;
          ts.emplace_back(m, row[i]);
        }
      if (coeffs.insert(row)) ++independent;
      gens.push_back(Poly<FpField>::normalize(F7, n, std::move(ts)));
    }
    auto dims = dimension_of(F7, gens, n);
    CHECK(dims.dim == n - independent);
  }
}

TEST_CASE("complete intersection checks") {
  CHECK(complete_intersection_check(Q, {parse_form(Q, "x1", 3), parse_form(Q, "x2", 3)}));
  CHECK_FALSE(complete_intersection_check(Q, {parse_form(Q, "x1", 2), parse_form(Q, "x1^2", 2)}));
  CHECK(complete_intersection_check(
      Q, {parse_form(Q, "x1*x2 + x3*x4", 4), parse_form(Q, "x1*x3 - x2*x4", 4)}));
}

TEST_CASE("complete intersections drop dimension by one per removed form") {
  std::vector<Form<QField>> forms{parse_form(Q, "x1*x2 + x3*x4", 4),
                                  parse_form(Q, "x1*x3 - x2*x4", 4)};
  std::vector<Poly<QField>> both{Poly<QField>::from_form(forms[0]), Poly<QField>::from_form(forms[1])};
  auto d2 = dimension_of(Q, both, 4);
  std::vector<Poly<QField>> one{Poly<QField>::from_form(forms[0])};
  auto d1 = dimension_of(Q, one, 4);
  CHECK(d1.dim == d2.dim + 1);
}

TEST_CASE("singular locus ideals") {
  // single form: the gradient components
  auto minors = singular_locus_ideal(Q, {parse_form(Q, "x1*x2", 2)});
  REQUIRE(minors.size() == 2);
  auto dims = dimension_of(Q, {Poly<QField>::from_form(minors[0]), Poly<QField>::from_form(minors[1])}, 2);
  CHECK(dims.codim == 2);

  // sum of n squares: gradient cuts the origin, codim n
  auto m2 = singular_locus_ideal(Q, {parse_form(Q, "x1^2 + x2^2 + x3^2", 3)});
  std::vector<Poly<QField>> gens;
  for (auto& f : m2) gens.push_back(Poly<QField>::from_form(f));
  CHECK(dimension_of(Q, gens, 3).codim == 3);

  // x1*x2*x3: singular where two coordinates vanish, codim 2
  auto m3 = singular_locus_ideal(Q, {parse_form(Q, "x1*x2*x3", 3)});
  gens.clear();
  for (auto& f : m3) gens.push_back(Poly<QField>::from_form(f));
  CHECK(dimension_of(Q, gens, 3).codim == 2);
}

TEST_CASE("surjectivity probe over small fields") {
  FpField F5(5);
  auto x1 = parse_form(F5, "x1", 2);
  auto pr = surjectivity_probe(F5, {x1}, {F5.from_int(3)});
  REQUIRE(pr.status == ProbeStatus::found);
  CHECK(F5.eq(evaluate(F5, x1, pr.witness), F5.from_int(3)));

  // {x1*x2, x3*x4} over F_5 with targets (1,2): found by exhaustive search
  auto f1 = parse_form(F5, "x1*x2", 4);
  auto f2 = parse_form(F5, "x3*x4", 4);
  auto pr2 = surjectivity_probe(F5, {f1, f2}, {F5.one(), F5.from_int(2)});
  REQUIRE(pr2.status == ProbeStatus::found);
  CHECK(F5.eq(evaluate(F5, f1, pr2.witness), F5.one()));
  CHECK(F5.eq(evaluate(F5, f2, pr2.witness), F5.from_int(2)));

  // budget exhaustion is inconclusive, not absence
  auto pr3 = surjectivity_probe(F5, {f1, f2}, {F5.one(), F5.from_int(2)}, 3);
  CHECK(pr3.status == ProbeStatus::inconclusive);

  // genuinely absent: x1^2 = 2 has no solution mod 5 (2 is a nonresidue)
  auto sq = parse_form(F5, "x1^2", 1);
  CHECK(surjectivity_probe(F5, {sq}, {F5.from_int(2)}).status == ProbeStatus::absent);
}

TEST_CASE("budget exhaustion is reported distinctly") {
  // cyclic-3 with a tiny budget cannot finish
  std::vector<Poly<QField>> gens{parse_poly(Q, "x1 + x2 + x3", 3),
                                 parse_poly(Q, "x1*x2 + x2*x3 + x3*x1", 3),
                                 parse_poly(Q, "x1*x2*x3 - 1", 3)};
  auto gb = groebner(Q, gens, 1);
  CHECK(gb.status == GbStatus::budget_exhausted);
  CHECK_THROWS_AS(dimension_of(Q, gens, 3, 1), BudgetExhausted);
}
