#include <doctest.h>

#include "towerlab/io.hpp"
#include "towerlab/prank.hpp"
#include "towerlab/regularize.hpp"
#include "towerlab/rng.hpp"

using namespace towerlab;

static QField Q;

template <class F>
static MultilinearForm<F> mlf(const F& field, std::vector<int> support,
                              std::vector<std::pair<std::vector<std::uint16_t>, long>> entries) {
  std::vector<typename MultilinearForm<F>::Entry> es;
  for (auto& [idx, c] : entries) es.emplace_back(idx, field.from_int(c));
  return MultilinearForm<F>::from_entries(field, std::move(support), std::move(es));
}

TEST_CASE("partition rank worked examples") {
  FpField F2(2);
  BlockSpace space{{2, 2, 2}};

  // x1 y1 z1 is already a product
  auto prod = mlf(F2, {1, 2, 3}, {{{0, 0, 0}, 1}});
  auto r1 = partition_rank(F2, space, prod);
  CHECK(r1.bound.exact());
  CHECK(r1.bound.lower.value == 1);
  CHECK(r1.verify(F2, prod));

  // diagonal rank-2 trilinear form has partition rank 2 (slice collection too)
  auto diag = mlf(F2, {1, 2, 3}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}});
  auto r2 = partition_rank(F2, space, diag);
  CHECK(r2.bound.exact());
  CHECK(r2.bound.lower.value == 2);
  auto r2s = partition_rank(F2, space, diag, SubsetCollection::slice_rank(3));
  CHECK(r2s.bound.exact());
  CHECK(r2s.bound.lower.value == 2);

  // the zero form
  auto zero = MultilinearForm<FpField>{{1, 2, 3}, {}};
  CHECK(partition_rank(F2, space, zero).bound.lower.value == 0);
}

TEST_CASE("relative partition rank drops with a modulus") {
  FpField F2(2);
  BlockSpace space{{2, 2, 2}};
  auto diag = mlf(F2, {1, 2, 3}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}});
  // mod the bilinear form x1 y1 on blocks {1,2}, the first summand dies:
  // x1y1z1 = (x1y1) * z1 is in the ideal
  auto g = mlf(F2, {1, 2}, {{{0, 0}, 1}});
  auto rel = partition_rank(F2, space, diag, std::nullopt, {g});
  CHECK(rel.bound.exact());
  CHECK(rel.bound.lower.value == 1);
  CHECK(rel.verify(F2, diag));
  CHECK(!rel.ideal_witness.is_zero());
}

// independent slice-rank oracle: the slice rank equals the least total
// dimension of functional subspaces (U_b)_b with F in sum_b U_b x (rest).
// Enumerate every triple of projective-functional subsets per block, take the
// span dimensions, and test membership directly.
template <class F>
static int slice_rank_oracle(const F& field, const BlockSpace& space,
                             const MultilinearForm<F>& f) {
  if (f.is_zero()) return 0;
  const auto& supp = f.support;
  auto index_space = tensor_index_space(space, supp);
  auto target = tensor_to_vector(field, f, index_space);
  std::vector<std::vector<std::vector<typename F::Elem>>> pts_per_block;
  for (int b : supp) pts_per_block.push_back(projective_points(field, space.dim(b), 100000));
  int best = 1000;
  std::vector<std::uint32_t> masks(supp.size(), 0);
  auto rec = [&](auto&& self, size_t blk) -> void {
    if (blk == supp.size()) {
      // rows: for each chosen functional ell on block b, ell x unit tensors
      Echelon<F> ech(field, static_cast<int>(index_space.size()));
      int total_dim = 0;
      for (size_t k = 0; k < supp.size(); ++k) {
        Echelon<F> span_b(field, space.dim(supp[k]));
        std::vector<int> rest;
        for (int b2 : supp)
          if (b2 != supp[k]) rest.push_back(b2);
        for (std::uint32_t bit = 0; bit < pts_per_block[k].size(); ++bit) {
          if (!(masks[k] >> bit & 1)) continue;
          if (!span_b.insert(pts_per_block[k][bit])) continue; // dependent functional
          ++total_dim;
          MultilinearForm<F> ell;
          ell.support = {supp[k]};
          for (int j = 0; j < space.dim(supp[k]); ++j)
            if (!field.is_zero(pts_per_block[k][bit][j]))
              ell.tensor.emplace_back(std::vector<std::uint16_t>{static_cast<std::uint16_t>(j)},
                                      pts_per_block[k][bit][j]);
          for (const auto& uidx : tensor_index_space(space, rest)) {
            MultilinearForm<F> unit;
            unit.support = rest;
            unit.tensor.emplace_back(uidx, field.one());
            ech.insert(tensor_to_vector(field, disjoint_product(field, ell, unit), index_space));
          }
        }
      }
      if (total_dim < best && ech.contains(target)) best = total_dim;
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << pts_per_block[blk].size()); ++mask) {
      masks[blk] = mask;
      self(self, blk + 1);
    }
  };
  rec(rec, 0);
  return best;
}

TEST_CASE("slice-rank collection matches an independent recursive oracle") {
  FpField F2(2);
  BlockSpace space{{2, 2, 2}};
  Rng rng(9001);
  auto idxs = tensor_index_space(space, {1, 2, 3});
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultilinearForm<FpField>::Entry> es;
    for (const auto& idx : idxs)
      if (rng.next_below(2)) es.emplace_back(idx, F2.one());
    auto f = MultilinearForm<FpField>::from_entries(F2, {1, 2, 3}, std::move(es));
    auto viaI = partition_rank(F2, space, f, SubsetCollection::slice_rank(3));
    REQUIRE(viaI.bound.exact());
    int oracle = slice_rank_oracle(F2, space, f);
    CHECK(viaI.bound.lower.value == oracle);
    ++compared;
  }
  CHECK(compared == 25);
}

TEST_CASE("geometric rank worked examples") {
  FpField F5(5);
  // bilinear x^T M y with M of rank r has geometric rank r
  BlockSpace space2{{3, 3}};
  auto rank2 = mlf(F5, {1, 2}, {{{0, 0}, 1}, {{1, 1}, 1}});
  auto g1 = geometric_rank(F5, space2, rank2);
  CHECK(g1.exact());
  CHECK(g1.lower.value == 2);

  BlockSpace space3{{2, 2, 2}};
  auto prod = mlf(F5, {1, 2, 3}, {{{0, 0, 0}, 1}});
  auto g2 = geometric_rank(F5, space3, prod);
  CHECK(g2.exact());
  CHECK(g2.lower.value == 1);

  auto zero = MultilinearForm<FpField>{{1, 2, 3}, {}};
  CHECK(geometric_rank(F5, space3, zero).lower.value == 0);
}

TEST_CASE("rk-sing: geometric rank bounded by the partition rank upper bound") {
  FpField F2(2);
  BlockSpace space{{2, 2, 2}};
  Rng rng(6174);
  auto idxs = tensor_index_space(space, {1, 2, 3});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultilinearForm<FpField>::Entry> es;
    for (const auto& idx : idxs)
      if (rng.next_below(2)) es.emplace_back(idx, F2.one());
    auto f = MultilinearForm<FpField>::from_entries(F2, {1, 2, 3}, std::move(es));
    auto pr = partition_rank(F2, space, f);
    auto gr = geometric_rank(F2, space, f);
    REQUIRE(!pr.bound.upper.infinite);
    CHECK(gr.lower.leq(pr.bound.upper));
  }
}

TEST_CASE("polarized tower shapes and ordering") {
  // single linear form, polarized into d = 2 blocks: supports {1} then {2}
  auto T1 = Tower<QField>::from_forms(Q, 1, {parse_form(Q, "x1", 1)});
  auto M1 = polarized_tower(Q, T1, 2);
  REQUIRE(M1.layers.size() == 2);
  CHECK(M1.layers[0].support == std::vector<int>{1});
  CHECK(M1.layers[1].support == std::vector<int>{2});
  CHECK(M1.layers[0].level == M1.layers[1].level);
  // the sibling-inclusive prefix: each of the two layers sees the other
  CHECK(M1.prefix_forms(0).size() == 1);
  CHECK(M1.prefix_forms(1).size() == 1);

  // degree-2 layer {x1x2}: one layer with the symmetric bilinear tensor
  auto T2 = Tower<QField>::from_forms(Q, 2, {parse_form(Q, "x1*x2", 2)});
  auto M2 = polarized_tower(Q, T2);
  REQUIRE(M2.layers.size() == 1);
  CHECK(M2.layers[0].support == std::vector<int>{1, 2});
  REQUIRE(M2.layers[0].forms.size() == 1);
  CHECK(M2.layers[0].forms[0].tensor.size() == 2);

  // empty tower
  Tower<QField> empty(2);
  CHECK(polarized_tower(Q, empty, 1).layers.empty());
}

TEST_CASE("fixing coordinates") {
  FpField F5(5);
  BlockSpace space{{3, 3}};
  // bilinear sum x_i y_i; fixing block 2 at e_1 leaves the linear form x_1
  MultilinearTower<FpField> T;
  T.space = space;
  MLLayer<FpField> layer;
  layer.level = 1;
  layer.support = {1, 2};
  layer.forms.push_back(mlf(F5, {1, 2}, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}));
  T.layers.push_back(layer);

  auto fixed = fix_coordinates(F5, T, {2}, {{2, {F5.one(), F5.zero(), F5.zero()}}});
  REQUIRE(fixed.tower.layers.size() == 1);
  REQUIRE(fixed.tower.layers[0].forms.size() == 1);
  const auto& lin = fixed.tower.layers[0].forms[0];
  CHECK(lin.support == std::vector<int>{1});
  REQUIRE(lin.tensor.size() == 1);
  CHECK(lin.tensor[0].first == std::vector<std::uint16_t>{0});

  // a form zeroed by the fixing keeps its support and its slot
  BlockSpace space3{{1, 1, 1}};
  MultilinearTower<FpField> T3;
  T3.space = space3;
  MLLayer<FpField> l3;
  l3.level = 1;
  l3.support = {1, 2, 3};
  l3.forms.push_back(mlf(F5, {1, 2, 3}, {{{0, 0, 0}, 1}}));
  T3.layers.push_back(l3);
  auto fixed3 = fix_coordinates(F5, T3, {3}, {{3, {F5.zero()}}});
  REQUIRE(fixed3.tower.layers.size() == 1);
  REQUIRE(fixed3.tower.layers[0].forms.size() == 1);
  CHECK(fixed3.tower.layers[0].forms[0].is_zero());
  CHECK(fixed3.tower.layers[0].forms[0].support == std::vector<int>{1, 2});

  // F(x,y) = x1 y2 + x2 y1 at y = (1,1) gives x1 + x2
  BlockSpace space22{{2, 2}};
  MultilinearTower<FpField> T22;
  T22.space = space22;
  MLLayer<FpField> l22;
  l22.level = 1;
  l22.support = {1, 2};
  l22.forms.push_back(mlf(F5, {1, 2}, {{{0, 1}, 1}, {{1, 0}, 1}}));
  T22.layers.push_back(l22);
  auto fixed22 = fix_coordinates(F5, T22, {2}, {{2, {F5.one(), F5.one()}}});
  const auto& s = fixed22.tower.layers[0].forms[0];
  REQUIRE(s.tensor.size() == 2);
}

TEST_CASE("external and internal cloning") {
  FpField F2(2);
  BlockSpace space{{1, 1}};
  MultilinearTower<FpField> T;
  T.space = space;
  MLLayer<FpField> layer;
  layer.level = 1;
  layer.support = {1, 2};
  layer.forms.push_back(mlf(F2, {1, 2}, {{{0, 0}, 1}})); // x1 y1
  T.layers.push_back(layer);

  auto ext = clone_external(T, {2}, 2);
  CHECK(ext.tower.space.blocks() == 3);
  REQUIRE(ext.tower.layers.size() == 2);
  CHECK(ext.tower.layers[0].support == std::vector<int>{1, 2});
  CHECK(ext.tower.layers[1].support == std::vector<int>{1, 3});
  CHECK(ext.relabel[1].at(2) == 3);

  auto internal = clone_internal(T, {2}, 2);
  CHECK(internal.space.blocks() == 2);
  CHECK(internal.space.dim(2) == 2);
  REQUIRE(internal.layers.size() == 1);
  REQUIRE(internal.layers[0].forms.size() == 2);
  CHECK(internal.layers[0].forms[0].tensor[0].first == std::vector<std::uint16_t>{0, 0});
  CHECK(internal.layers[0].forms[1].tensor[0].first == std::vector<std::uint16_t>{0, 1});

  // m = 1 leaves everything untouched (up to identical relabeling)
  auto same = clone_external(T, {2}, 1);
  CHECK(same.tower.layers.size() == 1);
  CHECK(same.tower.layers[0].forms[0].equals(F2, T.layers[0].forms[0]));

  // a subset disjoint from every support changes nothing
  MultilinearTower<FpField> T3 = T;
  T3.space.dims.push_back(1);
  auto untouched = clone_external(T3, {3}, 2);
  CHECK(untouched.tower.layers.size() == 1);
}

TEST_CASE("fix after external+internal cloning reproduces T plus T(y)") {
  // externally double the I coordinates, then fixing the clone copy at y
  // gives the union of the original tower and the fixed tower
  FpField F3(3);
  BlockSpace space{{2, 2}};
  MultilinearTower<FpField> T;
  T.space = space;
  MLLayer<FpField> layer;
  layer.level = 1;
  layer.support = {1, 2};
  layer.forms.push_back(mlf(F3, {1, 2}, {{{0, 0}, 1}, {{1, 1}, 2}}));
  T.layers.push_back(layer);

  auto doubled = clone_external(T, {2}, 2); // forms F(x, y), F(x, y')
  std::vector<FpField::Elem> y{F3.one(), F3.from_int(2)};
  // fix the second copy (block 3) at y
  auto fixed = fix_coordinates(F3, doubled.tower, {3}, {{3, y}});
  REQUIRE(fixed.tower.layers.size() == 2);
  // layer 1: the original bilinear form, untouched
  CHECK(fixed.tower.layers[0].forms[0].equals(F3, T.layers[0].forms[0]));
  // layer 2: the linear form F(., y)
  auto expect = contract(F3, T.layers[0].forms[0], 2, y);
  CHECK(fixed.tower.layers[1].forms[0].equals(F3, expect));
}

TEST_CASE("collection partial order: the full diagram over d = 3") {
  auto C = [](std::vector<std::set<int>> sets) { return SubsetCollection::make(3, std::move(sets)); };
  auto A = C({{1}, {1, 2}, {1, 3}});
  auto B = C({{1, 2}, {1, 3}});
  auto C1 = C({{1}, {1, 2}});
  auto C2 = C({{1}, {1, 3}});
  auto D1 = C({{1, 2}});
  auto D2 = C({{1, 3}});
  auto E = C({{1}});

  CHECK(collection_compare(E, C({{1, 2}})) == CollectionOrder::less);
  CHECK(collection_compare(B, A) == CollectionOrder::less);
  CHECK(collection_compare(C1, B) == CollectionOrder::less);
  CHECK(collection_compare(D1, D2) == CollectionOrder::incomparable);
  CHECK(collection_compare(C1, C2) == CollectionOrder::incomparable);
  CHECK(collection_compare(A, A) == CollectionOrder::equal);
  CHECK(collection_compare(A, B) == CollectionOrder::greater);
  CHECK(collection_compare(C1, D1) == CollectionOrder::greater);

  // partial-order axioms plus the cover-edge set of the diagram
  std::vector<SubsetCollection> all{A, B, C1, C2, D1, D2, E};
  for (const auto& x : all) CHECK(collection_compare(x, x) == CollectionOrder::equal);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      auto ij = collection_compare(all[i], all[j]);
      auto ji = collection_compare(all[j], all[i]);
      if (ij == CollectionOrder::less) CHECK(ji == CollectionOrder::greater);
      if (ij == CollectionOrder::equal) CHECK(i == j);
      // transitivity
      for (size_t k = 0; k < all.size(); ++k) {
        auto jk = collection_compare(all[j], all[k]);
        if (ij == CollectionOrder::less && jk == CollectionOrder::less)
          CHECK(collection_compare(all[i], all[k]) == CollectionOrder::less);
      }
    }
  // cover relations: exactly the seven edges of the diagram
  auto strictly_less = [&](const SubsetCollection& x, const SubsetCollection& y) {
    return collection_compare(x, y) == CollectionOrder::less;
  };
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (!strictly_less(all[i], all[j])) continue;
      bool has_mid = false;
      for (size_t k = 0; k < all.size(); ++k)
        if (strictly_less(all[i], all[k]) && strictly_less(all[k], all[j])) has_mid = true;
      if (!has_mid) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  // indices: A=0 B=1 C1=2 C2=3 D1=4 D2=5 E=6
  std::vector<std::pair<int, int>> expected{{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {6, 5}};
  std::sort(covers.begin(), covers.end());
  std::sort(expected.begin(), expected.end());
  CHECK(covers == expected);
}

TEST_CASE("multilinear tower audit with cloning preserves per-layer rank") {
  FpField F2(2);
  BlockSpace space{{2, 2}};
  MultilinearTower<FpField> T;
  T.space = space;
  MLLayer<FpField> layer;
  layer.level = 1;
  layer.support = {1, 2};
  layer.forms.push_back(mlf(F2, {1, 2}, {{{0, 0}, 1}, {{1, 1}, 1}}));
  T.layers.push_back(layer);

  auto base_audit = ml_audit_strength(F2, T, StrongnessParams(mpq_class(1), 1, 0));
  REQUIRE(base_audit.layers.size() == 1);
  CHECK(base_audit.layers[0].bound.lower.value == 2);
  CHECK(base_audit.overall == Verdict::pass);

  // per-layer preservation: every clone layer keeps rank >= the original's
  auto ext = clone_external(T, {2}, 2);
  for (int i = 0; i < static_cast<int>(ext.tower.layers.size()); ++i) {
    auto res = collective_partition_rank(F2, ext.tower.space, ext.tower.layers[i].forms,
                                         ext.tower.prefix_forms(i));
    REQUIRE(res.bound.exact());
    CHECK(res.bound.lower.value >= 2);
  }
  auto internal = clone_internal(T, {2}, 2);
  for (int i = 0; i < static_cast<int>(internal.layers.size()); ++i) {
    auto res = collective_partition_rank(F2, internal.space, internal.layers[i].forms,
                                         internal.prefix_forms(i));
    REQUIRE(res.bound.exact());
    CHECK(res.bound.lower.value >= 2);
  }
}
