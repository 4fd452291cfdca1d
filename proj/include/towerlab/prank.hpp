#pragma once

#include <optional>
#include <set>
#include <vector>

#include "towerlab/multilinear.hpp"
#include "towerlab/rank.hpp"

namespace towerlab {

/// One rank-one summand of a partition decomposition: value G(x_I) * H(x_{supp \ I}).
template <class F>
struct PartitionPiece {
  std::vector<int> I;
  MultilinearForm<F> G, H;
};

template <class F>
struct PrankResult {
  RankBound bound;
  std::vector<PartitionPiece<F>> pieces;
  MultilinearForm<F> ideal_witness;

  bool verify(const F& field, const MultilinearForm<F>& target) const {
    MultilinearForm<F> acc{target.support, {}};
    for (const auto& p : pieces) acc = add(field, acc, disjoint_product(field, p.G, p.H));
    if (!ideal_witness.is_zero()) acc = add(field, acc, ideal_witness);
    return acc.equals(field, target);
  }
};

/// Relative partition rank (or I-rank when a collection is supplied) of a
/// multilinear form over a finite field, by exhaustive search.
///
/// Pieces are G(x_I) * H(x_complement) with I from the collection; the G side
/// is enumerated projectively per admissible I and the H side plus the ideal
/// witness are recovered linearly. The modulus contributes its multilinear
/// multiples supported exactly on supp(F).
template <class F>
PrankResult<F> partition_rank(const F& field, const BlockSpace& space,
                              const MultilinearForm<F>& target,
                              std::optional<SubsetCollection> collection = std::nullopt,
                              const std::vector<MultilinearForm<F>>& modulus = {},
                              const SearchBudget& budget = {}) {
  static_assert(F::is_finite, "partition rank search enumerates a finite field");
  PrankResult<F> out;
  out.ideal_witness.support = target.support;
  const auto& supp = target.support;

  MlIdealPiece<F> piece(field, space, supp, modulus);
  auto index_space = tensor_index_space(space, supp);
  auto f_vec = tensor_to_vector(field, target, index_space);
  if (target.is_zero() || piece.echelon().contains(f_vec)) {
    out.bound = RankBound::exactly(ExtInt::of(0), target.is_zero() ? "zero form" : "in the ideal");
    if (!target.is_zero()) out.ideal_witness = target;
    return out;
  }

  // admissible partition sets: proper nonempty subsets of the support
  // containing its least block; a supplied collection is filtered to those
  std::vector<std::vector<int>> parts;
  if (collection) {
    for (const auto& s : collection->sets) {
      std::vector<int> I(s.begin(), s.end());
      bool inside = std::includes(supp.begin(), supp.end(), I.begin(), I.end());
      if (inside && !I.empty() && I.size() < supp.size() && I[0] == supp.front())
        parts.push_back(std::move(I));
      else
        out.bound.note("collection set skipped (not a proper subset of the support)");
    }
  } else {
    const int k = static_cast<int>(supp.size());
    for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<int> I{supp.front()};
      for (int v = 1; v < k; ++v)
        if (mask >> (v - 1) & 1) I.push_back(supp[v]);
      if (static_cast<int>(I.size()) < k) parts.push_back(std::move(I));
    }
    std::sort(parts.begin(), parts.end());
  }

  if (parts.empty()) {
    out.bound = RankBound::exactly(ExtInt::inf(), "no admissible partition sets");
    return out;
  }

  struct Candidate {
    std::vector<int> I, rest;
    MultilinearForm<F> G;
    std::vector<std::vector<typename F::Elem>> rows; // G x unit tensors on rest
  };
  std::vector<Candidate> candidates;
  bool complete = true;
  for (const auto& I : parts) {
    std::vector<int> rest;
    std::set_difference(supp.begin(), supp.end(), I.begin(), I.end(), std::back_inserter(rest));
    auto g_space = tensor_index_space(space, I);
    std::vector<std::vector<typename F::Elem>> pts;
    try {
      pts = projective_points(field, static_cast<int>(g_space.size()), budget.max_candidates);
    } catch (const BudgetExhausted&) {
      complete = false;
      continue;
    }
    for (auto& coeffs : pts) {
      Candidate c;
      c.I = I;
      c.rest = rest;
      for (size_t gi = 0; gi < g_space.size(); ++gi)
        if (!field.is_zero(coeffs[gi])) c.G.tensor.emplace_back(g_space[gi], coeffs[gi]);
      c.G.support = I;
      for (const auto& uidx : tensor_index_space(space, rest)) {
        MultilinearForm<F> unit;
        unit.support = rest;
        unit.tensor.emplace_back(uidx, field.one());
        c.rows.push_back(tensor_to_vector(field, disjoint_product(field, c.G, unit), index_space));
      }
      candidates.push_back(std::move(c));
    }
  }

  SpanSearch<F> search(field, piece.echelon(), f_vec, static_cast<int>(candidates.size()),
                       [&](int i) -> const std::vector<std::vector<typename F::Elem>>& {
                         return candidates[i].rows;
                       });

  long nodes_left = budget.nodes;
  int levels_exhausted = 0;
  std::optional<std::vector<int>> hit;
  for (int r = 1; r <= budget.max_r; ++r) {
    hit = search.find(r, nodes_left);
    if (hit) break;
    if (search.budget_hit()) {
      out.bound.note("search budget hit at r=" + std::to_string(r));
      break;
    }
    if (complete)
      levels_exhausted = r;
    else
      out.bound.note("candidate space truncated at level " + std::to_string(r));
  }
  out.bound.lower = ExtInt::of(complete ? levels_exhausted + 1 : 1);

  if (hit) {
    const int r = static_cast<int>(hit->size());
    std::vector<std::vector<typename F::Elem>> cols;
    struct ColInfo { int slot; std::vector<std::uint16_t> uidx; int mult_index; };
    std::vector<ColInfo> info;
    for (int k = 0; k < r; ++k) {
      const Candidate& c = candidates[(*hit)[k]];
      auto units = tensor_index_space(space, c.rest);
      for (size_t ui = 0; ui < units.size(); ++ui) {
        cols.push_back(c.rows[ui]);
        info.push_back({k, units[ui], -1});
      }
    }
    for (size_t pi = 0; pi < piece.multiples().size(); ++pi) {
      cols.push_back(tensor_to_vector(field, piece.multiples()[pi], index_space));
      info.push_back({-1, {}, static_cast<int>(pi)});
    }
    auto sol = solve_columns(field, cols, f_vec);
    if (!sol) throw DomainError("internal: partition span hit but solve failed");
    std::vector<MultilinearForm<F>> hs(r);
    for (int k = 0; k < r; ++k) hs[k].support = candidates[(*hit)[k]].rest;
    out.ideal_witness = MultilinearForm<F>{supp, {}};
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      if (field.is_zero((*sol)[ci])) continue;
      if (info[ci].slot >= 0) {
        MultilinearForm<F> unit;
        unit.support = candidates[(*hit)[info[ci].slot]].rest;
        unit.tensor.emplace_back(info[ci].uidx, (*sol)[ci]);
        hs[info[ci].slot] = add(field, hs[info[ci].slot], unit);
      } else {
        out.ideal_witness = add(field, out.ideal_witness,
                                scale(field, piece.multiples()[info[ci].mult_index], (*sol)[ci]));
      }
    }
    for (int k = 0; k < r; ++k) {
      if (hs[k].is_zero()) continue;
      out.pieces.push_back(PartitionPiece<F>{candidates[(*hit)[k]].I, candidates[(*hit)[k]].G, hs[k]});
    }
    if (!out.verify(field, target)) throw DomainError("internal: partition certificate failed");
    out.bound.upper = ExtInt::of(static_cast<long>(out.pieces.size()));
    out.bound.note("exhaustive search over " + field.name());
    if (out.bound.upper.value < out.bound.lower.value) out.bound.lower = out.bound.upper;
    return out;
  }

  // fallback upper: expand over the cheapest admissible partition set
  const std::vector<int>* best_I = nullptr;
  size_t best_dim = SIZE_MAX;
  for (const auto& I : parts) {
    size_t dim = tensor_index_space(space, I).size();
    if (dim < best_dim) { best_dim = dim; best_I = &I; }
  }
  std::vector<int> rest;
  std::set_difference(supp.begin(), supp.end(), best_I->begin(), best_I->end(),
                      std::back_inserter(rest));
  for (const auto& gidx : tensor_index_space(space, *best_I)) {
    // slice of the target at x_I = unit tensor gidx
    MultilinearForm<F> H;
    H.support = rest;
    for (const auto& [idx, c] : target.tensor) {
      std::vector<std::uint16_t> gpart, hpart;
      for (size_t k = 0; k < supp.size(); ++k) {
        if (std::binary_search(best_I->begin(), best_I->end(), supp[k]))
          gpart.push_back(idx[k]);
        else
          hpart.push_back(idx[k]);
      }
      if (gpart == gidx) H.tensor.emplace_back(hpart, c);
    }
    if (H.tensor.empty()) continue;
    std::sort(H.tensor.begin(), H.tensor.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    MultilinearForm<F> G;
    G.support = *best_I;
    G.tensor.emplace_back(gidx, field.one());
    out.pieces.push_back(PartitionPiece<F>{*best_I, G, H});
  }
  out.ideal_witness = MultilinearForm<F>{supp, {}};
  if (!out.verify(field, target)) throw DomainError("internal: expansion certificate failed");
  out.bound.upper = ExtInt::of(static_cast<long>(out.pieces.size()));
  out.bound.note("basis-expansion upper bound");
  if (out.bound.upper.value < out.bound.lower.value) out.bound.lower = out.bound.upper;
  return out;
}

/// Collective relative partition rank of a layer: min over nontrivial linear
/// combinations (exhaustive over the projective tuple space).
template <class F>
struct MlCollectiveResult {
  RankBound bound;
  std::vector<typename F::Elem> witness_combo;
};

template <class F>
MlCollectiveResult<F> collective_partition_rank(const F& field, const BlockSpace& space,
                                                const std::vector<MultilinearForm<F>>& forms,
                                                const std::vector<MultilinearForm<F>>& modulus,
                                                const SearchBudget& budget = {}) {
  MlCollectiveResult<F> out;
  if (forms.empty()) {
    out.bound = RankBound::exactly(ExtInt::inf(), "empty layer (vacuous)");
    return out;
  }
  auto combos = projective_points(field, static_cast<int>(forms.size()), 1000000);
  ExtInt best_lower = ExtInt::inf(), best_upper = ExtInt::inf();
  bool first = true;
  for (const auto& a : combos) {
    MultilinearForm<F> combo{forms[0].support, {}};
    for (size_t j = 0; j < forms.size(); ++j)
      combo = add(field, combo, scale(field, forms[j], a[j]));
    auto res = partition_rank(field, space, combo, std::nullopt, modulus, budget);
    if (first || !best_lower.leq(res.bound.lower)) best_lower = res.bound.lower;
    if (first || (res.bound.upper.leq(best_upper) && !best_upper.leq(res.bound.upper))) {
      best_upper = res.bound.upper;
      out.witness_combo = a;
    }
    first = false;
  }
  out.bound.lower = best_lower;
  out.bound.upper = best_upper;
  out.bound.note("exhaustive over projective combos, " + field.name());
  return out;
}

/// Relative geometric rank: for each admissible distinguished block i0, the
/// codimension inside Z(modulus-without-i0) of the locus where the i0-slices
/// of F and of the modulus forms involving i0 become linearly dependent.
/// Reports the minimum over i0 (or the requested block only).
template <class F>
RankBound geometric_rank(const F& field, const BlockSpace& space, const MultilinearForm<F>& target,
                         const std::vector<MultilinearForm<F>>& modulus = {},
                         int i0_choice = -1, long gb_budget = 200000) {
  if (target.is_zero()) return RankBound::exactly(ExtInt::of(0), "zero form");
  RankBound best;
  bool first = true;
  for (int i0 : target.support) {
    if (i0_choice > 0 && i0 != i0_choice) continue;
    // relevant blocks: everything the forms mention except i0
    std::set<int> blocks;
    for (int b : target.support)
      if (b != i0) blocks.insert(b);
    for (const auto& g : modulus)
      for (int b : g.support)
        if (b != i0) blocks.insert(b);
    std::vector<int> blist(blocks.begin(), blocks.end());
    int nv = 0;
    std::map<int, int> offset;
    for (int b : blist) {
      offset[b] = nv;
      nv += space.dim(b);
    }
    auto flatten_local = [&](const MultilinearForm<F>& f) {
      std::vector<typename Poly<F>::Term> ts;
      for (const auto& [idx, c] : f.tensor) {
        Expo m(nv);
        for (size_t k = 0; k < f.support.size(); ++k) m.e[offset.at(f.support[k]) + idx[k]] += 1;
        ts.emplace_back(m, c);
      }
      return Poly<F>::normalize(field, nv, std::move(ts));
    };

    std::vector<Poly<F>> z_gens;
    std::vector<const MultilinearForm<F>*> functional_rows;
    functional_rows.push_back(&target);
    for (const auto& g : modulus) {
      if (std::find(g.support.begin(), g.support.end(), i0) != g.support.end())
        functional_rows.push_back(&g);
      else if (!g.is_zero())
        z_gens.push_back(flatten_local(g));
    }

    const int k = space.dim(i0);
    const int t = static_cast<int>(functional_rows.size());
    RankBound cand;
    if (t > k) {
      cand = RankBound::exactly(ExtInt::of(0), "more slice functionals than coordinates");
    } else {
      // matrix of polynomials: row per functional, column per V_{i0} coordinate
      std::vector<std::vector<Poly<F>>> mat(t, std::vector<Poly<F>>(k));
      for (int rI = 0; rI < t; ++rI)
        for (int cI = 0; cI < k; ++cI) {
          std::vector<typename F::Elem> unit(k, field.zero());
          unit[cI] = field.one();
          mat[rI][cI] = flatten_local(contract(field, *functional_rows[rI], i0, unit));
        }
      // all t x t minors
      std::vector<Poly<F>> locus = z_gens;
      std::vector<int> colsel(t);
      auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == t) {
          std::vector<int> perm(t);
          for (int i = 0; i < t; ++i) perm[i] = i;
          Poly<F> det(nv);
          do {
            int inv = 0;
            for (int a = 0; a < t; ++a)
              for (int b = a + 1; b < t; ++b)
                if (perm[a] > perm[b]) ++inv;
            Poly<F> prod = mat[0][colsel[perm[0]]];
            for (int i = 1; i < t; ++i) prod = mul(field, prod, mat[i][colsel[perm[i]]]);
            if (inv % 2) prod = scale(field, prod, field.neg(field.one()));
            det = add(field, det, prod);
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (!det.is_zero()) locus.push_back(det);
          return;
        }
        for (int c = start; c <= k - (t - chosen); ++c) {
          colsel[chosen] = c;
          self(self, c + 1, chosen + 1);
        }
      };
      rec(rec, 0, 0);

      auto dz = dimension_of(field, z_gens, nv, gb_budget);
      auto dl = dimension_of(field, locus, nv, gb_budget);
      if (dl.dim < 0) {
        cand = RankBound::exactly(ExtInt::inf(), "dependence locus empty (i0=" + std::to_string(i0) + ")");
      } else {
        cand = RankBound::exactly(ExtInt::of(dz.dim - dl.dim),
                                  "codim via groebner (i0=" + std::to_string(i0) + ")");
      }
    }
    if (first || !best.lower.leq(cand.lower)) best = cand;
    first = false;
  }
  if (first) throw DomainError("no admissible distinguished block");
  return best;
}

enum class Verdict { pass, fail, inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

template <class F>
struct MlAuditLayer {
  int layer_index;
  mpq_class threshold;
  RankBound bound;
  Verdict verdict;
};

template <class F>
struct MlAuditReport {
  std::vector<MlAuditLayer<F>> layers;
  Verdict overall = Verdict::pass;
};

/// Strongness audit of a multilinear tower in the partition-rank sense:
/// layer i passes when its collective relative partition rank exceeds
/// A(s_i+...+s_h+r)^B.
template <class F>
MlAuditReport<F> ml_audit_strength(const F& field, const MultilinearTower<F>& T,
                                   const StrongnessParams& params, const SearchBudget& budget = {}) {
  MlAuditReport<F> report;
  for (int i = 0; i < static_cast<int>(T.layers.size()); ++i) {
    MlAuditLayer<F> row;
    row.layer_index = i;
    row.threshold = params.threshold(T.size_from(i));
    auto res = collective_partition_rank(field, T.space, T.layers[i].forms, T.prefix_forms(i), budget);
    row.bound = res.bound;
    if (row.bound.lower.greater_than(row.threshold))
      row.verdict = Verdict::pass;
    else if (row.bound.upper.leq_threshold(row.threshold))
      row.verdict = Verdict::fail;
    else
      row.verdict = Verdict::inconclusive;
    if (row.verdict == Verdict::fail)
      report.overall = Verdict::fail;
    else if (row.verdict == Verdict::inconclusive && report.overall == Verdict::pass)
      report.overall = Verdict::inconclusive;
    report.layers.push_back(std::move(row));
  }
  return report;
}

} // namespace towerlab
