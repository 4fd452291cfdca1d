#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "towerlab/bounds.hpp"
#include "towerlab/io_tower.hpp"
#include "towerlab/prank.hpp"
#include "towerlab/regularize.hpp"
#include "towerlab/rng.hpp"

namespace towerlab {

// The verify runner executes the invariant suites on seeded random instances.
// Every record is one instance of one property; failures are data, not
// errors. Statuses:
//   pass          the property held exactly
//   fail          the property was violated by exact arithmetic
//   quarantined   instance excluded for a documented characteristic caveat
//   inconclusive  a budget prevented an exact verdict

struct VerifyRecord {
  std::string id;
  std::string status;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<VerifyRecord> records;

  int count(const std::string& status) const {
    int c = 0;
    for (const auto& r : records)
      if (r.status == status) ++c;
    return c;
  }
};

struct VerifyProfile {
  std::uint64_t seed = 1;
  int count = 50;
  long budget_nodes = 200000;
  std::vector<std::string> suites; // empty = all
};

namespace suites {

inline void record(SuiteResult& out, const std::string& id, bool ok, const std::string& detail = "") {
  out.records.push_back({id, ok ? "pass" : "fail", detail});
}

// ---- taylor: reconstruction and multinomial identities over Q -------------

inline SuiteResult taylor(Rng rng, int count) {
  QField Q;
  SuiteResult out{"taylor", {}};
  for (int t = 0; t < count; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    int d = 1 + static_cast<int>(rng.next_below(4));
    int m = 1 + static_cast<int>(rng.next_below(3));
    auto f = random_form(Q, rng, n, d, 4);
    // reconstruction
    std::vector<std::vector<mpq_class>> images(n, std::vector<mpq_class>(n * m, Q.zero()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) images[i][j * n + i] = Q.one();
    Form<QField> direct = substitute_linear(Q, f, n * m, images);
    Form<QField> sum(n * m, d);
    auto comps = taylor_expand(Q, f, m);
    for (const auto& [e, comp] : comps) sum = add(Q, sum, comp.underlying);
    record(out, "taylor.reconstruction", sum.equals(Q, direct),
           "n=" + std::to_string(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m));
    // multinomial identity per component
    bool multi_ok = true;
    for (const auto& [e, comp] : comps) {
      auto diag = diagonal_collapse(Q, comp);
      if (!diag.equals(Q, scale(Q, f, Q.from_fraction(multinomial(d, e.e), 1)))) multi_ok = false;
    }
    record(out, "taylor.multinomial", multi_ok);
  }
  return out;
}

// ---- polarization: diagonal identity, symmetry, strength sandwich ---------

inline SuiteResult polarization(Rng rng, int count, long nodes) {
  QField Q;
  SuiteResult out{"polarization", {}};
  for (int t = 0; t < count; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    int d = 1 + static_cast<int>(rng.next_below(3));
    auto f = random_nonzero_form(Q, rng, n, d, 4);
    auto tilde = polarize(Q, f);
    BlockSpace space{std::vector<int>(d, n)};
    auto flat = flatten(Q, tilde, space);
    std::vector<std::vector<mpq_class>> images(n * d, std::vector<mpq_class>(n, Q.zero()));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i) images[j * n + i][i] = Q.one();
    auto diag = substitute_linear(Q, flat, n, images);
    mpq_class fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    record(out, "polarization.diagonal", diag.equals(Q, scale(Q, f, fact)));
    bool sym = true;
    for (int b1 = 0; b1 < d && sym; ++b1)
      for (int b2 = b1 + 1; b2 < d && sym; ++b2) {
        auto swapped = tilde;
        for (auto& [idx, c] : swapped.tensor) std::swap(idx[b1], idx[b2]);
        std::sort(swapped.tensor.begin(), swapped.tensor.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!tilde.equals(Q, swapped)) sym = false;
      }
    record(out, "polarization.symmetry", sym);
  }
  return out;
}

/// The strength sandwich 2^{-d} str(f~) <= str(f) <= str(f~) on finite-field
/// instances where both exhaustive searches close their brackets.
inline SuiteResult polar_sandwich(Rng rng, int count, long nodes) {
  SuiteResult out{"polar-sandwich", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  for (int t = 0; t < count; ++t) {
    std::uint32_t p = rng.next_below(2) ? 5 : 3;
    FpField P(p);
    int n = 1 + static_cast<int>(rng.next_below(3));
    int d = 2 + static_cast<int>(rng.next_below(2));
    auto f = random_nonzero_form(P, rng, n, d, 4);
    std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
    if (static_cast<long>(p) <= d) {
      out.records.push_back({"polarization.sandwich", "quarantined", tag + " (p <= d)"});
      continue;
    }
    auto tilde = polarize(P, f);
    BlockSpace space{std::vector<int>(d, n)};
    auto flat = flatten(P, tilde, space);
    auto sf = strength_finite(P, f, {}, budget);
    auto st = strength_finite(P, flat, {}, budget);
    if (!sf.bound.exact() || !st.bound.exact()) {
      out.records.push_back({"polarization.sandwich", "inconclusive", tag + " (budget)"});
      continue;
    }
    long str_f = sf.bound.lower.value, str_t = st.bound.lower.value;
    long pow2d = 1;
    for (int k = 0; k < d; ++k) pow2d *= 2;
    bool ok = (str_t <= pow2d * str_f) && (str_f <= str_t);
    record(out, "polarization.sandwich", ok,
           tag + " str(f)=" + std::to_string(str_f) + " str(f~)=" + std::to_string(str_t));
  }
  return out;
}

// ---- quadratic: closed form vs exhaustive search over F_{p^2} -------------

inline SuiteResult quadratic(Rng rng, int count, long nodes) {
  SuiteResult out{"quadratic", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  for (int t = 0; t < count; ++t) {
    std::uint32_t p = rng.next_below(2) ? 5 : 3;
    FpField P(p);
    Fp2Field P2(p);
    int n = 1 + static_cast<int>(rng.next_below(4));
    auto q = random_form(P, rng, n, 2, 5);
    std::vector<Form<Fp2Field>::Term> ts;
    for (const auto& [m, c] : q.terms()) ts.emplace_back(m, P2.from_int(c));
    auto q2 = Form<Fp2Field>::from_terms(P2, n, 2, std::move(ts));
    auto oracle = strength_finite(P2, q2, {}, budget);
    std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
    if (!oracle.bound.exact()) {
      out.records.push_back({"quadratic.oracle", "inconclusive", tag});
      continue;
    }
    long expect = q.is_zero() ? 0 : quadratic_strength(P, q).lower.value;
    record(out, "quadratic.oracle", oracle.bound.lower.value == expect, tag);
  }
  return out;
}

// ---- klp: interval consistency against search upper bounds ----------------

inline SuiteResult klp(Rng rng, int count, long nodes) {
  QField Q;
  SuiteResult out{"klp", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  for (int t = 0; t < count; ++t) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    int d = 2 + static_cast<int>(rng.next_below(2));
    int s = 1 + static_cast<int>(rng.next_below(2));
    std::vector<Form<QField>> forms;
    for (int k = 0; k < s; ++k) forms.push_back(random_nonzero_form(Q, rng, n, d, 4));
    std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " s=" + std::to_string(s);
    RankBound interval;
    try {
      interval = klp_interval(Q, forms);
    } catch (const BudgetExhausted&) {
      out.records.push_back({"klp.interval", "inconclusive", tag + " (groebner budget)"});
      continue;
    }
    if (interval.lower.infinite) {
      record(out, "klp.interval", true, tag + " (independent gradients: infinite)");
      continue;
    }
    // internal consistency and compatibility with the collective upper bracket
    auto search = collective_strength(Q, forms, {}, budget);
    bool ok = interval.lower.leq(interval.upper) && interval.lower.leq(search.bound.upper);
    std::string detail = tag + " interval=[" + interval.lower.str() + "," + interval.upper.str() +
                         "] search-upper=" + search.bound.upper.str();
    if (!interval.certified)
      out.records.push_back({"klp.interval", ok ? "pass" : "inconclusive", detail + " (mod-p dims)"});
    else
      record(out, "klp.interval", ok, detail);
  }
  return out;
}

// ---- rk-sing: geometric rank below the partition rank upper bound ---------

inline SuiteResult rk_sing(Rng rng, int count, long nodes) {
  FpField F2(2);
  SuiteResult out{"rk-sing", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  BlockSpace space{{2, 2, 2}};
  auto idxs = tensor_index_space(space, {1, 2, 3});
  for (int t = 0; t < count; ++t) {
    std::vector<MultilinearForm<FpField>::Entry> es;
    for (const auto& idx : idxs)
      if (rng.next_below(2)) es.emplace_back(idx, F2.one());
    auto f = MultilinearForm<FpField>::from_entries(F2, {1, 2, 3}, std::move(es));
    // random small modulus: 0..2 forms on proper sub-supports
    std::vector<MultilinearForm<FpField>> modulus;
    int mods = static_cast<int>(rng.next_below(3));
    std::vector<std::vector<int>> supports{{1, 2}, {1, 3}, {2, 3}};
    for (int k = 0; k < mods; ++k) {
      auto supp = supports[rng.next_below(supports.size())];
      std::vector<MultilinearForm<FpField>::Entry> ges;
      for (const auto& gidx : tensor_index_space(space, supp))
        if (rng.next_below(2)) ges.emplace_back(gidx, F2.one());
      auto g = MultilinearForm<FpField>::from_entries(F2, supp, std::move(ges));
      if (!g.is_zero()) modulus.push_back(std::move(g));
    }
    auto pr = partition_rank(F2, space, f, std::nullopt, modulus, budget);
    RankBound gr;
    try {
      gr = geometric_rank(F2, space, f, modulus);
    } catch (const BudgetExhausted&) {
      out.records.push_back({"rk-sing.bound", "inconclusive", "groebner budget"});
      continue;
    }
    if (pr.bound.upper.infinite) {
      out.records.push_back({"rk-sing.bound", "inconclusive", "no partition upper bound"});
      continue;
    }
    record(out, "rk-sing.bound", gr.lower.leq(pr.bound.upper),
           "grk=" + gr.lower.str() + " prk-upper=" + pr.bound.upper.str() +
               " mods=" + std::to_string(modulus.size()));
  }
  return out;
}

// ---- regularize: audits, containment, size bound, odd mode, replay --------

inline SuiteResult regularization(Rng rng, int count, long nodes) {
  FpField F3(3);
  SuiteResult out{"regularize", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  budget.max_r = 2;
  std::vector<std::tuple<mpq_class, long, long>> thresholds{{1, 1, 1}, {1, 1, 2}, {2, 1, 1}};
  for (int t = 0; t < count; ++t) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    int s = 1 + static_cast<int>(rng.next_below(3));
    std::vector<Form<FpField>> input;
    for (int k = 0; k < s; ++k)
      input.push_back(random_nonzero_form(F3, rng, n, 1 + static_cast<int>(rng.next_below(3)), 4));
    auto [C, D, r] = thresholds[t % thresholds.size()];
    auto res = regularize(F3, input, C, D, r, false, budget);
    std::string tag = "n=" + std::to_string(n) + " s=" + std::to_string(s);
    record(out, "regularize.audit", res.final_audit.overall != Verdict::fail, tag);
    record(out, "regularize.containment", res.trace.containment_verified, tag);
    record(out, "regularize.size", res.trace.size_within_bound, tag);
    auto [rebuilt, valid] = replay_trace(F3, res.trace);
    bool same = valid && rebuilt.height() == res.tower.height();
    if (same)
      for (int i = 0; i < rebuilt.height(); ++i) {
        if (rebuilt.layers()[i].forms.size() != res.tower.layers()[i].forms.size()) same = false;
        else
          for (size_t j = 0; j < rebuilt.layers()[i].forms.size(); ++j)
            if (!rebuilt.layers()[i].forms[j].equals(F3, res.tower.layers()[i].forms[j])) same = false;
      }
    record(out, "regularize.replay", same, tag);
    // monotone progress in the termination order
    bool progress = true;
    for (const auto& step : res.trace.steps)
      for (const auto& p : step.added)
        if (p.degree() >= step.layer_degree) progress = false;
    record(out, "regularize.progress", progress, tag);
    // odd mode on odd-degree inputs
    std::vector<Form<FpField>> odd_input;
    for (int k = 0; k < s; ++k)
      odd_input.push_back(random_nonzero_form(F3, rng, n, rng.next_below(2) ? 3 : 1, 4));
    auto odd_res = regularize(F3, odd_input, C, D, r, true, budget);
    bool odd_ok = true;
    for (const auto& layer : odd_res.tower.layers())
      if (layer.degree % 2 == 0) odd_ok = false;
    record(out, "regularize.odd", odd_ok && odd_res.trace.containment_verified, tag);
  }
  return out;
}

// ---- clone: rank preservation and sound threshold implications ------------

inline MultilinearTower<FpField> random_f2_tower(const FpField& F2, Rng& rng, int max_layers) {
  MultilinearTower<FpField> T;
  T.space.dims = {1 + static_cast<int>(rng.next_below(2)), 1 + static_cast<int>(rng.next_below(2)),
                  1 + static_cast<int>(rng.next_below(2))};
  int layers = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_layers)));
  std::vector<std::vector<int>> supports{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (int li = 0; li < layers; ++li) {
    MLLayer<FpField> layer;
    layer.level = li + 1;
    layer.support = supports[rng.next_below(supports.size())];
    auto idxs = tensor_index_space(T.space, layer.support);
    std::vector<MultilinearForm<FpField>::Entry> es;
    for (const auto& idx : idxs)
      if (rng.next_below(2)) es.emplace_back(idx, F2.one());
    layer.forms.push_back(MultilinearForm<FpField>::from_entries(F2, layer.support, std::move(es)));
    T.layers.push_back(std::move(layer));
  }
  return T;
}

inline SuiteResult cloning(Rng rng, int count, long nodes) {
  FpField F2(2);
  SuiteResult out{"clone", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  const int m = 2;
  for (int t = 0; t < count; ++t) {
    auto T = random_f2_tower(F2, rng, 2);
    std::set<int> I{static_cast<int>(1 + rng.next_below(3))};
    auto ext = clone_external(T, I, m);
    auto internal = clone_internal(T, I, m);
    std::string tag = "layers=" + std::to_string(T.layers.size()) + " I={" +
                      std::to_string(*I.begin()) + "}";

    // per-layer rank preservation: clone layer rank >= source layer rank
    bool preserved = true, exact_all = true;
    std::vector<RankBound> source_ranks;
    for (int i = 0; i < static_cast<int>(T.layers.size()); ++i) {
      auto res = collective_partition_rank(F2, T.space, T.layers[i].forms, T.prefix_forms(i), budget);
      if (!res.bound.exact()) exact_all = false;
      source_ranks.push_back(res.bound);
    }
    auto check_tower = [&](const MultilinearTower<FpField>& CT,
                           const std::function<int(int)>& source_of) {
      for (int i = 0; i < static_cast<int>(CT.layers.size()); ++i) {
        auto res = collective_partition_rank(F2, CT.space, CT.layers[i].forms, CT.prefix_forms(i),
                                             budget);
        if (!res.bound.exact()) { exact_all = false; continue; }
        const auto& src = source_ranks[source_of(i)];
        if (!src.exact()) continue;
        if (!src.lower.leq(res.bound.lower)) preserved = false;
      }
    };
    // external: layers come in clone-order groups per source layer
    std::vector<int> ext_source;
    for (int i = 0, e = 0; i < static_cast<int>(T.layers.size()); ++i) {
      bool meets = false;
      for (int b : T.layers[i].support)
        if (I.count(b)) meets = true;
      int copies = meets ? m : 1;
      for (int c = 0; c < copies; ++c) ext_source.push_back(i);
      e += copies;
    }
    check_tower(ext.tower, [&](int i) { return ext_source[i]; });
    check_tower(internal, [&](int i) { return i; });
    if (!exact_all)
      out.records.push_back({"clone.preservation", "inconclusive", tag});
    else
      record(out, "clone.preservation", preserved, tag);

    // threshold implications in the sound regime: internal at (A m^B, B, r)
    // => (A, B, r); external checked at thresholds below one where the
    // layer-count inflation cannot flip a verdict
    StrongnessParams small(mpq_class(1, 8), 1, static_cast<long>(rng.next_below(2)));
    auto premise_small = ml_audit_strength(F2, T, small, budget);
    if (premise_small.overall == Verdict::pass) {
      auto concl = ml_audit_strength(F2, ext.tower, small, budget);
      if (concl.overall == Verdict::inconclusive)
        out.records.push_back({"clone.external", "inconclusive", tag});
      else
        record(out, "clone.external", concl.overall == Verdict::pass, tag);
    } else {
      out.records.push_back({"clone.external", premise_small.overall == Verdict::inconclusive
                                                   ? "inconclusive"
                                                   : "pass",
                             tag + " (premise fails: vacuous)"});
    }
    StrongnessParams half(mpq_class(1, 2), 1, 0);
    StrongnessParams doubled(mpq_class(1), 1, 0); // (A*m^B, B, r) with A=1/2, m=2, B=1
    auto premise_int = ml_audit_strength(F2, T, doubled, budget);
    if (premise_int.overall == Verdict::pass) {
      auto concl = ml_audit_strength(F2, internal, half, budget);
      if (concl.overall == Verdict::inconclusive)
        out.records.push_back({"clone.internal", "inconclusive", tag});
      else
        record(out, "clone.internal", concl.overall == Verdict::pass, tag);
    } else {
      out.records.push_back({"clone.internal", premise_int.overall == Verdict::inconclusive
                                                   ? "inconclusive"
                                                   : "pass",
                             tag + " (premise fails: vacuous)"});
    }
  }
  return out;
}

// ---- taylor-strong: the audit transfer to Taylor towers -------------------

inline SuiteResult taylor_strong(Rng rng, int count, long nodes) {
  FpField F5(5);
  SuiteResult out{"taylor-strong", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  for (int t = 0; t < count; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(2));
    int m = 2;
    std::vector<Form<FpField>> forms;
    forms.push_back(random_nonzero_form(F5, rng, n, 1 + static_cast<int>(rng.next_below(2)), 3));
    if (rng.next_below(2)) {
      auto g = random_nonzero_form(F5, rng, n, 2, 3);
      if (g.degree() != forms[0].degree()) forms.push_back(g);
    }
    auto T = Tower<FpField>::from_forms(F5, n, forms);
    int d = 0;
    for (const auto& l : T.layers()) d = std::max(d, l.degree);
    mpq_class A(1, 4);
    long B = 1, r = 1;
    auto needed = taylor_strong_scaling(A, B, m, d);
    auto premise = audit_strength(F5, T, StrongnessParams(needed, B, r), budget);
    std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
    if (premise.overall != Verdict::pass) {
      out.records.push_back({"taylor-strong.transfer",
                             premise.overall == Verdict::inconclusive ? "inconclusive" : "pass",
                             tag + " (premise fails: vacuous)"});
      continue;
    }
    auto Tm = taylor_tower(F5, T, m);
    auto concl = audit_strength(F5, Tm, StrongnessParams(A, B, r), budget);
    if (concl.overall == Verdict::inconclusive)
      out.records.push_back({"taylor-strong.transfer", "inconclusive", tag});
    else
      record(out, "taylor-strong.transfer", concl.overall == Verdict::pass, tag);
  }
  return out;
}

// ---- rel-str-polar: the tower polarization sandwich ------------------------

inline SuiteResult polar_tower(Rng rng, int count, long nodes) {
  FpField F5(5);
  SuiteResult out{"polar-tower", {}};
  SearchBudget budget;
  budget.nodes = nodes;
  for (int t = 0; t < count; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(2));
    std::vector<Form<FpField>> forms{random_nonzero_form(F5, rng, n, 2, 3)};
    if (rng.next_below(2)) forms.push_back(random_nonzero_form(F5, rng, n, 1, 2));
    auto T = Tower<FpField>::from_forms(F5, n, forms);
    auto M = polarized_tower(F5, T);
    int d = 0;
    for (const auto& l : T.layers()) d = std::max(d, l.degree);
    long pow2d = 1;
    for (int k = 0; k < d; ++k) pow2d *= 2;
    std::string tag = "n=" + std::to_string(n) + " layers=" + std::to_string(T.height());

    // match polarized layers back to their source layer via levels
    bool ok = true, all_exact = true;
    for (int mi = 0; mi < static_cast<int>(M.layers.size()); ++mi) {
      int level = M.layers[mi].level;
      const auto& src = T.layers()[level - 1];
      auto poly_side = collective_strength(F5, src.forms, T.forms_below(level - 1), budget);
      // flatten the polarized layer and its prefix into polynomial strength
      std::vector<Form<FpField>> ml_forms, ml_prefix;
      for (const auto& f : M.layers[mi].forms) ml_forms.push_back(flatten(F5, f, M.space));
      for (const auto& f : M.prefix_forms(mi)) ml_prefix.push_back(flatten(F5, f, M.space));
      auto ml_side = collective_strength(F5, ml_forms, ml_prefix, budget);
      if (!poly_side.bound.exact() || !ml_side.bound.exact()) {
        all_exact = false;
        continue;
      }
      if (poly_side.bound.lower.infinite || ml_side.bound.lower.infinite) {
        if (poly_side.bound.lower.infinite != ml_side.bound.lower.infinite) ok = false;
        continue;
      }
      long sp = poly_side.bound.lower.value, sm = ml_side.bound.lower.value;
      if (!(sm <= pow2d * sp && sp <= sm)) ok = false;
    }
    if (!all_exact)
      out.records.push_back({"polar-tower.sandwich", "inconclusive", tag});
    else
      record(out, "polar-tower.sandwich", ok, tag);
  }
  return out;
}

// ---- collections: partial-order axioms and the d = 3 diagram --------------

inline SuiteResult collections(Rng rng, int count) {
  SuiteResult out{"collections", {}};
  // the full nonempty family over d = 3
  std::vector<SubsetCollection> all;
  std::vector<std::set<int>> base{{1}, {1, 2}, {1, 3}};
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<std::set<int>> sets;
    for (int b = 0; b < 3; ++b)
      if (mask >> b & 1) sets.push_back(base[b]);
    all.push_back(SubsetCollection::make(3, sets));
  }
  bool axioms = true;
  for (size_t i = 0; i < all.size(); ++i) {
    if (collection_compare(all[i], all[i]) != CollectionOrder::equal) axioms = false;
    for (size_t j = 0; j < all.size(); ++j) {
      auto ij = collection_compare(all[i], all[j]);
      if (ij == CollectionOrder::equal && i != j) axioms = false;
      for (size_t k = 0; k < all.size(); ++k)
        if (ij == CollectionOrder::less &&
            collection_compare(all[j], all[k]) == CollectionOrder::less &&
            collection_compare(all[i], all[k]) != CollectionOrder::less)
          axioms = false;
    }
  }
  record(out, "collections.axioms", axioms);
  int edges = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (collection_compare(all[i], all[j]) != CollectionOrder::less) continue;
      bool mid = false;
      for (size_t k = 0; k < all.size(); ++k)
        if (collection_compare(all[i], all[k]) == CollectionOrder::less &&
            collection_compare(all[k], all[j]) == CollectionOrder::less)
          mid = true;
      if (!mid) ++edges;
    }
  record(out, "collections.diagram", edges == 7, "cover edges=" + std::to_string(edges));
  (void)rng;
  (void)count;
  return out;
}

// ---- bounds: replay and monotonicity ---------------------------------------

inline SuiteResult bounds_suite(Rng rng, int count) {
  SuiteResult out{"bounds", {}};
  for (int t = 0; t < count; ++t) {
    long d = 2 + static_cast<long>(rng.next_below(3));
    long s = 1 + static_cast<long>(rng.next_below(4));
    auto rep = pipeline_bound(d, s, {{2, 4}}, {{"C_reg", mpq_class(1 + (long)rng.next_below(2))},
                                               {"D_reg", mpq_class(1)}});
    record(out, "bounds.replay", replay_pipeline(rep),
           "d=" + std::to_string(d) + " s=" + std::to_string(s));
    bool mono = skinner_threshold(s, d) <= skinner_threshold(s + 1, d) &&
                skinner_threshold(s, d) <= skinner_threshold(s, d + 1) &&
                taylor_strong_scaling(1, 1, 2, d) <= taylor_strong_scaling(1, 1, 3, d);
    record(out, "bounds.monotone", mono);
    long A = 1 + static_cast<long>(rng.next_below(3));
    long B = 1 + static_cast<long>(rng.next_below(2));
    long sh = 1 + static_cast<long>(rng.next_below(3));
    long sigma = sh + static_cast<long>(rng.next_below(4));
    long r = static_cast<long>(rng.next_below(3));
    auto powq = [](mpq_class base, long e) {
      mpq_class acc = 1;
      for (long k = 0; k < e; ++k) acc *= base;
      return acc;
    };
    mpq_class lvl = mpq_class(A) * powq(r + sh, B);
    auto [C, D] = shuffle_params(A, B);
    record(out, "bounds.shuffle-chain", lvl * powq(mpq_class(sigma) + lvl, B) <= C * powq(sigma + r, D));
  }
  return out;
}

// ---- roundtrip: parse(format(x)) == x --------------------------------------

inline SuiteResult roundtrip(Rng rng, int count) {
  QField Q;
  FpField F5(5);
  SuiteResult out{"roundtrip", {}};
  for (int t = 0; t < count; ++t) {
    int n = 1 + static_cast<int>(rng.next_below(4));
    int d = 1 + static_cast<int>(rng.next_below(4));
    auto f = random_form(Q, rng, n, d, 5);
    auto f2 = parse_form(Q, format_form(Q, f), n);
    record(out, "roundtrip.form", f.equals(Q, f2));

    std::vector<Form<FpField>> forms;
    for (int k = 0; k < 2; ++k)
      forms.push_back(random_nonzero_form(F5, rng, n, 1 + static_cast<int>(rng.next_below(3)), 3));
    auto T = Tower<FpField>::from_forms(F5, n, forms);
    auto T2 = parse_tower(F5, format_tower(F5, T));
    bool same = T2.height() == T.height() && T2.nvars() == T.nvars();
    if (same)
      for (int i = 0; i < T.height(); ++i)
        for (size_t j = 0; j < T.layers()[i].forms.size(); ++j)
          if (!T.layers()[i].forms[j].equals(F5, T2.layers()[i].forms[j])) same = false;
    record(out, "roundtrip.tower", same);

    // multilinear tower
    auto M = random_f2_tower(FpField(2), rng, 2);
    FpField F2(2);
    auto M2 = parse_mltower(F2, format_mltower(F2, M));
    bool mlsame = M2.layers.size() == M.layers.size() && M2.space.dims == M.space.dims;
    if (mlsame)
      for (size_t i = 0; i < M.layers.size(); ++i) {
        if (M.layers[i].level != M2.layers[i].level || M.layers[i].support != M2.layers[i].support ||
            M.layers[i].forms.size() != M2.layers[i].forms.size())
          mlsame = false;
        else
          for (size_t j = 0; j < M.layers[i].forms.size(); ++j)
            if (!M.layers[i].forms[j].equals(F2, M2.layers[i].forms[j])) mlsame = false;
      }
    record(out, "roundtrip.mltower", mlsame);
  }
  return out;
}

} // namespace suites

struct VerifyReport {
  VerifyProfile profile;
  std::vector<SuiteResult> suites;

  int total(const std::string& status) const {
    int c = 0;
    for (const auto& s : suites) c += s.count(status);
    return c;
  }
};

inline VerifyReport run_verify(const VerifyProfile& profile) {
  VerifyReport rep;
  rep.profile = profile;
  Rng root(profile.seed);
  auto want = [&](const std::string& name) {
    if (profile.suites.empty()) return true;
    for (const auto& s : profile.suites)
      if (s == name || s == "all") return true;
    return false;
  };
  int n = profile.count;
  long nodes = profile.budget_nodes;
  std::uint64_t label = 0;
  if (want("taylor")) rep.suites.push_back(suites::taylor(root.fork(++label), n));
  if (want("polarization")) rep.suites.push_back(suites::polarization(root.fork(++label), n, nodes));
  if (want("polar-sandwich")) rep.suites.push_back(suites::polar_sandwich(root.fork(++label), n, nodes));
  if (want("quadratic")) rep.suites.push_back(suites::quadratic(root.fork(++label), n, nodes));
  if (want("klp")) rep.suites.push_back(suites::klp(root.fork(++label), std::min(n, 40), nodes));
  if (want("rk-sing")) rep.suites.push_back(suites::rk_sing(root.fork(++label), n, nodes));
  if (want("regularize")) rep.suites.push_back(suites::regularization(root.fork(++label), std::min(n, 25), nodes));
  if (want("clone")) rep.suites.push_back(suites::cloning(root.fork(++label), std::min(n, 30), nodes));
  if (want("taylor-strong")) rep.suites.push_back(suites::taylor_strong(root.fork(++label), std::min(n, 25), nodes));
  if (want("polar-tower")) rep.suites.push_back(suites::polar_tower(root.fork(++label), std::min(n, 20), nodes));
  if (want("collections")) rep.suites.push_back(suites::collections(root.fork(++label), n));
  if (want("bounds")) rep.suites.push_back(suites::bounds_suite(root.fork(++label), n));
  if (want("roundtrip")) rep.suites.push_back(suites::roundtrip(root.fork(++label), std::min(n, 40)));
  return rep;
}

} // namespace towerlab
