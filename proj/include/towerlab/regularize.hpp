#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/graded.hpp"
#include "towerlab/prank.hpp"
#include "towerlab/rank.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

template <class F>
struct AuditLayer {
  int layer_index;
  int degree;
  mpq_class threshold;
  RankBound bound;
  Verdict verdict;
};

template <class F>
struct AuditReport {
  std::vector<AuditLayer<F>> layers;
  Verdict overall = Verdict::pass;
  // "definition": threshold A(s_i+...+s_h+r)^B per layer.
  // "recursion": threshold C*n_i^D with n_i from the size recursion -- the
  // style the regularization loop runs on. The two genuinely differ; reports
  // always name which one they used.
  std::string threshold_style = "definition";
};

namespace detail {

template <class F>
AuditReport<F> audit_with_thresholds(const F& field, const Tower<F>& T,
                                     const std::vector<mpq_class>& thresholds,
                                     const std::string& style, const SearchBudget& budget) {
  AuditReport<F> report;
  report.threshold_style = style;
  for (int i = 0; i < T.height(); ++i) {
    AuditLayer<F> row;
    row.layer_index = i;
    row.degree = T.layers()[i].degree;
    row.threshold = thresholds[i];
    auto res = collective_strength(field, T.layers()[i].forms, T.forms_below(i), budget);
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

} // namespace detail

/// Strongness audit in the definition style: layer i passes when its
/// collective relative strength exceeds A(s_i+...+s_h+r)^B; a layer of
/// independent linear forms passes with infinite strength. Verdicts follow
/// the bracket: pass needs the lower bound above the threshold, fail needs
/// the upper bound at or below it, anything else is inconclusive.
template <class F>
AuditReport<F> audit_strength(const F& field, const Tower<F>& T, const StrongnessParams& params,
                              const SearchBudget& budget = {}) {
  std::vector<mpq_class> thresholds;
  for (int i = 0; i < T.height(); ++i) thresholds.push_back(params.threshold(T.size_from(i)));
  return detail::audit_with_thresholds(field, T, thresholds, "definition", budget);
}

/// Strongness audit in the recursion style: layer of degree dg passes when
/// its collective relative strength exceeds C * n_dg^D, with n the size
/// recursion evaluated on a reference degree profile.
template <class F>
AuditReport<F> audit_strength_recursion(const F& field, const Tower<F>& T, const mpq_class& C,
                                        long D, const std::vector<mpz_class>& n,
                                        const SearchBudget& budget = {}) {
  std::vector<mpq_class> thresholds;
  for (int i = 0; i < T.height(); ++i) {
    int dg = T.layers()[i].degree;
    mpq_class nd = dg - 1 < static_cast<int>(n.size()) ? mpq_class(n[dg - 1]) : mpq_class(0);
    mpq_class t = C;
    for (long k = 0; k < D; ++k) t *= nd;
    thresholds.push_back(t);
  }
  return detail::audit_with_thresholds(field, T, thresholds, "recursion", budget);
}

template <class F>
struct RegularizationStep {
  int layer_degree;
  int form_index; // pivot within the layer at the time of the step
  std::vector<typename F::Elem> combo;
  std::vector<std::pair<Form<F>, Form<F>>> pieces; // the decomposition sum p_k q_k
  Form<F> ideal_witness;                           // element of (forms below the layer)
  std::vector<Form<F>> added;                      // the factors appended to lower layers
};

template <class F>
struct RegularizationTrace {
  std::vector<Form<F>> input;
  std::vector<RegularizationStep<F>> steps;
  std::vector<mpz_class> size_bound; // predicted n_i, indexed by degree-1
  bool budget_exhausted = false;
  bool containment_verified = false;
  bool size_within_bound = false;
};

template <class F>
struct RegularizationResult {
  Tower<F> tower;
  RegularizationTrace<F> trace;
  AuditReport<F> final_audit;
};

namespace detail {

/// Decomposition finder used by the elimination loop: tries to write f as at
/// most `max_pieces` products modulo the ideal, preferring exhaustive-minimal
/// certificates and falling back to the variable-cover split.
template <class F>
std::optional<StrengthCertificate<F>> find_decomposition(const F& field, const Form<F>& f,
                                                         const std::vector<Form<F>>& modulus,
                                                         long max_pieces,
                                                         const SearchBudget& budget) {
  auto res = strength_finite(field, f, modulus, budget);
  if (res.certificate && !res.bound.upper.infinite && res.bound.upper.value <= max_pieces)
    return res.certificate;
  return std::nullopt;
}

} // namespace detail

/// The regularization loop: repeatedly finds a layer where some nontrivial
/// combination decomposes into few products modulo the layers below, deletes
/// the pivot form and pushes one lower-degree factor per piece down the
/// tower.
///
/// The elimination threshold is the recursion style C * n_i^D, with n the
/// size recursion on the input degree profile: that is the accounting under
/// which the output-size bound (total <= n_1) is actually provable, and the
/// final audit attached to the result uses the same thresholds and is
/// labeled "recursion". (The definition-style audit A(s+...+r)^B is
/// available separately and can disagree on boundary instances.) In odd mode
/// the odd-degree factor of each piece is kept, so the output degrees stay
/// odd; inputs must then all have odd degree.
///
/// Deterministic choices: lowest failing layer first; combinations enumerated
/// projectively in canonical order; the pivot is the first index with a
/// nonzero coefficient.
template <class F>
RegularizationResult<F> regularize(const F& field, const std::vector<Form<F>>& input,
                                   const mpq_class& C, long D, long r, bool odd_only = false,
                                   const SearchBudget& budget = {}, long max_steps = 10000) {
  static_assert(F::is_finite, "regularize needs exact strength decisions (finite field)");
  if (input.empty()) throw DomainError("nothing to regularize");
  const int n = input[0].nvars();
  int maxdeg = 0;
  for (const auto& f : input) {
    if (f.is_zero()) throw DomainError("zero form in regularization input");
    if (f.degree() < 1) throw DomainError("regularization input must have positive degree");
    if (odd_only && f.degree() % 2 == 0)
      throw DomainError("odd mode requires inputs of odd degree");
    maxdeg = std::max(maxdeg, f.degree());
  }
  StrongnessParams params(C, D, r);

  RegularizationResult<F> out;
  out.trace.input = input;
  std::vector<long> profile(maxdeg, 0);
  for (const auto& f : input) profile[f.degree() - 1]++;
  out.trace.size_bound = predicted_size(profile, C, D);
  out.tower = Tower<F>::from_forms(field, n, input);

  long steps = 0;
  while (true) {
    if (steps >= max_steps) {
      out.trace.budget_exhausted = true;
      break;
    }
    bool eliminated = false;
    for (int li = 0; li < out.tower.height() && !eliminated; ++li) {
      auto& layer = out.tower.layers()[li];
      if (layer.forms.empty()) continue;

      if (layer.degree == 1) {
        // a layer of independent linear forms has infinite strength; a
        // dependency is a zero combination (an empty decomposition) and the
        // dependent form is simply deleted
        MonomialBasis basis1(n, 1);
        Echelon<F> ech(field, basis1.size());
        int dependent = -1;
        for (size_t j = 0; j < layer.forms.size(); ++j)
          if (!ech.insert(form_to_vector(field, layer.forms[j], basis1))) {
            dependent = static_cast<int>(j);
            break;
          }
        if (dependent < 0) continue; // independent: passes every threshold
        std::vector<std::vector<typename F::Elem>> cols;
        for (int j = 0; j < dependent; ++j)
          cols.push_back(form_to_vector(field, layer.forms[j], basis1));
        auto sol = solve_columns(field, cols, form_to_vector(field, layer.forms[dependent], basis1));
        if (!sol) throw DomainError("internal: dependency vanished");
        std::vector<typename F::Elem> a(layer.forms.size(), field.zero());
        for (int j = 0; j < dependent; ++j) a[j] = (*sol)[j];
        a[dependent] = field.neg(field.one());
        int lead = 0;
        while (field.is_zero(a[lead])) ++lead;
        auto scale_inv = field.inv(a[lead]);
        for (auto& c : a) c = field.mul(c, scale_inv);
        RegularizationStep<F> step;
        step.layer_degree = 1;
        step.form_index = lead;
        step.combo = a;
        step.ideal_witness = Form<F>(n, 1);
        layer.forms.erase(layer.forms.begin() + lead);
        std::erase_if(out.tower.layers(), [](const auto& l) { return l.forms.empty(); });
        out.trace.steps.push_back(std::move(step));
        eliminated = true;
        ++steps;
        break;
      }

      mpq_class threshold = C;
      for (long k = 0; k < D; ++k) threshold *= mpq_class(out.trace.size_bound[layer.degree - 1]);
      long max_pieces = static_cast<long>(mpz_class(threshold.get_num() / threshold.get_den()).get_si());
      auto modulus = out.tower.forms_below(li);
      SearchBudget finder = budget;
      finder.max_r = static_cast<int>(std::min<long>(max_pieces, finder.max_r));
      // scan combinations in canonical projective order; first decomposable wins
      auto combos = projective_points(field, static_cast<int>(layer.forms.size()), 1000000);
      for (const auto& a : combos) {
        Form<F> combo(n, layer.degree);
        for (size_t j = 0; j < layer.forms.size(); ++j)
          combo = add(field, combo, scale(field, layer.forms[j], a[j]));
        auto cert = detail::find_decomposition(field, combo, modulus, max_pieces, finder);
        if (!cert) continue;
        // pivot: first nonzero coefficient
        int pivot = 0;
        while (field.is_zero(a[pivot])) ++pivot;
        RegularizationStep<F> step;
        step.layer_degree = layer.degree;
        step.form_index = pivot;
        step.combo = a;
        step.pieces = cert->pairs;
        step.ideal_witness = cert->ideal_witness;
        layer.forms.erase(layer.forms.begin() + pivot);
        for (const auto& [g, h] : cert->pairs) {
          // keep one factor per piece: the enumerated kept factor, or in odd
          // mode whichever factor has odd degree
          const Form<F>* keep = &g;
          if (odd_only && g.degree() % 2 == 0) keep = &h;
          if (odd_only && keep->degree() % 2 == 0)
            throw DomainError("internal: no odd factor in an odd-degree piece");
          step.added.push_back(*keep);
        }
        // insert the kept factors into their layers
        for (const auto& p : step.added) {
          bool placed = false;
          for (auto& l2 : out.tower.layers()) {
            if (l2.degree == p.degree()) {
              l2.forms.push_back(p);
              placed = true;
              break;
            }
          }
          if (!placed) {
            typename Tower<F>::Layer nl{p.degree(), {p}};
            auto& ls = out.tower.layers();
            auto pos = std::lower_bound(ls.begin(), ls.end(), p.degree(),
                                        [](const auto& l, int d) { return l.degree < d; });
            ls.insert(pos, std::move(nl));
          }
        }
        // drop the layer if it emptied
        std::erase_if(out.tower.layers(), [](const auto& l) { return l.forms.empty(); });
        out.trace.steps.push_back(std::move(step));
        eliminated = true;
        ++steps;
        break;
      }
    }
    if (!eliminated) break;
  }

  out.final_audit = audit_strength_recursion(field, out.tower, C, D, out.trace.size_bound, budget);

  // containment: every input form lies in the ideal of the final tower
  auto final_forms = out.tower.all_forms();
  out.trace.containment_verified = true;
  for (const auto& f : input)
    if (!ideal_membership(field, f, final_forms)) out.trace.containment_verified = false;

  // size: total output within the recursion bound n_1
  mpz_class total(out.tower.total_size());
  out.trace.size_within_bound = out.trace.size_bound.empty() || total <= out.trace.size_bound[0];
  return out;
}

/// Replays a trace from its recorded input: reapplies every step and checks
/// that each step's decomposition matches the eliminated combination modulo
/// the then-current lower layers. Returns the reconstructed tower.
template <class F>
std::pair<Tower<F>, bool> replay_trace(const F& field, const RegularizationTrace<F>& trace) {
  if (trace.input.empty()) throw DomainError("empty trace");
  const int n = trace.input[0].nvars();
  Tower<F> tower = Tower<F>::from_forms(field, n, trace.input);
  bool valid = true;
  for (const auto& step : trace.steps) {
    int li = -1;
    for (int i = 0; i < tower.height(); ++i)
      if (tower.layers()[i].degree == step.layer_degree) li = i;
    if (li < 0) return {tower, false};
    auto& layer = tower.layers()[li];
    if (step.combo.size() != layer.forms.size() ||
        step.form_index >= static_cast<int>(layer.forms.size()))
      return {tower, false};
    // step validity: combo == sum of pieces + witness, witness in (below)
    Form<F> combo(n, layer.degree);
    for (size_t j = 0; j < layer.forms.size(); ++j)
      combo = add(field, combo, scale(field, layer.forms[j], step.combo[j]));
    Form<F> rebuilt(n, layer.degree);
    for (const auto& [p, q] : step.pieces) rebuilt = add(field, rebuilt, mul(field, p, q));
    if (!step.ideal_witness.is_zero()) rebuilt = add(field, rebuilt, step.ideal_witness);
    if (!combo.equals(field, rebuilt)) valid = false;
    if (!step.ideal_witness.is_zero() &&
        !ideal_membership(field, step.ideal_witness, tower.forms_below(li)))
      valid = false;
    layer.forms.erase(layer.forms.begin() + step.form_index);
    for (const auto& p : step.added) {
      bool placed = false;
      for (auto& l2 : tower.layers())
        if (l2.degree == p.degree()) {
          l2.forms.push_back(p);
          placed = true;
          break;
        }
      if (!placed) {
        typename Tower<F>::Layer nl{p.degree(), {p}};
        auto& ls = tower.layers();
        auto pos = std::lower_bound(ls.begin(), ls.end(), p.degree(),
                                    [](const auto& l, int d) { return l.degree < d; });
        ls.insert(pos, std::move(nl));
      }
    }
    std::erase_if(tower.layers(), [](const auto& l) { return l.forms.empty(); });
  }
  return {tower, valid};
}

} // namespace towerlab
