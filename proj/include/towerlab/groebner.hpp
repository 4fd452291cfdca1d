#pragma once

#include <optional>
#include <set>
#include <vector>

#include "towerlab/poly.hpp"

namespace towerlab {

// Desk-scale Buchberger engine, graded-lex order, sugar pair selection.
// No F4/F5: auditability over speed, budgets make every run answer either
// "done" or "budget exhausted" -- never silently wrong.

enum class GbStatus { done, budget_exhausted };

template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> generators; // reduced basis, sorted by leading monomial ascending
  GbStatus status = GbStatus::done;
  long steps = 0; // S-polynomial reductions performed
  bool reduced = true;
};

namespace detail {

/// Full normal form of p modulo basis; deterministic (first divisor wins).
template <class F>
Poly<F> normal_form(const F& field, Poly<F> p, const std::vector<Poly<F>>& basis) {
  std::vector<typename Poly<F>::Term> remainder;
  while (!p.is_zero()) {
    const auto& [lm, lc] = p.leading();
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const auto& [gm, gc] = g.leading();
      if (divides(gm, lm)) {
        p = sub(field, p, mul_term(field, g, quotient(lm, gm), field.div(lc, gc)));
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.push_back(p.leading());
      p.terms.erase(p.terms.begin());
    }
  }
  return Poly<F>::normalize(field, p.nvars, std::move(remainder));
}

template <class F>
Poly<F> make_monic(const F& field, const Poly<F>& p) {
  if (p.is_zero()) return p;
  return scale(field, p, field.inv(p.leading().second));
}

} // namespace detail

/// Reduced Groebner basis of the given polynomials, or a partial basis with
/// status budget_exhausted once more than `budget` S-polynomial reductions
/// would be needed.
template <class F>
GroebnerBasis<F> groebner(const F& field, const std::vector<Poly<F>>& input, long budget = 200000) {
  GroebnerBasis<F> out;
  int nvars = input.empty() ? 0 : input[0].nvars;
  std::vector<Poly<F>> basis;
  std::vector<int> sugar;
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    nvars = p.nvars;
    basis.push_back(detail::make_monic(field, p));
    sugar.push_back(p.total_degree());
  }

  struct Pair {
    int i, j;
    Expo lcm_m;
    int sugar;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = grlex_cmp(a.lcm_m, b.lcm_m);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> pairs;
  auto push_pair = [&](int i, int j) {
    const Expo &mi = basis[i].leading().first, &mj = basis[j].leading().first;
    Expo l = lcm(mi, mj);
    // Buchberger's coprime criterion
    if (l.total_degree() == mi.total_degree() + mj.total_degree()) {
      bool coprime = true;
      for (int v = 0; v < l.nvars(); ++v)
        if (mi.e[v] > 0 && mj.e[v] > 0) coprime = false;
      if (coprime) return;
    }
    int s = std::max(sugar[i] + l.total_degree() - mi.total_degree(),
                     sugar[j] + l.total_degree() - mj.total_degree());
    pairs.push_back(Pair{i, j, l, s});
  };
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) push_pair(i, j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);

    // chain criterion: some other basis element strictly divides the lcm and
    // both its pairs with i,j are already gone
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
      if (!divides(basis[k].leading().first, pr.lcm_m)) continue;
      bool pending = false;
      for (const auto& q : pairs) {
        if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
            (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k)))
          pending = true;
      }
      if (!pending) skip = true;
    }
    if (skip) continue;

    if (out.steps >= budget) {
      out.status = GbStatus::budget_exhausted;
      break;
    }
    ++out.steps;

    const Poly<F>&f = basis[pr.i], &g = basis[pr.j];
    const auto& [fm, fc] = f.leading();
    const auto& [gm, gc] = g.leading();
    Poly<F> s = sub(field, mul_term(field, f, quotient(pr.lcm_m, fm), field.inv(fc)),
                    mul_term(field, g, quotient(pr.lcm_m, gm), field.inv(gc)));
    Poly<F> r = detail::normal_form(field, std::move(s), basis);
    if (r.is_zero()) continue;
    r = detail::make_monic(field, r);
    int rs = std::max(sugar[pr.i] + pr.lcm_m.total_degree() - fm.total_degree(),
                      sugar[pr.j] + pr.lcm_m.total_degree() - gm.total_degree());
    basis.push_back(std::move(r));
    sugar.push_back(rs);
    for (int i = 0; i + 1 < static_cast<int>(basis.size()); ++i)
      push_pair(i, static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose leading monomial another one divides
  std::vector<Poly<F>> minimal;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(basis.size()) && !redundant; ++j) {
      if (i == j) continue;
      const Expo &mi = basis[i].leading().first, &mj = basis[j].leading().first;
      if (divides(mj, mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce tails
  std::vector<Poly<F>> reduced;
  for (int i = 0; i < static_cast<int>(minimal.size()); ++i) {
    std::vector<Poly<F>> others;
    for (int j = 0; j < static_cast<int>(minimal.size()); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(detail::make_monic(field, detail::normal_form(field, minimal[i], others)));
  }
  std::erase_if(reduced, [](const Poly<F>& p) { return p.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [](const Poly<F>& a, const Poly<F>& b) {
    return grlex_cmp(a.leading().first, b.leading().first) < 0;
  });
  out.generators = std::move(reduced);
  return out;
}

/// Ambient size, dimension and codimension of an affine zero set (over the
/// algebraic closure of the coefficient field). dim = -1 means empty.
struct VarietyDims {
  int ambient = 0;
  int dim = 0;
  int codim = 0;
  bool unit_ideal = false;
  std::string field_used;
};

/// Combinatorial dimension from the leading-term ideal: the largest number of
/// variables spanning a coordinate subspace that meets no leading monomial's
/// support. Valid for any degree-compatible order; ours is graded-lex.
template <class F>
VarietyDims dimension(const F& field, const GroebnerBasis<F>& gb, int nvars) {
  VarietyDims out;
  out.ambient = nvars;
  out.field_used = field.name();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators) {
    if (g.is_zero()) continue;
    const Expo& lm = g.leading().first;
    std::uint32_t mask = 0;
    for (int v = 0; v < nvars; ++v)
      if (lm.e[v] > 0) mask |= 1u << v;
    if (mask == 0) { // a nonzero constant: unit ideal
      out.dim = -1;
      out.codim = nvars;
      out.unit_ideal = true;
      return out;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << nvars); ++set) {
    bool ok = true;
    for (auto s : supports)
      if ((s & ~set) == 0) { ok = false; break; }
    if (ok) best = std::max(best, __builtin_popcount(set));
  }
  out.dim = best;
  out.codim = nvars - best;
  return out;
}

template <class F>
VarietyDims dimension_of(const F& field, const std::vector<Poly<F>>& gens, int nvars,
                         long budget = 200000) {
  auto gb = groebner(field, gens, budget);
  if (gb.status != GbStatus::done) throw BudgetExhausted("groebner basis computation");
  return dimension(field, gb, nvars);
}

/// True iff the zero set of the forms has codimension equal to the number of
/// (nonzero) forms.
template <class F>
bool complete_intersection_check(const F& field, const std::vector<Form<F>>& forms,
                                 long budget = 200000) {
  if (forms.empty()) return true;
  int nvars = forms[0].nvars();
  std::vector<Poly<F>> gens;
  int count = 0;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    gens.push_back(Poly<F>::from_form(f));
    ++count;
  }
  VarietyDims d = dimension_of(field, gens, nvars, budget);
  return d.codim == count && !d.unit_ideal;
}

/// All s x s minors of the Jacobian of the given s forms (s <= n): the ideal
/// of the locus where the gradients are linearly dependent. For s = 1 these
/// are the partial derivatives.
template <class F>
std::vector<Form<F>> singular_locus_ideal(const F& field, const std::vector<Form<F>>& forms) {
  if (forms.empty()) return {};
  const int n = forms[0].nvars();
  const int s = static_cast<int>(forms.size());
  if (s > n) throw DomainError("more forms than variables in singular locus computation");
  std::vector<std::vector<Form<F>>> jac(s);
  for (int i = 0; i < s; ++i) {
    if (forms[i].nvars() != n) throw DomainError("ambient mismatch");
    for (int v = 1; v <= n; ++v) jac[i].push_back(derivative(field, forms[i], v));
  }
  // determinant of each s-column selection, by permutation expansion (s is tiny)
  std::vector<Form<F>> minors;
  std::vector<int> cols(s);
  auto emit_minor = [&]() {
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i;
    Form<F> det;
    bool first = true;
    do {
      int inversions = 0;
      for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
          if (perm[a] > perm[b]) ++inversions;
      Form<F> prod = jac[0][cols[perm[0]]];
      for (int i = 1; i < s; ++i) prod = mul(field, prod, jac[i][cols[perm[i]]]);
      if (inversions % 2) prod = neg(field, prod);
      det = first ? prod : add(field, det, prod);
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    minors.push_back(det);
  };
  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == s) {
      emit_minor();
      return;
    }
    for (int c = start; c <= n - (s - chosen); ++c) {
      cols[chosen] = c;
      self(self, c + 1, chosen + 1);
    }
  };
  rec(rec, 0, 0);
  return minors;
}

enum class ProbeStatus { found, absent, inconclusive };

template <class F>
struct ProbeResult {
  ProbeStatus status;
  std::vector<typename F::Elem> witness;
};

/// Exhaustive search for a common solution f_i(x) = a_i over a finite field.
/// `budget` caps the number of points visited; hitting it is reported as
/// inconclusive, never as absence.
template <class F>
ProbeResult<F> surjectivity_probe(const F& field, const std::vector<Form<F>>& forms,
                                  const std::vector<typename F::Elem>& targets,
                                  long budget = 2000000) {
  static_assert(F::is_finite, "surjectivity probe enumerates a finite field");
  if (forms.size() != targets.size()) throw DomainError("one target per form required");
  if (forms.empty()) return {ProbeStatus::found, {}};
  const int n = forms[0].nvars();
  const std::uint64_t q = field.size();
  std::vector<typename F::Elem> x(n, field.zero());
  std::vector<std::uint64_t> idx(n, 0);
  long visited = 0;
  while (true) {
    if (visited++ >= budget) return {ProbeStatus::inconclusive, {}};
    bool all = true;
    for (size_t i = 0; i < forms.size() && all; ++i)
      if (!field.eq(evaluate(field, forms[i], x), targets[i])) all = false;
    if (all) return {ProbeStatus::found, x};
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[pos] < q) {
        x[pos] = field.element(idx[pos]);
        break;
      }
      idx[pos] = 0;
      x[pos] = field.element(0);
      --pos;
    }
    if (pos < 0) return {ProbeStatus::absent, {}};
  }
}

} // namespace towerlab
