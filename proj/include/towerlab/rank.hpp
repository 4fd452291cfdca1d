#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/graded.hpp"
#include "towerlab/groebner.hpp"
#include "towerlab/search.hpp"

namespace towerlab {

/// Integer extended with +infinity (linear forms have infinite strength).
struct ExtInt {
  bool infinite = false;
  long value = 0;

  static ExtInt inf() { return {true, 0}; }
  static ExtInt of(long v) { return {false, v}; }

  bool operator==(const ExtInt&) const = default;
  bool leq(const ExtInt& o) const { return o.infinite || (!infinite && value <= o.value); }
  /// strict comparison against a rational threshold; infinity beats anything
  bool greater_than(const mpq_class& t) const { return infinite || mpq_class(value) > t; }
  bool leq_threshold(const mpq_class& t) const { return !infinite && mpq_class(value) <= t; }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline ExtInt min(ExtInt a, ExtInt b) { return a.leq(b) ? a : b; }

/// Bracket (lower, upper) on a rank-like quantity, with provenance notes.
/// `certified` records whether the bracket's evidence is exact for the stated
/// field (a mod-p fallback can close a bracket without certifying it).
struct RankBound {
  ExtInt lower = ExtInt::of(0);
  ExtInt upper = ExtInt::inf();
  bool certified = true;
  std::vector<std::string> trace;

  bool exact() const { return certified && lower == upper; }
  void note(std::string s) { trace.push_back(std::move(s)); }

  static RankBound exactly(ExtInt v, std::string why) {
    RankBound b;
    b.lower = b.upper = v;
    b.note(std::move(why));
    return b;
  }
};

/// Witness for an upper strength bound: f = sum of pairs + ideal_witness.
template <class F>
struct StrengthCertificate {
  std::vector<std::pair<Form<F>, Form<F>>> pairs;
  Form<F> ideal_witness;

  bool verify(const F& field, const Form<F>& f) const {
    Form<F> acc(f.nvars(), f.degree());
    for (const auto& [g, h] : pairs) acc = add(field, acc, mul(field, g, h));
    if (!ideal_witness.is_zero()) acc = add(field, acc, ideal_witness);
    return acc.equals(field, f);
  }
};

template <class F>
struct StrengthResult {
  RankBound bound;
  std::optional<StrengthCertificate<F>> certificate;
};

namespace detail {

/// Exact smallest set of variables meeting every monomial of f (n <= ~20).
template <class F>
std::vector<int> min_variable_cover(const Form<F>& f) {
  const int n = f.nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  std::uint32_t best_mask = (1u << n) - 1;
  int best = n;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int pc = __builtin_popcount(set);
    if (pc >= best) continue;
    bool covers = true;
    for (auto s : supports)
      if ((s & set) == 0) { covers = false; break; }
    if (covers) { best = pc; best_mask = set; }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (best_mask >> i & 1) out.push_back(i + 1);
  return out;
}

/// f = sum over cover variables of x_i * h_i (each monomial charged to its
/// first covering variable). Valid over any field once deg f >= 2.
template <class F>
StrengthCertificate<F> cover_certificate(const F& field, const Form<F>& f,
                                         const std::vector<int>& cover) {
  std::vector<std::vector<typename Form<F>::Term>> buckets(cover.size());
  for (const auto& [m, c] : f.terms()) {
    for (size_t k = 0; k < cover.size(); ++k) {
      if (m.e[cover[k] - 1] > 0) {
        Expo q = m;
        q.e[cover[k] - 1] -= 1;
        buckets[k].emplace_back(q, c);
        break;
      }
    }
  }
  StrengthCertificate<F> cert;
  cert.ideal_witness = Form<F>(f.nvars(), f.degree());
  for (size_t k = 0; k < cover.size(); ++k) {
    if (buckets[k].empty()) continue;
    cert.pairs.emplace_back(Form<F>::variable(field, f.nvars(), cover[k]),
                            Form<F>::from_terms(field, f.nvars(), f.degree() - 1,
                                                std::move(buckets[k])));
  }
  return cert;
}

} // namespace detail

/// Exhaustive relative-strength search over a finite field.
///
/// A decomposition f = sum g_k h_k + w (w in the degree-d ideal piece) may
/// always be normalized so each kept factor g_k has degree <= d/2 and is
/// scaled projectively. The search enumerates those kept factors in colex
/// order over all multisets and solves for the h_k and w by linear algebra,
/// so every completed level r without a hit is a sound lower bound r+1.
template <class F>
StrengthResult<F> strength_finite(const F& field, const Form<F>& f,
                                  const std::vector<Form<F>>& modulus,
                                  const SearchBudget& budget = {}) {
  static_assert(F::is_finite);
  StrengthResult<F> out;
  const int n = f.nvars(), d = f.degree();

  if (f.is_zero()) {
    out.bound = RankBound::exactly(ExtInt::of(0), "zero form");
    out.certificate = StrengthCertificate<F>{{}, Form<F>(n, d)};
    return out;
  }
  if (d <= 1) {
    if (ideal_membership(field, f, modulus)) {
      out.bound = RankBound::exactly(ExtInt::of(0), "in the ideal");
      return out;
    }
    out.bound = RankBound::exactly(ExtInt::inf(), "forms of degree <= 1 have infinite strength");
    return out;
  }

  GradedPieceBasis<F> piece(field, n, d, modulus);
  const MonomialBasis& basisD = piece.monomial_basis();
  auto f_vec = form_to_vector(field, f, basisD);
  if (piece.echelon().contains(f_vec)) {
    out.bound = RankBound::exactly(ExtInt::of(0), "in the ideal");
    out.certificate = StrengthCertificate<F>{{}, f};
    return out;
  }

  // candidate kept factors: all degrees 1..floor(d/2), projectively
  struct Candidate {
    Form<F> g;
    std::vector<std::vector<typename F::Elem>> rows; // g * complementary monomials
  };
  std::vector<Candidate> candidates;
  bool candidates_complete = true;
  for (int a = 1; a <= d / 2; ++a) {
    MonomialBasis basisA(n, a);
    std::vector<std::vector<typename F::Elem>> pts;
    try {
      pts = projective_points(field, basisA.size(), budget.max_candidates);
    } catch (const BudgetExhausted&) {
      candidates_complete = false;
      continue;
    }
    for (auto& coeffs : pts) {
      Candidate c;
      c.g = vector_to_form(field, coeffs, basisA);
      for (const Expo& m : monomials_of_degree(n, d - a))
        c.rows.push_back(form_to_vector(
            field, mul(field, c.g, Form<F>::monomial(field, n, m, field.one())), basisD));
      candidates.push_back(std::move(c));
    }
  }

  SpanSearch<F> search(field, piece.echelon(), f_vec, static_cast<int>(candidates.size()),
                       [&](int i) -> const std::vector<std::vector<typename F::Elem>>& {
                         return candidates[i].rows;
                       });

  long nodes_left = budget.nodes;
  int levels_exhausted = 0; // levels 0..levels_exhausted-1 fully enumerated, no hit
  std::optional<std::vector<int>> hit;
  for (int r = 1; r <= budget.max_r; ++r) {
    hit = search.find(r, nodes_left);
    if (hit) break;
    if (search.budget_hit()) {
      out.bound.note("search budget hit at r=" + std::to_string(r));
      break;
    }
    if (candidates_complete) {
      levels_exhausted = r;
      out.bound.lower = ExtInt::of(r + 1);
    } else {
      out.bound.note("candidate space truncated; no lower bound from level " + std::to_string(r));
    }
  }
  out.bound.lower = ExtInt::of(candidates_complete ? levels_exhausted + 1 : 1);

  if (hit) {
    // one linear solve recovers the cofactors h_k and the ideal witness
    const int r = static_cast<int>(hit->size());
    std::vector<std::vector<typename F::Elem>> cols;
    struct ColInfo { int slot; Expo mono; int mult_index; };
    std::vector<ColInfo> info;
    for (int k = 0; k < r; ++k) {
      const Candidate& c = candidates[(*hit)[k]];
      auto monos = monomials_of_degree(n, d - c.g.degree());
      for (size_t mi = 0; mi < monos.size(); ++mi) {
        cols.push_back(c.rows[mi]);
        info.push_back({k, monos[mi], -1});
      }
    }
    for (size_t pi = 0; pi < piece.multiples().size(); ++pi) {
      cols.push_back(form_to_vector(field, piece.multiples()[pi], basisD));
      info.push_back({-1, Expo(n), static_cast<int>(pi)});
    }
    auto sol = solve_columns(field, cols, f_vec);
    if (!sol) throw DomainError("internal: span hit but linear solve failed");

    StrengthCertificate<F> cert;
    cert.ideal_witness = Form<F>(n, d);
    std::vector<Form<F>> hs;
    for (int k = 0; k < r; ++k)
      hs.emplace_back(n, d - candidates[(*hit)[k]].g.degree());
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      if (field.is_zero((*sol)[ci])) continue;
      if (info[ci].slot >= 0)
        hs[info[ci].slot] = add(field, hs[info[ci].slot],
                                Form<F>::monomial(field, n, info[ci].mono, (*sol)[ci]));
      else
        cert.ideal_witness = add(field, cert.ideal_witness,
                                 scale(field, piece.multiples()[info[ci].mult_index], (*sol)[ci]));
    }
    for (int k = 0; k < r; ++k)
      if (!hs[k].is_zero()) cert.pairs.emplace_back(candidates[(*hit)[k]].g, hs[k]);
    if (!cert.verify(field, f)) throw DomainError("internal: certificate failed verification");

    out.bound.upper = ExtInt::of(static_cast<long>(cert.pairs.size()));
    out.bound.note("exhaustive search over " + field.name());
    if (out.bound.upper.value < out.bound.lower.value) out.bound.lower = out.bound.upper;
    out.certificate = std::move(cert);
    return out;
  }

  // nothing found: fall back to the variable-cover upper bound
  auto cover_cert = detail::cover_certificate(field, f, detail::min_variable_cover(f));
  out.bound.upper = ExtInt::of(static_cast<long>(cover_cert.pairs.size()));
  out.bound.note("variable-cover upper bound");
  out.certificate = std::move(cover_cert);
  if (out.bound.upper.value < out.bound.lower.value) out.bound.lower = out.bound.upper;
  return out;
}

/// Reduction of a rational form modulo p. Throws if p divides a denominator.
inline Form<FpField> reduce_mod_p(const QField& Q, const Form<QField>& f, const FpField& P) {
  std::vector<Form<FpField>::Term> ts;
  for (const auto& [m, c] : f.terms()) {
    mpz_class den = c.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), P.modulus()))
      throw DomainError("denominator divisible by the reduction prime");
    ts.emplace_back(m, P.from_fraction(c.get_num(), den));
  }
  return Form<FpField>::from_terms(P, f.nvars(), f.degree(), std::move(ts));
}

/// Strength over Q: honest bracketing. Upper bounds come from explicit
/// certificates (variable cover; ideal membership). Lower bounds come from
/// exhaustive searches after reduction modulo small primes (a rational
/// decomposition with p-integral coefficients reduces to one over F_p, so the
/// F_p strength is a lower bound away from finitely many bad primes; the
/// trace names the primes used).
inline StrengthResult<QField> strength_rational(const QField& Q, const Form<QField>& f,
                                                const std::vector<Form<QField>>& modulus,
                                                const SearchBudget& budget = {}) {
  StrengthResult<QField> out;
  const int n = f.nvars(), d = f.degree();
  if (f.is_zero()) {
    out.bound = RankBound::exactly(ExtInt::of(0), "zero form");
    return out;
  }
  if (d <= 1) {
    if (ideal_membership(Q, f, modulus)) {
      out.bound = RankBound::exactly(ExtInt::of(0), "in the ideal");
      return out;
    }
    out.bound = RankBound::exactly(ExtInt::inf(), "forms of degree <= 1 have infinite strength");
    return out;
  }
  if (ideal_membership(Q, f, modulus)) {
    out.bound = RankBound::exactly(ExtInt::of(0), "in the ideal");
    out.certificate = StrengthCertificate<QField>{{}, f};
    return out;
  }

  auto cover_cert = detail::cover_certificate(Q, f, detail::min_variable_cover(f));
  out.bound.upper = ExtInt::of(static_cast<long>(cover_cert.pairs.size()));
  out.bound.note("variable-cover upper bound");
  out.certificate = std::move(cover_cert);

  out.bound.lower = ExtInt::of(1);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    try {
      FpField P(p);
      std::vector<Form<FpField>> mod_p;
      for (const auto& g : modulus) mod_p.push_back(reduce_mod_p(Q, g, P));
      auto fp = reduce_mod_p(Q, f, P);
      auto res = strength_finite(P, fp, mod_p, budget);
      if (!res.bound.lower.infinite && res.bound.lower.value > out.bound.lower.value) {
        out.bound.lower = res.bound.lower;
        out.bound.note("lower bound via reduction mod " + std::to_string(p));
      }
    } catch (const DomainError&) {
      continue; // bad prime for these denominators
    }
  }
  if (out.bound.upper.value < out.bound.lower.value) out.bound.lower = out.bound.upper;
  if (out.bound.exact()) out.bound.note("bracket closed");
  return out;
}

/// Entry point choosing the right route per field.
template <class F>
StrengthResult<F> strength(const F& field, const Form<F>& f, const std::vector<Form<F>>& modulus,
                           const SearchBudget& budget = {}) {
  if constexpr (F::is_finite)
    return strength_finite(field, f, modulus, budget);
  else
    return strength_rational(field, f, modulus, budget);
}

/// Collective strength: min over nontrivial linear combinations. Over finite
/// fields the projective tuple space is enumerated exhaustively; over Q unit
/// vectors and reductions mod p bracket the minimum.
template <class F>
struct CollectiveResult {
  RankBound bound;
  std::vector<typename F::Elem> witness_combo;
  std::optional<StrengthCertificate<F>> certificate;
};

template <class F>
CollectiveResult<F> collective_strength(const F& field, const std::vector<Form<F>>& forms,
                                        const std::vector<Form<F>>& modulus,
                                        const SearchBudget& budget = {}) {
  CollectiveResult<F> out;
  if (forms.empty()) {
    out.bound = RankBound::exactly(ExtInt::inf(), "empty collection (vacuous)");
    return out;
  }
  const int s = static_cast<int>(forms.size());
  if constexpr (F::is_finite) {
    auto combos = projective_points(field, s, 1000000);
    ExtInt best_lower = ExtInt::inf(), best_upper = ExtInt::inf();
    bool first = true, all_certified = true;
    for (const auto& a : combos) {
      Form<F> combo(forms[0].nvars(), forms[0].degree());
      for (int j = 0; j < s; ++j) combo = add(field, combo, scale(field, forms[j], a[j]));
      auto res = strength_finite(field, combo, modulus, budget);
      if (first || !best_lower.leq(res.bound.lower)) best_lower = res.bound.lower;
      if (first || (res.bound.upper.leq(best_upper) && !best_upper.leq(res.bound.upper))) {
        out.witness_combo = a;
        out.certificate = res.certificate;
        best_upper = res.bound.upper;
      }
      all_certified = all_certified && res.bound.certified;
      first = false;
    }
    out.bound.lower = best_lower;
    out.bound.upper = best_upper;
    out.bound.certified = all_certified;
    out.bound.note("exhaustive over projective combos, " + field.name());
    return out;
  } else {
    // upper: unit combos (any nontrivial combo bounds the min)
    ExtInt best_upper = ExtInt::inf();
    for (int j = 0; j < s; ++j) {
      auto res = strength_rational(field, forms[j], modulus, budget);
      if (res.bound.upper.leq(best_upper)) {
        best_upper = res.bound.upper;
        std::vector<typename F::Elem> a(s, field.zero());
        a[j] = field.one();
        out.witness_combo = a;
        out.certificate = res.certificate;
      }
    }
    out.bound.upper = best_upper;
    out.bound.lower = ExtInt::of(0);
    out.bound.note("upper from unit combinations over Q");
    // lower: exhaustive collective over a reduction prime
    for (std::uint32_t p : {3u, 5u}) {
      try {
        FpField P(p);
        std::vector<Form<FpField>> fs, mods;
        for (const auto& g : forms) fs.push_back(reduce_mod_p(field, g, P));
        for (const auto& g : modulus) mods.push_back(reduce_mod_p(field, g, P));
        auto res = collective_strength(P, fs, mods, budget);
        if (!res.bound.lower.leq(out.bound.lower)) {
          out.bound.lower = res.bound.lower;
          out.bound.note("lower via exhaustive collective mod " + std::to_string(p));
        }
      } catch (const DomainError&) {
        continue;
      }
    }
    if (!out.bound.lower.leq(out.bound.upper)) out.bound.lower = out.bound.upper;
    return out;
  }
}

/// Exact strength of a quadratic over the algebraic closure:
/// ceil(rank(Gram)/2). Over a non-closed field this is the absolute value
/// (every rank-2 quadratic splits after at most a quadratic extension); the
/// field-level value can exceed it by one, which is why the validation oracle
/// for this formula searches over F_{p^2}.
template <class F>
RankBound quadratic_strength(const F& field, const Form<F>& q) {
  if (q.degree() != 2) throw DomainError("quadratic_strength needs a degree-2 form");
  if (field.characteristic() == 2) throw DomainError("quadratic_strength needs characteristic != 2");
  if (q.is_zero()) return RankBound::exactly(ExtInt::of(0), "zero form");
  const int n = q.nvars();
  auto half = field.inv(field.from_int(2));
  std::vector<std::vector<typename F::Elem>> gram(n, std::vector<typename F::Elem>(n, field.zero()));
  for (const auto& [m, c] : q.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (m.e[v] == 2) { i = j = v; break; }
      if (m.e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j)
      gram[i][i] = c;
    else {
      gram[i][j] = field.mul(c, half);
      gram[j][i] = gram[i][j];
    }
  }
  int rank = exact_rank(field, gram);
  auto b = RankBound::exactly(ExtInt::of((rank + 1) / 2), "gram rank " + std::to_string(rank));
  return b;
}

/// Birch rank: codimension of the locus where the gradients are linearly
/// dependent, via the Jacobian minors ideal and a Groebner dimension
/// computation. On budget exhaustion over Q, falls back to dimensions over
/// two large primes (flagged in the trace; exact=false).
template <class F>
RankBound birch_rank(const F& field, const std::vector<Form<F>>& forms, long gb_budget = 200000) {
  if (forms.empty()) throw DomainError("birch rank of an empty system");
  const int n = forms[0].nvars();
  auto minors = singular_locus_ideal(field, forms);
  std::vector<Poly<F>> gens;
  for (const auto& m : minors)
    if (!m.is_zero()) gens.push_back(Poly<F>::from_form(m));
  auto finish = [&](const VarietyDims& dims, bool exact, const std::string& how) {
    RankBound b;
    if (dims.dim < 0) {
      b.lower = b.upper = ExtInt::inf();
      b.note("dependence locus empty over " + dims.field_used);
    } else {
      b.lower = b.upper = ExtInt::of(dims.codim);
    }
    b.note(how);
    b.certified = exact;
    if (!exact) b.trace.push_back("inexact: dimension over a reduction prime");
    return b;
  };
  try {
    auto gb = groebner(field, gens, gb_budget);
    if (gb.status == GbStatus::done)
      return finish(dimension(field, gb, n), true, "groebner dimension over " + field.name());
  } catch (const BudgetExhausted&) {
  }
  if constexpr (!F::is_finite) {
    // fall back to two independent primes; agreement is strong evidence but
    // reported as inexact
    std::vector<int> dims_found;
    std::string note;
    for (std::uint32_t p : {1000003u, 2000003u}) {
      try {
        FpField P(p);
        std::vector<Poly<FpField>> gp;
        for (const auto& m : minors)
          if (!m.is_zero()) gp.push_back(Poly<FpField>::from_form(reduce_mod_p(field, m, P)));
        auto gb = groebner(P, gp, gb_budget);
        if (gb.status != GbStatus::done) continue;
        auto d = dimension(P, gb, n);
        dims_found.push_back(d.dim);
        note = "dimension over " + P.name();
      } catch (const DomainError&) {
        continue;
      }
    }
    if (!dims_found.empty()) {
      RankBound b;
      int dmin = *std::min_element(dims_found.begin(), dims_found.end());
      int dmax = *std::max_element(dims_found.begin(), dims_found.end());
      b.lower = ExtInt::of(n - dmax);
      b.upper = ExtInt::of(n - dmin);
      b.certified = false;
      b.note(note);
      b.note("inexact: dimension over a reduction prime");
      return b;
    }
  }
  throw BudgetExhausted("birch rank dimension computation");
}

/// The strength interval from the Birch rank:
/// ceil(Brk/2) <= absolute strength <= (d-1)(Brk+s-1). The only handle this
/// tool offers on strength over the algebraic closure.
template <class F>
RankBound klp_interval(const F& field, const std::vector<Form<F>>& forms, long gb_budget = 200000) {
  if (forms.empty()) throw DomainError("klp interval of an empty system");
  const int d = forms[0].degree();
  const long s = static_cast<long>(forms.size());
  for (const auto& f : forms)
    if (f.degree() != d) throw DomainError("klp interval needs forms of one common degree");
  auto brk = birch_rank(field, forms, gb_budget);
  RankBound out;
  out.trace = brk.trace;
  out.certified = brk.certified;
  if (brk.lower.infinite) {
    out.lower = out.upper = ExtInt::inf();
    out.note("birch rank infinite");
    return out;
  }
  out.lower = ExtInt::of((brk.lower.value + 1) / 2);
  out.upper = ExtInt::of(static_cast<long>(d - 1) * (brk.upper.value + s - 1));
  out.note("interval from birch rank " + brk.lower.str() +
           (brk.exact() ? "" : ".." + brk.upper.str()));
  return out;
}

} // namespace towerlab
