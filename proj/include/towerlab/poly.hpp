#pragma once

#include <algorithm>
#include <vector>

#include "towerlab/form.hpp"

namespace towerlab {

/// Possibly non-homogeneous polynomial; terms sorted in descending graded-lex
/// order, no zero coefficients. The Groebner engine's working type.
template <class F>
struct Poly {
  using Elem = typename F::Elem;
  using Term = std::pair<Expo, Elem>;

  int nvars = 0;
  std::vector<Term> terms;

  Poly() = default;
  explicit Poly(int n) : nvars(n) {}

  bool is_zero() const { return terms.empty(); }
  const Term& leading() const {
    if (terms.empty()) throw DomainError("zero polynomial has no leading term");
    return terms.front();
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.total_degree());
    return d;
  }

  static Poly normalize(const F& field, int nvars, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    Poly p(nvars);
    for (auto& t : ts) {
      if (!p.terms.empty() && p.terms.back().first == t.first)
        p.terms.back().second = field.add(p.terms.back().second, t.second);
      else
        p.terms.push_back(std::move(t));
    }
    std::erase_if(p.terms, [&](const Term& t) { return field.is_zero(t.second); });
    return p;
  }

  static Poly from_form(const Form<F>& f) {
    Poly p(f.nvars());
    p.terms = f.terms();
    return p;
  }

  bool equals(const F& field, const Poly& o) const {
    if (nvars != o.nvars || terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (!(terms[i].first == o.terms[i].first) || !field.eq(terms[i].second, o.terms[i].second))
        return false;
    return true;
  }
};

template <class F>
Poly<F> add(const F& field, const Poly<F>& a, const Poly<F>& b) {
  auto ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  return Poly<F>::normalize(field, a.nvars, std::move(ts));
}

template <class F>
Poly<F> scale(const F& field, const Poly<F>& a, const typename F::Elem& c) {
  if (field.is_zero(c)) return Poly<F>(a.nvars);
  auto ts = a.terms;
  for (auto& t : ts) t.second = field.mul(t.second, c);
  return Poly<F>::normalize(field, a.nvars, std::move(ts));
}

template <class F>
Poly<F> sub(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return add(field, a, scale(field, b, field.neg(field.one())));
}

template <class F>
Poly<F> mul_term(const F& field, const Poly<F>& a, const Expo& m, const typename F::Elem& c) {
  if (field.is_zero(c)) return Poly<F>(a.nvars);
  std::vector<typename Poly<F>::Term> ts;
  ts.reserve(a.terms.size());
  for (const auto& [mm, cc] : a.terms) ts.emplace_back(mul(mm, m), field.mul(cc, c));
  return Poly<F>::normalize(field, a.nvars, std::move(ts));
}

template <class F>
Poly<F> mul(const F& field, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename Poly<F>::Term> ts;
  ts.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) ts.emplace_back(mul(ma, mb), field.mul(ca, cb));
  return Poly<F>::normalize(field, a.nvars, std::move(ts));
}

template <class F>
typename F::Elem evaluate(const F& field, const Poly<F>& f,
                          const std::vector<typename F::Elem>& point) {
  auto acc = field.zero();
  for (const auto& [m, c] : f.terms) {
    auto t = c;
    for (int i = 0; i < f.nvars; ++i)
      for (int k = 0; k < m.e[i]; ++k) t = field.mul(t, point[i]);
    acc = field.add(acc, t);
  }
  return acc;
}

} // namespace towerlab
