#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "towerlab/monomial.hpp"
#include "towerlab/scalar.hpp"

namespace towerlab {

/// Homogeneous polynomial with exact coefficients.
///
/// Terms are kept canonical: sorted in descending graded-lex order, no zero
/// coefficients. A zero form keeps its declared degree and ambient size.
template <class F>
class Form {
public:
  using Elem = typename F::Elem;
  using Term = std::pair<Expo, Elem>;

  Form() : nvars_(0), degree_(0) {}
  Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  /// Builds from an arbitrary term list; collects, checks homogeneity.
  static Form from_terms(const F& field, int nvars, int degree, std::vector<Term> terms) {
    for (const auto& [m, c] : terms) {
      if (m.nvars() != nvars) throw DomainError("term ambient mismatch");
      if (!field.is_zero(c) && m.total_degree() != degree)
        throw DomainError("inhomogeneous term: degree " + std::to_string(m.total_degree()) +
                          " in a degree-" + std::to_string(degree) + " form");
    }
    Form f(nvars, degree);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().first == t.first)
        f.terms_.back().second = field.add(f.terms_.back().second, t.second);
      else
        f.terms_.push_back(std::move(t));
    }
    std::erase_if(f.terms_, [&](const Term& t) { return field.is_zero(t.second); });
    return f;
  }

  static Form monomial(const F& field, int nvars, const Expo& m, const Elem& c) {
    return from_terms(field, nvars, m.total_degree(), {{m, c}});
  }

  static Form variable(const F& field, int nvars, int var /*1-based*/) {
    Expo m(nvars);
    m.e[var - 1] = 1;
    return monomial(field, nvars, m, field.one());
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("zero form has no leading term");
    return terms_.front();
  }

  bool equals(const F& field, const Form& other) const {
    if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].first == other.terms_[i].first) ||
          !field.eq(terms_[i].second, other.terms_[i].second))
        return false;
    return true;
  }

  Elem coeff(const F& field, const Expo& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return field.zero();
  }

private:
  int nvars_, degree_;
  std::vector<Term> terms_;
};

template <class F>
Form<F> add(const F& field, const Form<F>& a, const Form<F>& b) {
  if (a.nvars() != b.nvars()) throw DomainError("ambient mismatch in form addition");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in form addition");
  std::vector<typename Form<F>::Term> ts(a.terms());
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  return Form<F>::from_terms(field, a.nvars(), a.degree(), std::move(ts));
}

template <class F>
Form<F> scale(const F& field, const Form<F>& a, const typename F::Elem& c) {
  if (field.is_zero(c)) return Form<F>(a.nvars(), a.degree());
  std::vector<typename Form<F>::Term> ts;
  ts.reserve(a.terms().size());
  for (const auto& [m, cc] : a.terms()) ts.emplace_back(m, field.mul(cc, c));
  return Form<F>::from_terms(field, a.nvars(), a.degree(), std::move(ts));
}

template <class F>
Form<F> neg(const F& field, const Form<F>& a) {
  return scale(field, a, field.neg(field.one()));
}

template <class F>
Form<F> sub(const F& field, const Form<F>& a, const Form<F>& b) {
  return add(field, a, neg(field, b));
}

template <class F>
Form<F> mul(const F& field, const Form<F>& a, const Form<F>& b) {
  if (a.nvars() != b.nvars()) throw DomainError("ambient mismatch in form product");
  int d = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return Form<F>(a.nvars(), d);
  std::vector<typename Form<F>::Term> ts;
  ts.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) ts.emplace_back(mul(ma, mb), field.mul(ca, cb));
  return Form<F>::from_terms(field, a.nvars(), d, std::move(ts));
}

template <class F>
typename F::Elem evaluate(const F& field, const Form<F>& f,
                          const std::vector<typename F::Elem>& point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw DomainError("evaluation point dimension mismatch");
  auto acc = field.zero();
  for (const auto& [m, c] : f.terms()) {
    auto t = c;
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < m.e[i]; ++k) t = field.mul(t, point[i]);
    acc = field.add(acc, t);
  }
  return acc;
}

/// Substitutes variable i of f by the given linear form in a fresh ambient
/// space of `new_nvars` variables; images[i] are rows of coefficients.
template <class F>
Form<F> substitute_linear(const F& field, const Form<F>& f, int new_nvars,
                          const std::vector<std::vector<typename F::Elem>>& images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw DomainError("substitution image count mismatch");
  std::vector<Form<F>> image_forms;
  image_forms.reserve(images.size());
  for (const auto& row : images) {
    if (static_cast<int>(row.size()) != new_nvars) throw DomainError("substitution image dimension mismatch");
    std::vector<typename Form<F>::Term> ts;
    for (int j = 0; j < new_nvars; ++j)
      if (!field.is_zero(row[j])) {
        Expo m(new_nvars);
        m.e[j] = 1;
        ts.emplace_back(m, row[j]);
      }
    image_forms.push_back(Form<F>::from_terms(field, new_nvars, 1, std::move(ts)));
  }
  Form<F> result(new_nvars, f.degree());
  for (const auto& [m, c] : f.terms()) {
    Form<F> prod = Form<F>::monomial(field, new_nvars, Expo(new_nvars), c);
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < m.e[i]; ++k) prod = mul(field, prod, image_forms[i]);
    if (result.is_zero())
      result = prod;
    else if (!prod.is_zero())
      result = add(field, result, prod);
  }
  if (result.is_zero()) return Form<F>(new_nvars, f.degree());
  return result;
}

/// Partial derivative with respect to variable `var` (1-based).
template <class F>
Form<F> derivative(const F& field, const Form<F>& f, int var) {
  std::vector<typename Form<F>::Term> ts;
  for (const auto& [m, c] : f.terms()) {
    int e = m.e[var - 1];
    if (e == 0) continue;
    Expo q = m;
    q.e[var - 1] = static_cast<std::uint16_t>(e - 1);
    ts.emplace_back(q, field.mul(c, field.from_int(e)));
  }
  return Form<F>::from_terms(field, f.nvars(), std::max(0, f.degree() - 1), std::move(ts));
}

} // namespace towerlab
