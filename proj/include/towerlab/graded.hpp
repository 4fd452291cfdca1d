#pragma once

#include <vector>

#include "towerlab/form.hpp"
#include "towerlab/linalg.hpp"

namespace towerlab {

template <class F>
std::vector<typename F::Elem> form_to_vector(const F& field, const Form<F>& f,
                                             const MonomialBasis& basis) {
  std::vector<typename F::Elem> v(basis.size(), field.zero());
  for (const auto& [m, c] : f.terms()) v[basis.index_of(m)] = c;
  return v;
}

template <class F>
Form<F> vector_to_form(const F& field, const std::vector<typename F::Elem>& v,
                       const MonomialBasis& basis) {
  std::vector<typename Form<F>::Term> ts;
  for (int i = 0; i < basis.size(); ++i)
    if (!field.is_zero(v[i])) ts.emplace_back(basis.at(i), v[i]);
  return Form<F>::from_terms(field, basis.nvars(), basis.degree(), std::move(ts));
}

/// The degree-d piece of the ideal generated by homogeneous forms:
/// the row-reduced span of { m * g : g generator, m monomial, deg(m g) = d }.
template <class F>
class GradedPieceBasis {
public:
  GradedPieceBasis(const F& field, int nvars, int degree, const std::vector<Form<F>>& generators)
      : field_(&field), basis_(nvars, degree), echelon_(field, basis_.size()) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      if (g.nvars() != nvars) throw DomainError("generator ambient mismatch");
      if (g.degree() > degree) continue;
      for (const Expo& m : monomials_of_degree(nvars, degree - g.degree())) {
        Form<F> prod = mul(field, g, Form<F>::monomial(field, nvars, m, field.one()));
        multiples_.push_back(prod);
        echelon_.insert(form_to_vector(field, prod, basis_));
      }
    }
  }

  int degree() const { return basis_.degree(); }
  int dim() const { return echelon_.rank(); }
  const MonomialBasis& monomial_basis() const { return basis_; }
  const Echelon<F>& echelon() const { return echelon_; }

  /// Monomial-multiple spanning set (before reduction); used by searches that
  /// must express a member as an explicit combination of generator multiples.
  const std::vector<Form<F>>& multiples() const { return multiples_; }

  bool contains(const Form<F>& f) const {
    if (f.is_zero()) return true;
    if (f.degree() != basis_.degree()) throw DomainError("degree mismatch in graded piece query");
    return echelon_.contains(form_to_vector(*field_, f, basis_));
  }

  /// Row-reduced basis as forms.
  std::vector<Form<F>> reduced_basis() const {
    std::vector<Form<F>> out;
    for (const auto& row : echelon_.rows()) out.push_back(vector_to_form(*field_, row, basis_));
    return out;
  }

private:
  const F* field_;
  MonomialBasis basis_;
  Echelon<F> echelon_;
  std::vector<Form<F>> multiples_;
};

/// Exact ideal membership for a homogeneous form: f lies in (generators) iff
/// it lies in the degree-deg(f) piece.
template <class F>
bool ideal_membership(const F& field, const Form<F>& f, const std::vector<Form<F>>& generators) {
  if (f.is_zero()) return true;
  GradedPieceBasis<F> piece(field, f.nvars(), f.degree(), generators);
  return piece.contains(f);
}

} // namespace towerlab
