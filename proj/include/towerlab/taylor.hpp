#pragma once

#include <map>
#include <vector>

#include "towerlab/form.hpp"

namespace towerlab {

/// Multidegree of a multi-homogeneous component: one entry per block.
struct MultiDegree {
  std::vector<std::uint16_t> e;
  int total() const {
    int t = 0;
    for (auto v : e) t += v;
    return t;
  }
  bool operator==(const MultiDegree&) const = default;
  bool operator<(const MultiDegree& o) const { return e < o.e; } // lexicographic key order
};

/// A multi-homogeneous component living on m blocks of n variables each.
/// Block j (1-based) owns variables x_{(j-1)n+1} .. x_{jn} of the underlying
/// form.
template <class F>
struct BlockedForm {
  int blocks = 0;
  int block_vars = 0;
  MultiDegree multidegree;
  Form<F> underlying;
};

inline mpz_class multinomial(int d, const std::vector<std::uint16_t>& parts) {
  mpz_class r = 1;
  int acc = 0;
  for (auto p : parts) {
    for (int i = 1; i <= p; ++i) {
      r *= (acc + i);
      r /= i;
    }
    acc += p;
  }
  if (acc != d) throw DomainError("multinomial parts do not sum to the degree");
  return r;
}

/// Splits f(x_1 + ... + x_m) into its multi-homogeneous components, keyed by
/// multidegree. Zero components are omitted; the keys present all satisfy
/// |e| = deg f.
template <class F>
std::map<MultiDegree, BlockedForm<F>> taylor_expand(const F& field, const Form<F>& f, int m) {
  if (m < 1) throw DomainError("taylor expansion needs at least one block");
  const int n = f.nvars();
  const int big_n = n * m;

  // substitute x_i -> sum over blocks of the block-i coordinate
  std::vector<std::vector<typename F::Elem>> images(n, std::vector<typename F::Elem>(big_n, field.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) images[i][j * n + i] = field.one();
  Form<F> expanded = substitute_linear(field, f, big_n, images);

  std::map<MultiDegree, std::vector<typename Form<F>::Term>> buckets;
  for (const auto& [mono, c] : expanded.terms()) {
    MultiDegree e;
    e.e.assign(m, 0);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) e.e[j] = static_cast<std::uint16_t>(e.e[j] + mono.e[j * n + i]);
    buckets[e].emplace_back(mono, c);
  }

  std::map<MultiDegree, BlockedForm<F>> out;
  for (auto& [e, ts] : buckets) {
    BlockedForm<F> bf;
    bf.blocks = m;
    bf.block_vars = n;
    bf.multidegree = e;
    bf.underlying = Form<F>::from_terms(field, big_n, f.degree(), std::move(ts));
    if (!bf.underlying.is_zero()) out.emplace(e, std::move(bf));
  }
  return out;
}

/// Substitutes every block variable by the matching base variable
/// (x_{(j-1)n+i} -> x_i), i.e. evaluates a component on the diagonal.
template <class F>
Form<F> diagonal_collapse(const F& field, const BlockedForm<F>& bf) {
  const int n = bf.block_vars, m = bf.blocks;
  std::vector<std::vector<typename F::Elem>> images(n * m, std::vector<typename F::Elem>(n, field.zero()));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) images[j * n + i][i] = field.one();
  return substitute_linear(field, bf.underlying, n, images);
}

/// f restricted to the span of the given points: a |-> f(a_1 v_1 + ... + a_m v_m),
/// a homogeneous form of degree deg f in m variables (possibly zero).
template <class F>
Form<F> subspace_restrict(const F& field, const Form<F>& f,
                          const std::vector<std::vector<typename F::Elem>>& points) {
  const int n = f.nvars();
  const int m = static_cast<int>(points.size());
  if (m == 0) throw DomainError("subspace restriction needs at least one spanning point");
  for (const auto& v : points)
    if (static_cast<int>(v.size()) != n) throw DomainError("spanning point dimension mismatch");
  std::vector<std::vector<typename F::Elem>> images(n, std::vector<typename F::Elem>(m, field.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) images[i][j] = points[j][i];
  return substitute_linear(field, f, m, images);
}

} // namespace towerlab
