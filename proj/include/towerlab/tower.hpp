#pragma once

#include <map>
#include <vector>

#include "towerlab/taylor.hpp"

namespace towerlab {

/// Layered forms of strictly increasing degree; lower layers serve as the
/// modulus for the strength of the layers above them.
template <class F>
class Tower {
public:
  struct Layer {
    int degree;
    std::vector<Form<F>> forms;
  };

  Tower() = default;
  explicit Tower(int nvars) : nvars_(nvars) {}

  static Tower from_forms(const F& field, int nvars, const std::vector<Form<F>>& forms) {
    Tower t(nvars);
    std::map<int, std::vector<Form<F>>> buckets;
    for (const auto& f : forms) {
      if (f.nvars() != nvars) throw DomainError("tower ambient mismatch");
      if (f.is_zero()) throw DomainError("zero form cannot join a tower");
      if (f.degree() < 1) throw DomainError("tower forms must have positive degree");
      buckets[f.degree()].push_back(f);
    }
    for (auto& [d, fs] : buckets) t.layers_.push_back(Layer{d, std::move(fs)});
    return t;
  }

  int nvars() const { return nvars_; }
  bool empty() const { return layers_.empty(); }
  int height() const { return static_cast<int>(layers_.size()); }
  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& layers() { return layers_; }

  int total_size() const {
    int s = 0;
    for (const auto& l : layers_) s += static_cast<int>(l.forms.size());
    return s;
  }

  /// Forms of all layers strictly below the given layer index (0-based):
  /// the modulus for that layer's relative strength.
  std::vector<Form<F>> forms_below(int layer_index) const {
    std::vector<Form<F>> out;
    for (int i = 0; i < layer_index && i < height(); ++i)
      out.insert(out.end(), layers_[i].forms.begin(), layers_[i].forms.end());
    return out;
  }

  std::vector<Form<F>> all_forms() const { return forms_below(height()); }

  /// Count of forms in this layer and every layer above it (the s_i+...+s_h
  /// entering strongness thresholds).
  int size_from(int layer_index) const {
    int s = 0;
    for (int i = layer_index; i < height(); ++i) s += static_cast<int>(layers_[i].forms.size());
    return s;
  }

private:
  int nvars_ = 0;
  std::vector<Layer> layers_;
};

/// (A, B, r) of a strongness audit: layer i must have collective relative
/// strength exceeding A*(s_i+...+s_h+r)^B.
struct StrongnessParams {
  mpq_class A;
  long B = 1;
  long r = 0;

  StrongnessParams() = default;
  StrongnessParams(mpq_class a, long b, long rr) : A(std::move(a)), B(b), r(rr) {
    if (A <= 0) throw DomainError("A must be positive");
    if (B < 1) throw DomainError("B must be at least 1");
    if (r < 0) throw DomainError("r must be nonnegative");
  }

  mpq_class threshold(long count) const {
    mpq_class t = A;
    mpq_class base(count + r);
    for (long k = 0; k < B; ++k) t *= base;
    return t;
  }
};

/// Elimination-size recursion: n_d = m_d, n_i = m_i + C * n_{i+1}^(D+1),
/// evaluated top-down in exact integers. `m` is indexed by degree 1..d.
inline std::vector<mpz_class> predicted_size(const std::vector<long>& m, const mpq_class& C,
                                             long D) {
  const int d = static_cast<int>(m.size());
  std::vector<mpz_class> n(d);
  for (int i = d - 1; i >= 0; --i) {
    mpz_class v(m[i]);
    if (i + 1 < d) {
      mpq_class grow = C;
      for (long k = 0; k < D + 1; ++k) grow *= mpq_class(n[i + 1]);
      // the recursion is stated for integer C; rational C rounds up
      mpz_class g;
      mpz_cdiv_q(g.get_mpz_t(), grow.get_num().get_mpz_t(), grow.get_den().get_mpz_t());
      v += g;
    }
    n[i] = v;
  }
  return n;
}

/// The strongness-shuffle constants: (C, D) = (2^B * A^(B+1), B^2 + B).
inline std::pair<mpq_class, long> shuffle_params(const mpq_class& A, long B) {
  if (A <= 0 || B < 1) throw DomainError("shuffle_params needs A > 0, B >= 1");
  mpq_class C = 1;
  for (long k = 0; k < B; ++k) C *= 2;
  for (long k = 0; k < B + 1; ++k) C *= A;
  return {C, B * B + B};
}

/// The tower of all nonzero Taylor components: layer i of the result consists
/// of every nonzero f^e for f in layer i, on m blocks of n variables.
/// Components are ordered by form index, then lexicographically by
/// multidegree.
template <class F>
Tower<F> taylor_tower(const F& field, const Tower<F>& tower, int m) {
  if (m < 1) throw DomainError("taylor tower needs m >= 1");
  Tower<F> out(tower.nvars() * m);
  for (const auto& layer : tower.layers()) {
    typename Tower<F>::Layer nl{layer.degree, {}};
    for (const auto& f : layer.forms) {
      for (const auto& [e, comp] : taylor_expand(field, f, m)) nl.forms.push_back(comp.underlying);
    }
    if (!nl.forms.empty()) out.layers().push_back(std::move(nl));
  }
  return out;
}

} // namespace towerlab
