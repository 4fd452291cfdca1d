#pragma once

#include <cstdint>
#include <vector>

#include "towerlab/form.hpp"

namespace towerlab {

/// Deterministic PRNG (splitmix64). Hand-rolled so that reports are
/// byte-identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); deterministic, bias negligible at desk scale.
  std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  /// Fork a labeled independent stream (stable: label mixed into the state).
  Rng fork(std::uint64_t label) {
    Rng r(state_ ^ (0x632be59bd9b4e019ULL * (label + 1)));
    r.next();
    return r;
  }

private:
  std::uint64_t state_;
};

/// Random homogeneous form: up to max_terms random monomials of degree d.
/// Coefficients are uniform field elements over finite fields and small
/// integers over Q.
template <class F>
Form<F> random_form(const F& field, Rng& rng, int nvars, int degree, int max_terms) {
  auto monos = monomials_of_degree(nvars, degree);
  std::vector<typename Form<F>::Term> ts;
  int terms = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    const Expo& m = monos[rng.next_below(monos.size())];
    typename F::Elem c;
    if constexpr (F::is_finite)
      c = field.element(rng.next_below(field.size()));
    else
      c = field.from_int(static_cast<long>(rng.next_below(9)) - 4);
    if (!field.is_zero(c)) ts.emplace_back(m, c);
  }
  return Form<F>::from_terms(field, nvars, degree, std::move(ts));
}

/// Random nonzero homogeneous form (retries until nonzero).
template <class F>
Form<F> random_nonzero_form(const F& field, Rng& rng, int nvars, int degree, int max_terms) {
  for (int tries = 0; tries < 64; ++tries) {
    auto f = random_form(field, rng, nvars, degree, max_terms);
    if (!f.is_zero()) return f;
  }
  return Form<F>::monomial(field, nvars, monomials_of_degree(nvars, degree).front(), field.one());
}

} // namespace towerlab
