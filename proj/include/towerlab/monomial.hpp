#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "towerlab/error.hpp"

namespace towerlab {

/// Exponent vector of a monomial: one exponent per ambient variable.
struct Expo {
  std::vector<std::uint16_t> e;

  Expo() = default;
  explicit Expo(int nvars) : e(nvars, 0) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool operator==(const Expo&) const = default;
};

inline Expo mul(const Expo& a, const Expo& b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomial ambient mismatch");
  Expo r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + b.e[i]);
  return r;
}

inline bool divides(const Expo& a, const Expo& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Expo quotient(const Expo& b, const Expo& a) {
  Expo r = b;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - a.e[i]);
  return r;
}

inline Expo lcm(const Expo& a, const Expo& b) {
  Expo r = a;
  for (int i = 0; i < r.nvars(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

/// Graded lexicographic order with x1 > x2 > ... (the fixed order everywhere).
/// Returns <0, 0, >0 like strcmp; positive means a > b.
inline int grlex_cmp(const Expo& a, const Expo& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const { return grlex_cmp(a, b) > 0; }
};

/// All exponent vectors of total degree d on n variables, in descending
/// graded-lex order (leading monomial x1^d first).
inline std::vector<Expo> monomials_of_degree(int nvars, int d) {
  std::vector<Expo> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Expo(0));
    return out;
  }
  Expo cur(nvars);
  // recursive enumeration, first variable gets the largest share first
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur.e[var] = static_cast<std::uint16_t>(rem);
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, rem - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Index lookup for the degree-d monomial basis (descending graded-lex order).
class MonomialBasis {
public:
  MonomialBasis(int nvars, int degree)
      : nvars_(nvars), degree_(degree), list_(monomials_of_degree(nvars, degree)) {
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_[list_[i].e] = i;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  const Expo& at(int i) const { return list_[i]; }
  int index_of(const Expo& m) const {
    auto it = index_.find(m.e);
    if (it == index_.end()) throw DomainError("monomial not in basis");
    return it->second;
  }

private:
  int nvars_, degree_;
  std::vector<Expo> list_;
  std::map<std::vector<std::uint16_t>, int> index_;
};

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace towerlab
