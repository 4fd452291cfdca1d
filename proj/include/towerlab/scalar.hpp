#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "towerlab/error.hpp"

namespace towerlab {

// Coefficient fields are passed around as small "field" objects; elements are
// plain values that only make sense together with their field. This keeps
// F_p elements at one machine word and lets every algorithm be written once,
// generically.
//
//   QField   : arbitrary-precision rationals (always canonical lowest terms,
//              positive denominator -- maintained by GMP).
//   FpField  : Z/p for a prime p <= 2^31.
//   Fp2Field : the quadratic extension F_{p^2} = F_p[t]/(t^2 - ns) for odd p,
//              with ns a quadratic nonresidue. Used by the rank oracles as a
//              desk-scale stand-in for the algebraic closure of F_p.

class QField {
public:
  using Elem = mpq_class;
  static constexpr bool is_finite = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DomainError("zero denominator");
    Elem r(num, den);
    r.canonicalize();
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  long characteristic() const { return 0; }
};

class FpField {
public:
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;

  explicit FpField(std::uint32_t p) : p_(p) {
    if (p < 2) throw DomainError("modulus must be >= 2");
  }

  std::uint32_t modulus() const { return p_; }
  std::uint64_t size() const { return p_; }
  Elem element(std::uint64_t index) const { return static_cast<Elem>(index % p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DomainError("zero denominator");
    mpz_class p(p_);
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw DomainError("denominator divisible by the field characteristic");
    return div(static_cast<Elem>(n.get_ui()), static_cast<Elem>(d.get_ui()));
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw DomainError("non-invertible element (composite modulus?)");
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  long characteristic() const { return p_; }

private:
  std::uint32_t p_;
};

class Fp2Field {
public:
  struct Elem {
    std::uint32_t a = 0, b = 0; // a + b*t with t^2 = ns
    bool operator==(const Elem&) const = default;
  };
  static constexpr bool is_finite = true;

  explicit Fp2Field(std::uint32_t p) : base_(p) {
    if (p == 2) throw DomainError("Fp2Field requires odd p");
    ns_ = find_nonresidue();
  }

  std::uint32_t modulus() const { return base_.modulus(); }
  std::uint32_t nonresidue() const { return ns_; }
  std::uint64_t size() const { return std::uint64_t(base_.modulus()) * base_.modulus(); }
  Elem element(std::uint64_t index) const {
    std::uint32_t p = base_.modulus();
    return Elem{static_cast<std::uint32_t>(index % p), static_cast<std::uint32_t>((index / p) % p)};
  }

  Elem zero() const { return Elem{0, 0}; }
  Elem one() const { return Elem{base_.one(), 0}; }
  Elem from_int(long v) const { return Elem{base_.from_int(v), 0}; }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    return Elem{base_.from_fraction(num, den), 0};
  }
  Elem add(Elem x, Elem y) const { return Elem{base_.add(x.a, y.a), base_.add(x.b, y.b)}; }
  Elem sub(Elem x, Elem y) const { return Elem{base_.sub(x.a, y.a), base_.sub(x.b, y.b)}; }
  Elem neg(Elem x) const { return Elem{base_.neg(x.a), base_.neg(x.b)}; }
  Elem mul(Elem x, Elem y) const {
    // (a+bt)(c+dt) = ac + bd*ns + (ad+bc) t
    std::uint32_t ac = base_.mul(x.a, y.a), bd = base_.mul(x.b, y.b);
    std::uint32_t ad = base_.mul(x.a, y.b), bc = base_.mul(x.b, y.a);
    return Elem{base_.add(ac, base_.mul(bd, ns_)), base_.add(ad, bc)};
  }
  Elem inv(Elem x) const {
    // 1/(a+bt) = (a-bt)/(a^2 - ns b^2)
    std::uint32_t n = base_.sub(base_.mul(x.a, x.a), base_.mul(ns_, base_.mul(x.b, x.b)));
    if (n == 0) throw DomainError("division by zero");
    std::uint32_t ni = base_.inv(n);
    return Elem{base_.mul(x.a, ni), base_.mul(base_.neg(x.b), ni)};
  }
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
  bool eq(Elem x, Elem y) const { return x == y; }
  std::string to_string(Elem x) const {
    if (x.b == 0) return std::to_string(x.a);
    return std::to_string(x.a) + "+" + std::to_string(x.b) + "t";
  }
  std::string name() const { return "Fp2:" + std::to_string(base_.modulus()); }
  long characteristic() const { return base_.modulus(); }

private:
  std::uint32_t find_nonresidue() const {
    std::uint32_t p = base_.modulus();
    std::vector<bool> sq(p, false);
    for (std::uint64_t i = 0; i < p; ++i) sq[i * i % p] = true;
    for (std::uint32_t c = 2; c < p; ++c)
      if (!sq[c]) return c;
    throw DomainError("no quadratic nonresidue (p must be an odd prime)");
  }

  FpField base_;
  std::uint32_t ns_;
};

} // namespace towerlab
