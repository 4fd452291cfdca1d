#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "towerlab/form.hpp"
#include "towerlab/poly.hpp"

namespace towerlab {

// Polynomial text grammar (UTF-8, bit-exact):
//   poly   := ['-'] term (('+'|'-') term)*   |   '0'
//   term   := coeff ['*' factors] | factors
//   coeff  := integer ['/' integer]
//   factors:= factor ('*' factor)*
//   factor := 'x' index ['^' exponent]
// Variables are x1..xn. Example: 3/2*x1^2*x3 - x2^3

namespace detail {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char take() {
    char c = s[pos++];
    if (c == '\n') { ++line; col = 1; } else { ++col; }
    return c;
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) take();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

inline mpz_class parse_integer(Cursor& c) {
  c.skip_ws();
  std::string digits;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits.push_back(c.take());
  if (digits.empty()) c.fail("expected an integer");
  return mpz_class(digits);
}

} // namespace detail

namespace detail {

struct RawTerm {
  mpz_class num, den;
  std::vector<std::pair<int, int>> factors; // (variable index, exponent)
};

struct RawPoly {
  std::vector<RawTerm> terms;
  int max_var = 0;
};

inline RawPoly parse_raw(const std::string& text) {
  Cursor c{text};
  RawPoly out;
  auto& raw = out.terms;
  int& max_var = out.max_var;

  c.skip_ws();
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) {
      if (first) c.fail("empty polynomial");
      break;
    }
    mpz_class sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.take() == '-') sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    RawTerm t{sign, 1, {}};
    bool saw_coeff = false, saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      t.num *= detail::parse_integer(c);
      saw_coeff = true;
      c.skip_ws();
      if (c.peek() == '/') {
        c.take();
        t.den = detail::parse_integer(c);
        if (t.den == 0) c.fail("zero denominator");
        c.skip_ws();
      }
    }
    bool expect_factor = false;
    if (saw_coeff && c.peek() == '*') {
      c.take();
      expect_factor = true;
    }
    while (true) {
      c.skip_ws();
      if (c.peek() == 'x') {
        c.take();
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected variable index after 'x'");
        mpz_class idx = detail::parse_integer(c);
        if (idx < 1 || idx > 64) c.fail("variable index out of range");
        int var = static_cast<int>(idx.get_si());
        max_var = std::max(max_var, var);
        int exp = 1;
        c.skip_ws();
        if (c.peek() == '^') {
          c.take();
          mpz_class e = detail::parse_integer(c);
          if (e < 0 || e > 4096) c.fail("exponent out of range");
          exp = static_cast<int>(e.get_si());
        }
        t.factors.emplace_back(var, exp);
        saw_factor = true;
        c.skip_ws();
        if (c.peek() == '*') {
          c.take();
          expect_factor = true;
          continue;
        }
        expect_factor = false;
        break;
      }
      if (expect_factor) c.fail("expected a variable factor after '*'");
      break;
    }
    if (!saw_coeff && !saw_factor) c.fail("expected a term");
    raw.push_back(std::move(t));
    first = false;
  }
  return out;
}

} // namespace detail

/// Parses one homogeneous polynomial. If nvars < 0 the ambient size is the
/// largest variable index that appears (at least 1).
template <class F>
Form<F> parse_form(const F& field, const std::string& text, int nvars = -1) {
  auto raw = detail::parse_raw(text);
  if (nvars < 0) nvars = std::max(raw.max_var, 1);
  if (raw.max_var > nvars) throw ParseError("variable index exceeds ambient size", 1, 1);

  // degree = common total degree of the nonzero terms
  int degree = -1;
  std::vector<typename Form<F>::Term> terms;
  for (const auto& t : raw.terms) {
    Expo m(nvars);
    for (auto [var, exp] : t.factors) m.e[var - 1] = static_cast<std::uint16_t>(m.e[var - 1] + exp);
    auto coeff = field.from_fraction(t.num, t.den);
    if (field.is_zero(coeff)) continue;
    if (degree < 0) degree = m.total_degree();
    if (m.total_degree() != degree)
      throw ParseError("inhomogeneous polynomial: mixed total degrees " + std::to_string(degree) +
                           " and " + std::to_string(m.total_degree()),
                       1, 1);
    terms.emplace_back(m, coeff);
  }
  if (degree < 0) degree = 0; // the zero form parses as degree 0
  return Form<F>::from_terms(field, nvars, degree, std::move(terms));
}

/// Parses one possibly non-homogeneous polynomial (the Groebner engine's
/// input grammar; same syntax as forms).
template <class F>
Poly<F> parse_poly(const F& field, const std::string& text, int nvars = -1) {
  auto raw = detail::parse_raw(text);
  if (nvars < 0) nvars = std::max(raw.max_var, 1);
  if (raw.max_var > nvars) throw ParseError("variable index exceeds ambient size", 1, 1);
  std::vector<typename Poly<F>::Term> terms;
  for (const auto& t : raw.terms) {
    Expo m(nvars);
    for (auto [var, exp] : t.factors) m.e[var - 1] = static_cast<std::uint16_t>(m.e[var - 1] + exp);
    terms.emplace_back(m, field.from_fraction(t.num, t.den));
  }
  return Poly<F>::normalize(field, nvars, std::move(terms));
}

namespace detail {

// Sign-split view of a coefficient for pretty printing. Over Q the sign is
// genuine; over F_p everything is printed as a nonnegative residue.
inline std::pair<bool, std::string> signed_repr(const QField& f, const mpq_class& c) {
  if (c < 0) return {true, mpq_class(-c).get_str()};
  return {false, c.get_str()};
}
template <class F>
std::pair<bool, std::string> signed_repr(const F& f, const typename F::Elem& c) {
  return {false, f.to_string(c)};
}

} // namespace detail

template <class F>
std::string format_form(const F& field, const Form<F>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    auto [negative, mag] = detail::signed_repr(field, c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < f.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
    }
    if (factors.empty())
      out += mag;
    else if (mag == "1")
      out += factors;
    else
      out += mag + "*" + factors;
    first = false;
  }
  return out;
}

template <class F>
std::string format_poly(const F& field, const Poly<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    auto [negative, mag] = detail::signed_repr(field, c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < p.nvars; ++i) {
      if (m.e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
    }
    if (factors.empty())
      out += mag;
    else if (mag == "1")
      out += factors;
    else
      out += mag + "*" + factors;
    first = false;
  }
  return out;
}

/// Form list files: optional "vars <n>" header, '#' comments, one polynomial
/// per nonempty line.
template <class F>
std::vector<Form<F>> parse_form_list(const F& field, const std::string& text, int nvars = -1) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> polys;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "vars") {
      long n = -1;
      if (!(ls >> n) || n < 1 || n > 64) throw ParseError("bad vars header", lineno, 1);
      nvars = static_cast<int>(n);
      continue;
    }
    polys.push_back(line);
  }
  // two passes so every form shares one inferred ambient size
  if (nvars < 0) {
    int max_var = 1;
    for (const auto& p : polys) {
      Form<F> probe = parse_form(field, p, -1);
      max_var = std::max(max_var, probe.nvars());
    }
    nvars = max_var;
  }
  std::vector<Form<F>> out;
  for (const auto& p : polys) out.push_back(parse_form(field, p, nvars));
  return out;
}

template <class F>
std::string format_form_list(const F& field, const std::vector<Form<F>>& forms, int nvars) {
  std::string out = "vars " + std::to_string(nvars) + "\n";
  for (const auto& f : forms) out += format_form(field, f) + "\n";
  return out;
}

} // namespace towerlab
