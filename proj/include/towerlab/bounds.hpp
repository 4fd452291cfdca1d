#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "towerlab/tower.hpp"

namespace towerlab {

/// Generic-strength threshold (m - s) / (d * 2^d).
inline mpq_class genstr_threshold(long m, long s, long d) {
  if (d < 1 || s < 1 || m < d) throw DomainError("genstr_threshold needs m >= d >= 1, s >= 1");
  mpq_class denom = d;
  for (long k = 0; k < d; ++k) denom *= 2;
  mpq_class out(m - s);
  out /= denom;
  return out;
}

/// Weak-approximation threshold s(s+1)(d-1)2^(d-1).
inline mpz_class skinner_threshold(long s, long d) {
  if (s < 1 || d < 2) throw DomainError("skinner_threshold needs s >= 1, d >= 2");
  mpz_class out = s;
  out *= (s + 1);
  out *= (d - 1);
  for (long k = 1; k < d; ++k) out *= 2;
  return out;
}

/// Strength level A*m^(d*B) required of a tower so its Taylor tower is
/// (A,B,r)-strong.
inline mpq_class taylor_strong_scaling(const mpq_class& A, long B, long m, long d) {
  if (A <= 0 || B < 1 || m < 1 || d < 1) throw DomainError("taylor_strong_scaling needs positive inputs");
  mpq_class out = A;
  for (long k = 0; k < d * B; ++k) out *= m;
  return out;
}

/// A value in the bound pipeline: an exact rational with provenance, or a
/// named symbolic expression. Symbols never silently coerce to numbers.
struct BoundValue {
  std::optional<mpq_class> number;
  std::string text; // symbolic rendering; for numbers, the exact value

  static BoundValue num(mpq_class q) {
    BoundValue v;
    v.text = q.get_str();
    v.number = std::move(q);
    return v;
  }
  static BoundValue sym(std::string s) {
    BoundValue v;
    v.text = std::move(s);
    return v;
  }
  bool is_number() const { return number.has_value(); }
};

struct PipelineStep {
  std::string id;          // stable machine id, also the replay dispatch key
  std::string formula;     // human-readable formula
  std::vector<std::pair<std::string, BoundValue>> inputs;
  BoundValue output;
  std::string note;
};

struct PipelineReport {
  long d = 0, s = 0;
  std::vector<PipelineStep> steps;

  const PipelineStep* find(const std::string& id) const {
    for (const auto& st : steps)
      if (st.id == id) return &st;
    return nullptr;
  }
};

namespace detail {

inline BoundValue bv_pow(const BoundValue& base, const BoundValue& exp, const std::string& rendered) {
  if (base.is_number() && exp.is_number()) {
    mpz_class e(exp.number->get_num());
    if (exp.number->get_den() != 1 || e < 0) return BoundValue::sym(rendered);
    mpq_class acc = 1;
    for (mpz_class k = 0; k < e; ++k) acc *= *base.number;
    return BoundValue::num(acc);
  }
  return BoundValue::sym(rendered);
}

inline BoundValue bv_mul(const BoundValue& a, const BoundValue& b, const std::string& rendered) {
  if (a.is_number() && b.is_number()) return BoundValue::num(*a.number * *b.number);
  return BoundValue::sym(rendered);
}

inline BoundValue bv_add(const BoundValue& a, const BoundValue& b, const std::string& rendered) {
  if (a.is_number() && b.is_number()) return BoundValue::num(*a.number + *b.number);
  return BoundValue::sym(rendered);
}

} // namespace detail

/// Traces the explicit-bound pipeline for s forms of degree <= d:
/// the diagonal-solvability error term, the regularization size recursion,
/// and the codimension conclusion, with placeholders wherever only existence
/// of a constant is known. `assign` may inject values for the placeholder
/// names A_dense, B_dense, C_reg, D_reg and phi_2..phi_d.
inline PipelineReport pipeline_bound(long d, long s,
                                     const std::map<long, mpq_class>& phi = {},
                                     const std::map<std::string, mpq_class>& assign = {}) {
  if (d < 2 || s < 1) throw DomainError("pipeline needs d >= 2, s >= 1");
  PipelineReport rep;
  rep.d = d;
  rep.s = s;

  auto lookup = [&](const std::string& name) -> BoundValue {
    auto it = assign.find(name);
    if (it != assign.end()) return BoundValue::num(it->second);
    return BoundValue::sym(name);
  };

  // 1. the error parameter r = phi_2 + ... + phi_d
  BoundValue r_val;
  {
    bool all = true;
    mpq_class sum = 0;
    std::string sym;
    for (long k = 2; k <= d; ++k) {
      auto it = phi.find(k);
      if (it == phi.end()) {
        auto asn = assign.find("phi_" + std::to_string(k));
        if (asn != assign.end()) {
          sum += asn->second;
        } else {
          all = false;
        }
      } else {
        sum += it->second;
      }
      sym += (k > 2 ? "+" : "") + std::string("phi_") + std::to_string(k);
    }
    r_val = all ? BoundValue::num(sum) : BoundValue::sym(sym);
    PipelineStep st;
    st.id = "phi-sum";
    st.formula = "r = phi_2 + ... + phi_d";
    for (long k = 2; k <= d; ++k) {
      auto it = phi.find(k);
      st.inputs.emplace_back("phi_" + std::to_string(k),
                             it != phi.end() ? BoundValue::num(it->second)
                                             : lookup("phi_" + std::to_string(k)));
    }
    st.output = r_val;
    st.note = "diagonal-solvability counts supplied by the user (cited-external defaults allowed)";
    rep.steps.push_back(std::move(st));
  }

  // 2. concrete side constant: weak-approximation threshold
  {
    PipelineStep st;
    st.id = "skinner";
    st.formula = "s(s+1)(d-1)2^(d-1)";
    st.inputs.emplace_back("s", BoundValue::num(mpq_class(s)));
    st.inputs.emplace_back("d", BoundValue::num(mpq_class(d)));
    st.output = BoundValue::num(mpq_class(skinner_threshold(s, d)));
    rep.steps.push_back(std::move(st));
  }

  // 3. concrete side constant: the generic-strength denominator d*2^d
  {
    PipelineStep st;
    st.id = "genstr-denominator";
    st.formula = "d*2^d (generic strength threshold is (m-s)/(d*2^d))";
    st.inputs.emplace_back("d", BoundValue::num(mpq_class(d)));
    mpq_class denom = d;
    for (long k = 0; k < d; ++k) denom *= 2;
    st.output = BoundValue::num(denom);
    rep.steps.push_back(std::move(st));
  }

  // 4. strongness level required of the tower (density-side constants)
  BoundValue A = lookup("A_dense"), B = lookup("B_dense");
  {
    PipelineStep st;
    st.id = "dense-requirement";
    st.formula = "tower must be absolutely (A_dense, B_dense, r)-strong";
    st.inputs.emplace_back("A_dense", A);
    st.inputs.emplace_back("B_dense", B);
    st.inputs.emplace_back("r", r_val);
    st.output = BoundValue::sym("(A_dense," + B.text + ",r)-strong");
    st.note = "existence-only constants stay symbolic unless assigned";
    rep.steps.push_back(std::move(st));
  }

  // 5. regularity transfer constants
  BoundValue C = lookup("C_reg"), D = lookup("D_reg");
  {
    PipelineStep st;
    st.id = "reg-transfer";
    st.formula = "(C_reg, D_reg, r)-strong implies absolutely (A_dense, B_dense, r)-strong";
    st.inputs.emplace_back("C_reg", C);
    st.inputs.emplace_back("D_reg", D);
    st.output = BoundValue::sym("(C_reg," + D.text + ",r)-strong suffices");
    rep.steps.push_back(std::move(st));
  }

  // 6. regularization size bound via the recursion (worst profile m_i = s)
  BoundValue size_val;
  {
    PipelineStep st;
    st.id = "predicted-size";
    st.formula = "n_d = m_d, n_i = m_i + C*n_{i+1}^(D+1); bound = n_1 with m_i = s";
    st.inputs.emplace_back("C", C);
    st.inputs.emplace_back("D", D);
    st.inputs.emplace_back("s", BoundValue::num(mpq_class(s)));
    if (C.is_number() && D.is_number() && D.number->get_den() == 1) {
      std::vector<long> profile(d, s);
      auto n = predicted_size(profile, *C.number, D.number->get_num().get_si());
      size_val = BoundValue::num(mpq_class(n[0]));
      st.note = "recursion evaluated exactly";
    } else {
      size_val = BoundValue::sym("E*(s+r)^F");
      st.note = "symbolic: E, F depend on the unassigned C_reg, D_reg";
    }
    st.output = size_val;
    rep.steps.push_back(std::move(st));
  }

  // 7. the codimension conclusion
  {
    PipelineStep st;
    st.id = "codim-conclusion";
    st.formula = "codim of the closure of the rational zeros <= tower size";
    st.inputs.emplace_back("size", size_val);
    st.inputs.emplace_back("r", r_val);
    st.output = size_val.is_number() && r_val.is_number()
                    ? size_val
                    : BoundValue::sym(size_val.text + " with r = " + r_val.text);
    rep.steps.push_back(std::move(st));
  }

  // 8. totally imaginary specialization: r <= e^(2d+1)
  {
    PipelineStep st;
    st.id = "imaginary-r";
    st.formula = "s + e^(2d+1)";
    st.inputs.emplace_back("s", BoundValue::num(mpq_class(s)));
    st.inputs.emplace_back("d", BoundValue::num(mpq_class(d)));
    std::ostringstream os;
    double ev = std::exp(static_cast<double>(2 * d + 1));
    os.setf(std::ios::fixed);
    os.precision(2);
    os << ev;
    st.output = BoundValue::sym("s + e^" + std::to_string(2 * d + 1));
    st.note = "e^" + std::to_string(2 * d + 1) + " ~ " + os.str() + " (kept symbolic; decimal on demand)";
    rep.steps.push_back(std::move(st));
  }

  return rep;
}

/// Recomputes every numeric pipeline cell from its recorded inputs; true iff
/// all agree (the replay check).
inline bool replay_pipeline(const PipelineReport& rep) {
  for (const auto& st : rep.steps) {
    if (!st.output.is_number()) continue;
    auto in = [&](const std::string& name) -> const BoundValue* {
      for (const auto& [k, v] : st.inputs)
        if (k == name) return &v;
      return nullptr;
    };
    if (st.id == "phi-sum") {
      mpq_class sum = 0;
      for (const auto& [k, v] : st.inputs) {
        if (!v.is_number()) return false;
        sum += *v.number;
      }
      if (sum != *st.output.number) return false;
    } else if (st.id == "skinner") {
      if (mpq_class(skinner_threshold(rep.s, rep.d)) != *st.output.number) return false;
    } else if (st.id == "genstr-denominator") {
      mpq_class denom = rep.d;
      for (long k = 0; k < rep.d; ++k) denom *= 2;
      if (denom != *st.output.number) return false;
    } else if (st.id == "predicted-size") {
      const BoundValue *C = in("C"), *D = in("D");
      if (!C || !D || !C->is_number() || !D->is_number()) return false;
      std::vector<long> profile(rep.d, rep.s);
      auto n = predicted_size(profile, *C->number, D->number->get_num().get_si());
      if (mpq_class(n[0]) != *st.output.number) return false;
    } else if (st.id == "codim-conclusion") {
      const BoundValue* size = in("size");
      if (!size || !size->is_number() || *size->number != *st.output.number) return false;
    }
  }
  return true;
}

} // namespace towerlab
