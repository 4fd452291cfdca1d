#pragma once

#include "towerlab/io.hpp"
#include "towerlab/multilinear.hpp"
#include "towerlab/rank.hpp"
#include "towerlab/taylor.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

// Tower text format:
//   vars <n>
//   layer <degree>
//   <polynomial>
//   ...
// Multilinear (tower) format:
//   blocks <d>
//   dims <n1> ... <nd>
//   [layer <level>]
//   support {i,j,...}
//   (<i1,...,ik>) = <scalar>      (coordinates 1-based)
// Blocked form format:
//   blocks <m> <n>
//   <polynomial on m*n variables>

template <class F>
std::string format_tower(const F& field, const Tower<F>& T) {
  std::string out = "vars " + std::to_string(T.nvars()) + "\n";
  for (const auto& layer : T.layers()) {
    out += "layer " + std::to_string(layer.degree) + "\n";
    for (const auto& f : layer.forms) out += format_form(field, f) + "\n";
  }
  return out;
}

template <class F>
Tower<F> parse_tower(const F& field, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int nvars = -1, lineno = 0;
  int current_degree = -1;
  std::vector<std::pair<int, std::vector<std::pair<int, std::string>>>> layers; // degree, (line, text)
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "vars") {
      long n;
      if (!(ls >> n) || n < 1) throw ParseError("bad vars header", lineno, 1);
      nvars = static_cast<int>(n);
      continue;
    }
    if (word == "layer") {
      long d;
      if (!(ls >> d) || d < 1) throw ParseError("bad layer header", lineno, 1);
      layers.emplace_back(static_cast<int>(d), std::vector<std::pair<int, std::string>>{});
      current_degree = static_cast<int>(d);
      continue;
    }
    if (current_degree < 0) throw ParseError("polynomial before any layer header", lineno, 1);
    layers.back().second.emplace_back(lineno, line);
  }
  if (nvars < 1) {
    for (const auto& [d, lines] : layers)
      for (const auto& [ln, poly] : lines) nvars = std::max(nvars, parse_form(field, poly).nvars());
    if (nvars < 1) nvars = 1;
  }
  Tower<F> out(nvars);
  int prev = 0;
  for (const auto& [d, lines] : layers) {
    if (d <= prev) throw ParseError("layer degrees must strictly increase", 1, 1);
    prev = d;
    std::vector<Form<F>> forms;
    for (const auto& [ln, poly] : lines) {
      auto f = parse_form(field, poly, nvars);
      if (f.is_zero()) throw ParseError("zero form not allowed in a tower", ln, 1);
      if (f.degree() != d) throw ParseError("form degree does not match its layer", ln, 1);
      forms.push_back(std::move(f));
    }
    out.layers().push_back({d, std::move(forms)});
  }
  return out;
}

template <class F>
std::string format_mlform(const F& field, const MultilinearForm<F>& f) {
  std::string out = "support {";
  for (size_t i = 0; i < f.support.size(); ++i)
    out += (i ? "," : "") + std::to_string(f.support[i]);
  out += "}\n";
  for (const auto& [idx, c] : f.tensor) {
    out += "(";
    for (size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i] + 1);
    out += ") = " + field.to_string(c) + "\n";
  }
  return out;
}

template <class F>
std::string format_mltower(const F& field, const MultilinearTower<F>& T) {
  std::string out = "blocks " + std::to_string(T.space.blocks()) + "\ndims";
  for (int d : T.space.dims) out += " " + std::to_string(d);
  out += "\n";
  for (const auto& layer : T.layers) {
    out += "layer " + std::to_string(layer.level) + "\n";
    for (const auto& f : layer.forms) out += format_mlform(field, f);
  }
  return out;
}

/// Parses a multilinear tower. Each `layer` line opens a fresh layer; without
/// explicit layer lines every `support` header opens its own layer with
/// auto-assigned levels.
template <class F>
MultilinearTower<F> parse_mltower(const F& field, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  MultilinearTower<F> T;
  bool have_blocks = false, have_dims = false;
  bool explicit_layers = false, force_new_layer = false;
  int current_level = 0;
  std::vector<int> support;
  std::vector<typename MultilinearForm<F>::Entry> entries;
  bool in_form = false;
  auto flush_form = [&]() {
    if (!in_form) return;
    bool new_layer = T.layers.empty() || force_new_layer || !explicit_layers ||
                     T.layers.back().support != support;
    if (new_layer) {
      MLLayer<F> nl;
      nl.level = explicit_layers ? current_level : static_cast<int>(T.layers.size()) + 1;
      nl.support = support;
      T.layers.push_back(std::move(nl));
      force_new_layer = false;
    }
    T.layers.back().forms.push_back(
        MultilinearForm<F>::from_entries(field, support, std::move(entries)));
    entries.clear();
    in_form = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "blocks") {
      long d;
      if (!(ls >> d) || d < 1) throw ParseError("bad blocks header", lineno, 1);
      have_blocks = true;
      continue;
    }
    if (word == "dims") {
      long v;
      while (ls >> v) T.space.dims.push_back(static_cast<int>(v));
      have_dims = true;
      continue;
    }
    if (word == "layer") {
      flush_form();
      long lv;
      if (!(ls >> lv)) throw ParseError("bad layer header", lineno, 1);
      current_level = static_cast<int>(lv);
      explicit_layers = true;
      force_new_layer = true;
      continue;
    }
    if (word == "support") {
      flush_form();
      auto open = line.find('{'), close = line.find('}');
      if (open == std::string::npos || close == std::string::npos)
        throw ParseError("support needs {i,j,...}", lineno, 1);
      support.clear();
      std::string inner = line.substr(open + 1, close - open - 1);
      std::istringstream ss(inner);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (tok.find_first_not_of(" \t") != std::string::npos) support.push_back(std::stoi(tok));
      std::sort(support.begin(), support.end());
      in_form = true;
      continue;
    }
    if (word.starts_with("(")) {
      if (!in_form) throw ParseError("tensor entry before a support header", lineno, 1);
      auto close = line.find(')');
      auto eq = line.find('=');
      if (close == std::string::npos || eq == std::string::npos)
        throw ParseError("tensor entry needs (i,...) = value", lineno, 1);
      std::string inner = line.substr(line.find('(') + 1, close - line.find('(') - 1);
      std::vector<std::uint16_t> idx;
      std::istringstream ss(inner);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1) throw ParseError("tensor coordinates are 1-based", lineno, 1);
        idx.push_back(static_cast<std::uint16_t>(v - 1));
      }
      if (idx.size() != support.size())
        throw ParseError("tensor entry arity does not match the support", lineno, 1);
      std::string val = line.substr(eq + 1);
      // scalars use the coefficient grammar: integer or fraction
      auto slash = val.find('/');
      mpz_class num(val.substr(0, slash == std::string::npos ? val.size() : slash));
      mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(val.substr(slash + 1));
      entries.emplace_back(std::move(idx), field.from_fraction(num, den));
      continue;
    }
    throw ParseError("unrecognized line in multilinear file", lineno, 1);
  }
  flush_form();
  if (!have_blocks || !have_dims) throw ParseError("multilinear file needs blocks and dims headers", 1, 1);
  for (const auto& layer : T.layers)
    for (int b : layer.support)
      if (b < 1 || b > T.space.blocks()) throw ParseError("support block out of range", 1, 1);
  return T;
}

template <class F>
std::string format_blocked(const F& field, const BlockedForm<F>& bf) {
  std::string out = "blocks " + std::to_string(bf.blocks) + " " + std::to_string(bf.block_vars) + "\n";
  out += format_form(field, bf.underlying) + "\n";
  return out;
}

template <class F>
std::string format_certificate(const F& field, const StrengthCertificate<F>& cert) {
  std::string out;
  for (const auto& [g, h] : cert.pairs) {
    out += "pair\n";
    out += format_form(field, g) + "\n";
    out += format_form(field, h) + "\n";
  }
  if (!cert.ideal_witness.is_zero()) out += "witness\n" + format_form(field, cert.ideal_witness) + "\n";
  return out;
}

} // namespace towerlab
