#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "towerlab/linalg.hpp"
#include "towerlab/taylor.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

/// Block structure of V^{[d]}: dims[j-1] is the dimension of block j.
struct BlockSpace {
  std::vector<int> dims;

  int blocks() const { return static_cast<int>(dims.size()); }
  int dim(int block /*1-based*/) const { return dims[block - 1]; }
  int var_offset(int block) const {
    int off = 0;
    for (int b = 1; b < block; ++b) off += dims[b - 1];
    return off;
  }
  int total_vars() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

/// Multilinear form supported on a subset of blocks. The tensor maps index
/// tuples (one 0-based index per support block, in support order) to nonzero
/// coefficients; entries sorted lexicographically. A zero form keeps its
/// support: fixing coordinates may zero a form and its slot still counts.
template <class F>
struct MultilinearForm {
  using Elem = typename F::Elem;
  using Entry = std::pair<std::vector<std::uint16_t>, Elem>;

  std::vector<int> support; // sorted, 1-based block ids
  std::vector<Entry> tensor;

  bool is_zero() const { return tensor.empty(); }
  int degree() const { return static_cast<int>(support.size()); }

  static MultilinearForm from_entries(const F& field, std::vector<int> support,
                                      std::vector<Entry> entries) {
    std::sort(support.begin(), support.end());
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    MultilinearForm f;
    f.support = std::move(support);
    for (auto& e : entries) {
      if (!f.tensor.empty() && f.tensor.back().first == e.first)
        f.tensor.back().second = field.add(f.tensor.back().second, e.second);
      else
        f.tensor.push_back(std::move(e));
    }
    std::erase_if(f.tensor, [&](const Entry& e) { return field.is_zero(e.second); });
    return f;
  }

  bool equals(const F& field, const MultilinearForm& o) const {
    if (support != o.support || tensor.size() != o.tensor.size()) return false;
    for (size_t i = 0; i < tensor.size(); ++i)
      if (tensor[i].first != o.tensor[i].first || !field.eq(tensor[i].second, o.tensor[i].second))
        return false;
    return true;
  }
};

template <class F>
MultilinearForm<F> add(const F& field, const MultilinearForm<F>& a, const MultilinearForm<F>& b) {
  if (a.support != b.support) throw DomainError("support mismatch in multilinear addition");
  auto entries = a.tensor;
  entries.insert(entries.end(), b.tensor.begin(), b.tensor.end());
  return MultilinearForm<F>::from_entries(field, a.support, std::move(entries));
}

template <class F>
MultilinearForm<F> scale(const F& field, const MultilinearForm<F>& a, const typename F::Elem& c) {
  if (field.is_zero(c)) return MultilinearForm<F>{a.support, {}};
  auto entries = a.tensor;
  for (auto& e : entries) e.second = field.mul(e.second, c);
  return MultilinearForm<F>::from_entries(field, a.support, std::move(entries));
}

/// Product of multilinear forms on disjoint supports.
template <class F>
MultilinearForm<F> disjoint_product(const F& field, const MultilinearForm<F>& a,
                                    const MultilinearForm<F>& b) {
  std::vector<int> support = a.support;
  for (int s : b.support) {
    if (std::binary_search(a.support.begin(), a.support.end(), s))
      throw DomainError("supports overlap in multilinear product");
    support.push_back(s);
  }
  std::sort(support.begin(), support.end());
  std::vector<typename MultilinearForm<F>::Entry> entries;
  for (const auto& [ia, ca] : a.tensor)
    for (const auto& [ib, cb] : b.tensor) {
      std::vector<std::uint16_t> idx(support.size());
      for (size_t k = 0; k < support.size(); ++k) {
        auto ita = std::find(a.support.begin(), a.support.end(), support[k]);
        if (ita != a.support.end())
          idx[k] = ia[ita - a.support.begin()];
        else {
          auto itb = std::find(b.support.begin(), b.support.end(), support[k]);
          idx[k] = ib[itb - b.support.begin()];
        }
      }
      entries.emplace_back(std::move(idx), field.mul(ca, cb));
    }
  return MultilinearForm<F>::from_entries(field, support, std::move(entries));
}

/// Plug a vector into one support block; the support shrinks by that block.
template <class F>
MultilinearForm<F> contract(const F& field, const MultilinearForm<F>& f, int block,
                            const std::vector<typename F::Elem>& x) {
  auto it = std::find(f.support.begin(), f.support.end(), block);
  if (it == f.support.end()) throw DomainError("block not in support");
  size_t pos = it - f.support.begin();
  std::vector<int> new_support = f.support;
  new_support.erase(new_support.begin() + pos);
  std::vector<typename MultilinearForm<F>::Entry> entries;
  for (const auto& [idx, c] : f.tensor) {
    if (idx[pos] >= x.size()) throw DomainError("contraction vector too short");
    auto coeff = field.mul(c, x[idx[pos]]);
    if (field.is_zero(coeff)) continue;
    std::vector<std::uint16_t> nidx = idx;
    nidx.erase(nidx.begin() + pos);
    entries.emplace_back(std::move(nidx), coeff);
  }
  return MultilinearForm<F>::from_entries(field, new_support, std::move(entries));
}

template <class F>
typename F::Elem evaluate(const F& field, const MultilinearForm<F>& f,
                          const std::map<int, std::vector<typename F::Elem>>& points) {
  MultilinearForm<F> cur = f;
  for (int b : f.support) {
    auto it = points.find(b);
    if (it == points.end()) throw DomainError("missing evaluation block");
    cur = contract(field, cur, b, it->second);
  }
  if (cur.is_zero()) return field.zero();
  return cur.tensor.front().second;
}

/// The underlying polynomial on the concatenated coordinates of `space`
/// (block j owns variables var_offset(j)+1 .. var_offset(j)+dims[j]).
template <class F>
Form<F> flatten(const F& field, const MultilinearForm<F>& f, const BlockSpace& space) {
  const int n = space.total_vars();
  std::vector<typename Form<F>::Term> ts;
  for (const auto& [idx, c] : f.tensor) {
    Expo m(n);
    for (size_t k = 0; k < f.support.size(); ++k)
      m.e[space.var_offset(f.support[k]) + idx[k]] += 1;
    ts.emplace_back(m, c);
  }
  return Form<F>::from_terms(field, n, f.degree(), std::move(ts));
}

/// Enumeration basis of the tensor coordinate space on the given support.
inline std::vector<std::vector<std::uint16_t>> tensor_index_space(const BlockSpace& space,
                                                                  const std::vector<int>& support) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> cur(support.size(), 0);
  if (support.empty()) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    int pos = static_cast<int>(support.size()) - 1;
    while (pos >= 0) {
      if (++cur[pos] < space.dim(support[pos])) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

template <class F>
std::vector<typename F::Elem> tensor_to_vector(const F& field, const MultilinearForm<F>& f,
                                               const std::vector<std::vector<std::uint16_t>>& index_space) {
  std::vector<typename F::Elem> v(index_space.size(), field.zero());
  std::map<std::vector<std::uint16_t>, int> lookup;
  for (int i = 0; i < static_cast<int>(index_space.size()); ++i) lookup[index_space[i]] = i;
  for (const auto& [idx, c] : f.tensor) v[lookup.at(idx)] = c;
  return v;
}

/// Polarization: the multidegree-(1,...,1) Taylor component of f, as a
/// multilinear form on d blocks of n variables. Symmetric under block
/// permutations; on the diagonal it evaluates to d! * f. Over F_p this
/// requires p > d (the defining identities divide by d!), and we refuse
/// rather than return something the identities do not govern.
template <class F>
MultilinearForm<F> polarize(const F& field, const Form<F>& f) {
  const int d = f.degree();
  const int n = f.nvars();
  if (d < 1) throw DomainError("polarization needs degree >= 1");
  long p = field.characteristic();
  if (p != 0 && p <= d) throw DomainError("polarization needs characteristic 0 or p > degree");
  auto components = taylor_expand(field, f, d);
  MultiDegree ones;
  ones.e.assign(d, 1);
  std::vector<int> support(d);
  for (int j = 0; j < d; ++j) support[j] = j + 1;
  auto it = components.find(ones);
  if (it == components.end()) return MultilinearForm<F>{support, {}};
  std::vector<typename MultilinearForm<F>::Entry> entries;
  for (const auto& [mono, c] : it->second.underlying.terms()) {
    std::vector<std::uint16_t> idx(d, 0);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < n; ++i)
        if (mono.e[j * n + i] == 1) idx[j] = static_cast<std::uint16_t>(i);
    }
    entries.emplace_back(std::move(idx), c);
  }
  return MultilinearForm<F>::from_entries(field, support, std::move(entries));
}

/// Relabel the support blocks of a polarized form (blocks 1..d) onto the
/// sorted target subset.
template <class F>
MultilinearForm<F> place_on_blocks(const MultilinearForm<F>& f, const std::vector<int>& target) {
  if (target.size() != f.support.size()) throw DomainError("support size mismatch");
  MultilinearForm<F> out = f;
  out.support = target;
  std::sort(out.support.begin(), out.support.end());
  return out;
}

template <class F>
struct MLLayer {
  int level = 0; // layers sharing a level are mutual siblings in prefixes
  std::vector<int> support;
  std::vector<MultilinearForm<F>> forms;
};

template <class F>
struct MultilinearTower {
  BlockSpace space;
  std::vector<MLLayer<F>> layers;

  int total_size() const {
    int s = 0;
    for (const auto& l : layers) s += static_cast<int>(l.forms.size());
    return s;
  }
  int size_from(int layer_index) const {
    int s = 0;
    for (int i = layer_index; i < static_cast<int>(layers.size()); ++i)
      s += static_cast<int>(layers[i].forms.size());
    return s;
  }

  /// Modulus forms for the given layer: all layers of strictly smaller level,
  /// plus sibling layers (same level, different index). For towers with
  /// distinct levels this is the plain "everything before" prefix.
  std::vector<MultilinearForm<F>> prefix_forms(int layer_index) const {
    std::vector<MultilinearForm<F>> out;
    for (int i = 0; i < static_cast<int>(layers.size()); ++i) {
      if (i == layer_index) continue;
      if (layers[i].level <= layers[layer_index].level)
        for (const auto& f : layers[i].forms) out.push_back(f);
    }
    return out;
  }

  std::vector<MultilinearForm<F>> all_forms() const {
    std::vector<MultilinearForm<F>> out;
    for (const auto& l : layers)
      for (const auto& f : l.forms) out.push_back(f);
    return out;
  }
};

/// All d_i-element subsets of [d] in ascending lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= d; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Polarized tower on V^{[d]}: layer i of degree d_i yields one layer per
/// d_i-subset I of [d] carrying the polarizations placed on blocks I. Layers
/// are consecutive in i and lexicographic in I; subsets of one source layer
/// share a level (the prefix at (i, I) contains all siblings I' != I).
template <class F>
MultilinearTower<F> polarized_tower(const F& field, const Tower<F>& tower, int d = -1) {
  MultilinearTower<F> out;
  int maxdeg = 0;
  for (const auto& l : tower.layers()) maxdeg = std::max(maxdeg, l.degree);
  if (d < 0) d = maxdeg;
  if (d < maxdeg) throw DomainError("polarized tower needs d >= max layer degree");
  out.space.dims.assign(d, tower.nvars());
  int level = 0;
  for (const auto& layer : tower.layers()) {
    ++level;
    std::vector<MultilinearForm<F>> polarized;
    for (const auto& f : layer.forms) polarized.push_back(polarize(field, f));
    for (const auto& I : subsets_of_size(d, layer.degree)) {
      MLLayer<F> ml;
      ml.level = level;
      ml.support = I;
      for (const auto& pf : polarized) ml.forms.push_back(place_on_blocks(pf, I));
      out.layers.push_back(std::move(ml));
    }
  }
  return out;
}

template <class F>
struct FixResult {
  MultilinearTower<F> tower;
  std::vector<std::string> warnings; // nonzero values of dropped layers at x
};

/// Fix the blocks in I at the point x (one vector per block of I). Layers
/// fully inside I are dropped (they are the base equations); the rest have
/// those blocks substituted. Forms that become zero are retained with their
/// shrunken support, since layer sizes feed the strongness thresholds.
template <class F>
FixResult<F> fix_coordinates(const F& field, const MultilinearTower<F>& T, const std::set<int>& I,
                             const std::map<int, std::vector<typename F::Elem>>& x) {
  for (int b : I) {
    auto it = x.find(b);
    if (it == x.end()) throw DomainError("missing coordinates for a fixed block");
    if (static_cast<int>(it->second.size()) != T.space.dim(b))
      throw DomainError("fixed coordinate dimension mismatch");
  }
  FixResult<F> out;
  out.tower.space = T.space;
  for (const auto& layer : T.layers) {
    bool inside = std::all_of(layer.support.begin(), layer.support.end(),
                              [&](int b) { return I.count(b) > 0; });
    if (inside) {
      for (size_t j = 0; j < layer.forms.size(); ++j) {
        auto val = evaluate(field, layer.forms[j], x);
        if (!field.is_zero(val))
          out.warnings.push_back("dropped form (level " + std::to_string(layer.level) +
                                 ", index " + std::to_string(j) + ") is nonzero at the fixed point");
      }
      continue;
    }
    MLLayer<F> nl;
    nl.level = layer.level;
    for (int b : layer.support)
      if (!I.count(b)) nl.support.push_back(b);
    for (const auto& f : layer.forms) {
      MultilinearForm<F> cur = f;
      for (int b : layer.support)
        if (I.count(b)) cur = contract(field, cur, b, x.at(b));
      nl.forms.push_back(std::move(cur));
    }
    out.tower.layers.push_back(std::move(nl));
  }
  return out;
}

template <class F>
struct CloneResult {
  MultilinearTower<F> tower;
  // External cloning appends fresh blocks; relabel[c-1] maps each original
  // block of I to the block holding its c-th copy (c = 1 maps identically).
  std::vector<std::map<int, int>> relabel;
};

/// External cloning of degree m over I: every form whose support meets I is
/// copied m times onto disjoint fresh copies of the I-blocks; each copy index
/// becomes its own layer. New blocks are appended after block d in clone
/// order.
template <class F>
CloneResult<F> clone_external(const MultilinearTower<F>& T, const std::set<int>& I, int m) {
  if (m < 1) throw DomainError("cloning degree must be >= 1");
  const int d = T.space.blocks();
  for (int b : I)
    if (b < 1 || b > d) throw DomainError("clone subset out of range");
  CloneResult<F> out;
  out.tower.space = T.space;
  std::vector<int> I_sorted(I.begin(), I.end());
  for (int c = 1; c <= m; ++c) {
    std::map<int, int> tab;
    for (size_t k = 0; k < I_sorted.size(); ++k) {
      int b = I_sorted[k];
      tab[b] = (c == 1) ? b : d + (c - 2) * static_cast<int>(I_sorted.size()) + static_cast<int>(k) + 1;
    }
    out.relabel.push_back(tab);
  }
  for (int c = 2; c <= m; ++c)
    for (int b : I_sorted) out.tower.space.dims.push_back(T.space.dim(b));

  int level = 0;
  for (const auto& layer : T.layers) {
    bool meets = std::any_of(layer.support.begin(), layer.support.end(),
                             [&](int b) { return I.count(b) > 0; });
    if (!meets) {
      MLLayer<F> nl = layer;
      nl.level = ++level;
      out.tower.layers.push_back(std::move(nl));
      continue;
    }
    for (int c = 1; c <= m; ++c) {
      MLLayer<F> nl;
      nl.level = ++level;
      const auto& tab = out.relabel[c - 1];
      nl.support = layer.support;
      for (auto& b : nl.support)
        if (tab.count(b)) b = tab.at(b);
      std::sort(nl.support.begin(), nl.support.end());
      for (const auto& f : layer.forms) {
        MultilinearForm<F> nf = f;
        for (auto& b : nf.support)
          if (tab.count(b)) b = tab.at(b);
        // support stays sorted: clone labels preserve relative order, and all
        // clone labels exceed the untouched ones only for c >= 2
        std::vector<size_t> perm(nf.support.size());
        for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        std::sort(perm.begin(), perm.end(),
                  [&](size_t a, size_t b2) { return nf.support[a] < nf.support[b2]; });
        MultilinearForm<F> sorted_f;
        for (size_t k = 0; k < perm.size(); ++k) sorted_f.support.push_back(nf.support[perm[k]]);
        for (const auto& [idx, coef] : nf.tensor) {
          std::vector<std::uint16_t> nidx(idx.size());
          for (size_t k = 0; k < perm.size(); ++k) nidx[k] = idx[perm[k]];
          sorted_f.tensor.emplace_back(std::move(nidx), coef);
        }
        std::sort(sorted_f.tensor.begin(), sorted_f.tensor.end(),
                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
        nl.forms.push_back(std::move(sorted_f));
      }
      out.tower.layers.push_back(std::move(nl));
    }
  }
  return out;
}

/// Internal cloning of degree m over I: the I-blocks become m-fold direct
/// sums and every form yields m copies reading from its own summand. Layer
/// count is preserved (each layer grows m-fold).
template <class F>
MultilinearTower<F> clone_internal(const MultilinearTower<F>& T, const std::set<int>& I, int m) {
  if (m < 1) throw DomainError("cloning degree must be >= 1");
  MultilinearTower<F> out;
  out.space = T.space;
  for (int b : I) {
    if (b < 1 || b > T.space.blocks()) throw DomainError("clone subset out of range");
    out.space.dims[b - 1] = T.space.dim(b) * m;
  }
  for (const auto& layer : T.layers) {
    MLLayer<F> nl;
    nl.level = layer.level;
    nl.support = layer.support;
    for (const auto& f : layer.forms) {
      bool meets = std::any_of(f.support.begin(), f.support.end(),
                               [&](int b) { return I.count(b) > 0; });
      int copies = meets ? m : 1;
      for (int c = 1; c <= copies; ++c) {
        MultilinearForm<F> nf = f;
        for (auto& [idx, coef] : nf.tensor)
          for (size_t k = 0; k < nf.support.size(); ++k)
            if (I.count(nf.support[k]))
              idx[k] = static_cast<std::uint16_t>((c - 1) * T.space.dim(nf.support[k]) + idx[k]);
        nl.forms.push_back(std::move(nf));
      }
    }
    out.layers.push_back(std::move(nl));
  }
  return out;
}

/// Family of proper subsets of [d], each containing block 1.
struct SubsetCollection {
  int d = 0;
  std::vector<std::set<int>> sets;

  static SubsetCollection make(int d, std::vector<std::set<int>> sets) {
    SubsetCollection c;
    c.d = d;
    for (auto& s : sets) {
      if (s.empty() || !s.count(1)) throw DomainError("collection sets must contain 1");
      if (static_cast<int>(s.size()) >= d) throw DomainError("collection sets must be proper subsets");
      for (int v : s)
        if (v < 1 || v > d) throw DomainError("collection set element out of range");
      if (std::find(c.sets.begin(), c.sets.end(), s) == c.sets.end()) c.sets.push_back(std::move(s));
    }
    std::sort(c.sets.begin(), c.sets.end());
    return c;
  }

  /// The slice-rank collection {{1}} together with every [d] minus one other
  /// block.
  static SubsetCollection slice_rank(int d) {
    std::vector<std::set<int>> sets;
    sets.push_back({1});
    for (int j = 2; j <= d; ++j) {
      std::set<int> s;
      for (int v = 1; v <= d; ++v)
        if (v != j) s.insert(v);
      sets.push_back(std::move(s));
    }
    return make(d, std::move(sets));
  }

  static SubsetCollection all_proper(int d) {
    std::vector<std::set<int>> sets;
    // every subset of {2..d} of size 0..d-2, unioned with {1}
    for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
      std::set<int> s{1};
      for (int v = 2; v <= d; ++v)
        if (mask >> (v - 2) & 1) s.insert(v);
      if (static_cast<int>(s.size()) < d) sets.push_back(std::move(s));
    }
    return make(d, std::move(sets));
  }

  bool operator==(const SubsetCollection&) const = default;
};

enum class CollectionOrder { less, equal, greater, incomparable };

/// Ia <= Ib iff Ia arises from Ib by replacing some sets by any number
/// (possibly zero) of their proper subsets containing 1. Decided by
/// enumerating which sets of Ib are kept verbatim.
inline bool collection_leq(const SubsetCollection& a, const SubsetCollection& b) {
  if (a.d != b.d) throw DomainError("collections over different [d]");
  const int nb = static_cast<int>(b.sets.size());
  for (std::uint32_t keep = 0; keep < (1u << nb); ++keep) {
    std::vector<const std::set<int>*> kept, replaced;
    for (int i = 0; i < nb; ++i)
      (keep >> i & 1 ? kept : replaced).push_back(&b.sets[i]);
    bool ok = true;
    // every kept set must appear in a
    for (auto* k : kept)
      if (std::find(a.sets.begin(), a.sets.end(), *k) == a.sets.end()) ok = false;
    if (!ok) continue;
    // every set of a must be kept or a proper subset of some replaced set
    for (const auto& s : a.sets) {
      bool covered = false;
      for (auto* k : kept)
        if (*k == s) covered = true;
      for (auto* r : replaced)
        if (!covered && s != *r &&
            std::includes(r->begin(), r->end(), s.begin(), s.end()))
          covered = true;
      if (!covered) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

inline CollectionOrder collection_compare(const SubsetCollection& a, const SubsetCollection& b) {
  bool le = collection_leq(a, b);
  bool ge = collection_leq(b, a);
  if (le && ge) return CollectionOrder::equal;
  if (le) return CollectionOrder::less;
  if (ge) return CollectionOrder::greater;
  return CollectionOrder::incomparable;
}

/// Row-reduced span of the multilinear multiples of the tower's forms inside
/// the tensor space on `support`: the modulus piece for relative partition
/// rank. Only tower forms with support contained in `support` contribute.
template <class F>
class MlIdealPiece {
public:
  MlIdealPiece(const F& field, const BlockSpace& space, const std::vector<int>& support,
               const std::vector<MultilinearForm<F>>& tower_forms)
      : field_(&field), index_space_(tensor_index_space(space, support)),
        echelon_(field, static_cast<int>(index_space_.size())) {
    for (const auto& g : tower_forms) {
      if (g.is_zero()) continue;
      if (!std::includes(support.begin(), support.end(), g.support.begin(), g.support.end()))
        continue;
      std::vector<int> rest;
      std::set_difference(support.begin(), support.end(), g.support.begin(), g.support.end(),
                          std::back_inserter(rest));
      for (const auto& idx : tensor_index_space(space, rest)) {
        MultilinearForm<F> unit;
        unit.support = rest;
        unit.tensor.emplace_back(idx, field.one());
        MultilinearForm<F> prod = rest.empty() ? g : disjoint_product(field, g, unit);
        multiples_.push_back(prod);
        echelon_.insert(tensor_to_vector(field, prod, index_space_));
      }
    }
  }

  int dim() const { return echelon_.rank(); }
  const Echelon<F>& echelon() const { return echelon_; }
  const std::vector<std::vector<std::uint16_t>>& index_space() const { return index_space_; }
  const std::vector<MultilinearForm<F>>& multiples() const { return multiples_; }

  bool contains(const MultilinearForm<F>& f) const {
    if (f.is_zero()) return true;
    return echelon_.contains(tensor_to_vector(*field_, f, index_space_));
  }

private:
  const F* field_;
  std::vector<std::vector<std::uint16_t>> index_space_;
  Echelon<F> echelon_;
  std::vector<MultilinearForm<F>> multiples_;
};

} // namespace towerlab
