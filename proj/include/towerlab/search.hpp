#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "towerlab/linalg.hpp"

namespace towerlab {

/// Budget for certificate searches. Levels r <= exhausted levels give sound
/// lower bounds; a hit budget downgrades the level to inconclusive.
struct SearchBudget {
  long nodes = 2000000;    // echelon-extension steps across the whole search
  int exhaustive_r = 2;    // fully enumerate levels up to this r
  int max_r = 16;          // never search past this many pieces
  long max_candidates = 2000000; // refuse to enumerate larger projective spaces
};

/// Shared engine for "f lies in the span of the ideal piece plus r candidate
/// blocks" searches (strength and partition rank instantiate it).
///
/// Candidates are indexed 0..M-1; rows_of(i) yields the spanning rows
/// contributed by candidate i. Multisets (c_1 <= ... <= c_r) are enumerated
/// in colexicographic order (last coordinate most significant), and the first
/// success is returned, which fixes the certificate tie-break.
template <class F>
class SpanSearch {
public:
  using Row = std::vector<typename F::Elem>;

  SpanSearch(const F& field, const Echelon<F>& base, Row target, int candidate_count,
             std::function<const std::vector<Row>&(int)> rows_of)
      : field_(field), base_(base), target_(std::move(target)),
        candidate_count_(candidate_count), rows_of_(std::move(rows_of)) {}

  bool budget_hit() const { return budget_hit_; }

  /// Finds the colex-first multiset of r candidates whose rows (with the
  /// base) span the target. nullopt if none (exhausted) or budget hit.
  std::optional<std::vector<int>> find(int r, long& nodes_left) {
    if (r == 0) {
      Row t = target_;
      return base_.reduce(t) < 0 ? std::optional<std::vector<int>>{std::vector<int>{}}
                                 : std::nullopt;
    }
    std::vector<int> chosen(r);
    auto rec = [&](auto&& self, int depth, int max_index, const Echelon<F>& ech)
        -> std::optional<std::vector<int>> {
      for (int c = 0; c <= max_index; ++c) {
        if (nodes_left-- <= 0) {
          budget_hit_ = true;
          return std::nullopt;
        }
        Echelon<F> next = ech;
        for (const Row& row : rows_of_(c)) next.insert(row);
        chosen[depth] = c;
        if (depth == 0) {
          Row t = target_;
          if (next.reduce(t) < 0) return chosen;
        } else {
          auto hit = self(self, depth - 1, c, next);
          if (hit) return hit;
          if (budget_hit_) return std::nullopt;
        }
      }
      return std::nullopt;
    };
    // outermost index is the colex-most-significant coordinate
    return rec(rec, r - 1, candidate_count_ - 1, base_);
  }

private:
  const F& field_;
  const Echelon<F>& base_;
  Row target_;
  int candidate_count_;
  std::function<const std::vector<Row>&(int)> rows_of_;
  bool budget_hit_ = false;
};

/// Projective enumeration of a coefficient space: every nonzero vector with
/// first nonzero coordinate 1, ordered by the mixed-radix index of the tail.
template <class F>
std::vector<std::vector<typename F::Elem>> projective_points(const F& field, int dim,
                                                             long max_count) {
  static_assert(F::is_finite);
  std::vector<std::vector<typename F::Elem>> out;
  const std::uint64_t q = field.size();
  // leading position p: coords before p are 0, coord p is 1, rest arbitrary
  for (int lead = 0; lead < dim; ++lead) {
    std::uint64_t tail = dim - 1 - lead;
    std::uint64_t count = 1;
    for (std::uint64_t k = 0; k < tail; ++k) {
      count *= q;
      if (count > static_cast<std::uint64_t>(max_count))
        throw BudgetExhausted("projective candidate space too large");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (static_cast<long>(out.size()) >= max_count)
        throw BudgetExhausted("projective candidate space too large");
      std::vector<typename F::Elem> v(dim, field.zero());
      v[lead] = field.one();
      std::uint64_t rest = idx;
      for (int pos = dim - 1; pos > lead; --pos) {
        v[pos] = field.element(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace towerlab
