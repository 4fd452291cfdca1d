#pragma once

#include <optional>
#include <vector>

#include "towerlab/error.hpp"

namespace towerlab {

/// Incremental row-echelon basis of a subspace of K^dim.
///
/// Rows are kept reduced (each pivot is 1 and is the only nonzero entry in
/// its column among stored rows). Pivoting is first-nonzero, which keeps
/// rational coefficient growth tame and the result deterministic.
template <class F>
class Echelon {
public:
  using Elem = typename F::Elem;
  using Row = std::vector<Elem>;

  Echelon(const F& field, int dim) : field_(&field), dim_(dim), pivot_of_col_(dim, -1) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the stored rows (in place). Returns the column of the
  /// first nonzero entry of the residual, or -1 if v reduces to zero.
  int reduce(Row& v) const {
    int lead = -1;
    for (int c = 0; c < dim_; ++c) {
      if (field_->is_zero(v[c])) continue;
      int r = pivot_of_col_[c];
      if (r >= 0) {
        Elem factor = v[c];
        const Row& row = rows_[r];
        for (int j = c; j < dim_; ++j)
          if (!field_->is_zero(row[j])) v[j] = field_->sub(v[j], field_->mul(factor, row[j]));
      } else if (lead < 0) {
        lead = c;
        break;
      }
    }
    if (lead < 0) return -1;
    // finish reducing the tail columns that have pivots
    for (int c = lead + 1; c < dim_; ++c) {
      if (field_->is_zero(v[c])) continue;
      int r = pivot_of_col_[c];
      if (r < 0) continue;
      Elem factor = v[c];
      const Row& row = rows_[r];
      for (int j = c; j < dim_; ++j)
        if (!field_->is_zero(row[j])) v[j] = field_->sub(v[j], field_->mul(factor, row[j]));
    }
    return lead;
  }

  bool contains(Row v) const { return reduce(v) < 0; }

  /// Inserts v; returns true if it enlarged the span.
  bool insert(Row v) {
    int lead = reduce(v);
    if (lead < 0) return false;
    Elem inv = field_->inv(v[lead]);
    for (int j = lead; j < dim_; ++j)
      if (!field_->is_zero(v[j])) v[j] = field_->mul(v[j], inv);
    // back-substitute into existing rows so the basis stays fully reduced
    for (auto& row : rows_) {
      if (field_->is_zero(row[lead])) continue;
      Elem factor = row[lead];
      for (int j = lead; j < dim_; ++j)
        if (!field_->is_zero(v[j])) row[j] = field_->sub(row[j], field_->mul(factor, v[j]));
    }
    pivot_of_col_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<int>& pivot_of_col() const { return pivot_of_col_; }

private:
  const F* field_;
  int dim_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_col_;
};

/// Exact rank by Gaussian elimination; the input is a list of rows.
template <class F>
int exact_rank(const F& field, std::vector<std::vector<typename F::Elem>> rows) {
  if (rows.empty()) return 0;
  Echelon<F> e(field, static_cast<int>(rows[0].size()));
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

/// Solves sum_j x_j * cols[j] = target exactly. Returns one solution or
/// nullopt. Gaussian elimination on the augmented transpose.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_columns(
    const F& field, const std::vector<std::vector<typename F::Elem>>& cols,
    const std::vector<typename F::Elem>& target) {
  using Elem = typename F::Elem;
  const int n = static_cast<int>(target.size());
  const int m = static_cast<int>(cols.size());
  // augmented matrix rows: n equations, m+1 columns
  std::vector<std::vector<Elem>> a(n);
  for (int i = 0; i < n; ++i) {
    a[i].reserve(m + 1);
    for (int j = 0; j < m; ++j) a[i].push_back(cols[j][i]);
    a[i].push_back(target[i]);
  }
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (!field.is_zero(a[i][col])) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    Elem inv = field.inv(a[row][col]);
    for (int j = col; j <= m; ++j) a[row][j] = field.mul(a[row][j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == row || field.is_zero(a[i][col])) continue;
      Elem f = a[i][col];
      for (int j = col; j <= m; ++j) a[i][j] = field.sub(a[i][j], field.mul(f, a[row][j]));
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (!field.is_zero(a[i][m])) return std::nullopt; // inconsistent
  std::vector<Elem> x(m, field.zero());
  for (int i = 0; i < row; ++i) x[pivot_col_of_row[i]] = a[i][m];
  return x;
}

} // namespace towerlab
