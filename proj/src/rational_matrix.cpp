#include "pdg/rational_matrix.hpp"

#include <algorithm>

#include "pdg/error.hpp"

namespace pdg {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(0, rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (static_cast<int>(values.size()) != cols_) {
    if (rows_ == 0 && data_.empty()) {
      cols_ = static_cast<int>(values.size());
    } else {
      throw Error(ErrorCode::SizeMismatch, "row length differs from column count");
    }
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::permute_columns(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != cols_) {
    throw Error(ErrorCode::SizeMismatch, "column order has wrong length");
  }
  RationalMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, order[c]);
  }
  return out;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw Error(ErrorCode::SizeMismatch, "vector length differs from column count");
  }
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && x[c] != 0) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

// ---------------------------------------------------------------- RowEchelon

std::vector<Rational> RowEchelon::reduce(std::vector<Rational> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (v[p] == 0) continue;
    const Rational factor = v[p];
    const auto& row = rows_[i];
    for (int c = p; c < cols_; ++c) {
      if (row[c] != 0) v[c] -= factor * row[c];
    }
  }
  return v;
}

bool RowEchelon::add(std::vector<Rational> row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw Error(ErrorCode::SizeMismatch, "row length differs from column count");
  }
  row = reduce(std::move(row));
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
  if (lead == row.end()) return false;
  const int p = static_cast<int>(lead - row.begin());
  const Rational inv = 1 / row[p];
  for (int c = p; c < cols_; ++c) {
    if (row[c] != 0) row[c] *= inv;
  }
  // Keep the stored rows fully reduced so `reduce` is a single pass.
  for (auto& other : rows_) {
    if (other[p] == 0) continue;
    const Rational factor = other[p];
    for (int c = p; c < cols_; ++c) {
      if (row[c] != 0) other[c] -= factor * row[c];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

// ------------------------------------------------------------- free functions

int rank(const RationalMatrix& m) {
  RowEchelon echelon(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    echelon.add({row.begin(), row.end()});
    if (echelon.rank() == m.cols()) break;
  }
  return echelon.rank();
}

std::optional<std::vector<Rational>> solve_in_span(const RationalMatrix& m,
                                                   std::span<const Rational> target) {
  if (static_cast<int>(target.size()) != m.rows()) {
    throw Error(ErrorCode::SizeMismatch, "target length differs from row count");
  }
  const int rows = m.rows();
  const int cols = m.cols();
  // Augmented matrix [m | target], reduced to reduced row echelon form.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = m(r, c);
    a[r][cols] = target[r];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    const Rational inv = 1 / a[r][c];
    for (int k = c; k <= cols; ++k) {
      if (a[r][k] != 0) a[r][k] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (int k = c; k <= cols; ++k) {
        if (a[r][k] != 0) a[i][k] -= factor * a[r][k];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i) {
    if (a[i][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

}  // namespace pdg
