#pragma once

// Exact rational matrices: rank and linear solves by Gaussian elimination.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

namespace pdg {

using Rational = boost::multiprecision::cpp_rational;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::span<const Rational> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  void append_row(std::span<const Rational> values);

  RationalMatrix transpose() const;
  /// Columns listed in `order` (a permutation of 0..cols-1).
  RationalMatrix permute_columns(std::span<const int> order) const;
  std::vector<Rational> multiply(std::span<const Rational> x) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

int rank(const RationalMatrix& m);

/// Some x with m * x == target, or nullopt when target is outside the
/// column span. Free variables are set to zero.
std::optional<std::vector<Rational>> solve_in_span(const RationalMatrix& m,
                                                   std::span<const Rational> target);

/// Incremental row echelon form. Adding rows one at a time keeps only the
/// independent ones, which is how large sparse relation sets are ranked.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows added so far.
  bool add(std::vector<Rational> row);
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  /// Reduces a vector against the stored rows; zero iff it lies in their span.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;  // each with leading 1 at pivots_[i]
  std::vector<int> pivots_;
};

}  // namespace pdg
