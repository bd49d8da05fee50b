#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace schroeder {

using BigInt = mpz_class;

/// Declared row shape of a triangle: rows n_min.., each row spanning
/// k_min..max(k_min, n + k_max_offset).
struct RowLayout {
  int n_min = 1;
  int k_min = 1;
  int k_max_offset = 0;

  int k_max(int n) const { return std::max(k_min, n + k_max_offset); }
};

/// Map (n, k) -> nonnegative count over declared rows. Cells outside the
/// declared rows read as zero.
class Triangle {
public:
  struct Row {
    int n = 0;
    int k_min = 1;
    std::vector<BigInt> cells;

    int k_max() const { return k_min + static_cast<int>(cells.size()) - 1; }
    BigInt sum() const;
  };

  Triangle() = default;

  /// Rows n_min..n_max shaped by `layout`, all zero.
  static Triangle shaped(const RowLayout& layout, int n_max);

  /// Rows must be appended in strictly increasing n.
  void add_row(int n, int k_min, int k_max);

  BigInt value(int n, int k) const;
  BigInt& cell(int n, int k);  // throws std::out_of_range outside declared rows

  bool has_row(int n) const;
  const Row& row(int n) const;
  const std::vector<Row>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  int n_min() const { return rows_.empty() ? 0 : rows_.front().n; }
  int n_max() const { return rows_.empty() ? 0 : rows_.back().n; }

  /// Keeps rows with n <= n_max.
  Triangle truncated(int n_max) const;

  /// Entrywise sum; both triangles must have identical shape.
  Triangle& operator+=(const Triangle& other);

  friend bool operator==(const Triangle& a, const Triangle& b);

private:
  Row* find_row(int n);
  const Row* find_row(int n) const;

  std::vector<Row> rows_;
};

std::vector<BigInt> row_sums(const Triangle& t);

/// Moves the cells of `source` onto `layout` (rows up to n_max). Throws
/// std::logic_error if a nonzero cell of `source` has no place in it.
Triangle reshape(const Triangle& source, const RowLayout& layout, int n_max);

struct CellMismatch {
  int n = 0;
  int k = 0;
  BigInt left;
  BigInt right;

  std::string describe() const;
};

/// First cell (row-major) where the two triangles differ, considering only
/// rows with n <= n_max. A row present on one side only counts as a
/// mismatch at its first cell.
std::optional<CellMismatch> first_difference(const Triangle& a, const Triangle& b,
                                             int n_max = INT_MAX);

}  // namespace schroeder
