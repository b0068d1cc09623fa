#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mobius/finite_field.hpp"

namespace mobius {

using Matrix = std::vector<std::vector<int>>;

/// Reduced row echelon form over GF(q); zero rows are dropped and every row
/// is padded to the widest input row.
inline Matrix rref(const FiniteField& field, Matrix rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (auto& r : rows) r.resize(width, 0);
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const int scale = field.inv(rows[lead][col]);
    for (auto& v : rows[lead]) v = field.mul(v, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const int factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c)
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[lead][c]));
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

/// Drops all-zero trailing columns so the matrix no longer depends on the
/// ambient dimension it was written in.
inline Matrix trim_columns(Matrix rows) {
  std::size_t width = 0;
  for (const auto& r : rows)
    for (std::size_t c = r.size(); c > 0; --c)
      if (r[c - 1] != 0) {
        width = std::max(width, c);
        break;
      }
  for (auto& r : rows) r.resize(width, 0);
  return rows;
}

/// True when `row` lies in the row space of the reduced matrix `basis`.
inline bool in_row_space(const FiniteField& field, const Matrix& basis, std::vector<int> row) {
  std::size_t width = row.size();
  for (const auto& b : basis) width = std::max(width, b.size());
  row.resize(width, 0);
  for (const auto& b : basis) {
    std::size_t pivot = 0;
    while (pivot < b.size() && b[pivot] == 0) ++pivot;
    if (pivot == b.size() || row[pivot] == 0) continue;
    const int factor = row[pivot];
    for (std::size_t c = pivot; c < b.size(); ++c)
      row[c] = field.sub(row[c], field.mul(factor, b[c]));
  }
  for (int v : row)
    if (v != 0) return false;
  return true;
}

/// Every k-dimensional subspace of GF(q)^n as a reduced matrix, in a fixed
/// enumeration order (pivot sets lexicographic, then free entries).
inline std::vector<Matrix> enumerate_rref(int q, int n, int k) {
  std::vector<Matrix> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // Free cells: (row i, column c) with c > pivots[i] and c not a pivot.
    std::vector<std::pair<int, int>> free_cells;
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    for (int i = 0; i < k; ++i)
      for (int c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(i, c);
    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      Matrix m(k, std::vector<int>(n, 0));
      for (int i = 0; i < k; ++i) m[i][pivots[i]] = 1;
      for (std::size_t j = 0; j < free_cells.size(); ++j)
        m[free_cells[j].first][free_cells[j].second] = digits[j];
      out.push_back(std::move(m));
      std::size_t j = 0;
      while (j < digits.size() && ++digits[j] == q) digits[j++] = 0;
      if (j == digits.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace mobius
