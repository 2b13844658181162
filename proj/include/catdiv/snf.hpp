#pragma once

// Smith normal form over the integers for finitely presented abelian
// groups.  Relations are the rows of the input matrix; the reduction
// tracks the inverse column transform so generators of the reduced
// presentation can be expressed in the original generators.

#include <cstddef>
#include <vector>

#include "catdiv/smooth.hpp"

namespace catdiv {

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
  // Diagonal entries d_0 | d_1 | ..., nonnegative, padded with zeros up to
  // min(rows, cols) of the input.
  std::vector<Int> diagonal;
  // new_basis[j] expresses the j-th generator of the transformed
  // presentation in the original generators (rows of V^{-1} where the
  // column transform is V).
  IntMatrix new_basis;

  std::size_t torsion_free_rank(std::size_t generators) const {
    std::size_t nonzero = 0;
    for (const Int& d : diagonal)
      if (d != 0) ++nonzero;
    return generators - nonzero;
  }

  bool has_torsion() const {
    for (const Int& d : diagonal)
      if (d != 0 && d != 1) return true;
    return false;
  }
};

inline SmithResult smith_normal_form(IntMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("smith: ragged matrix");

  IntMatrix w(cols, std::vector<Int>(cols, 0));  // V^{-1}, starts as identity
  for (std::size_t i = 0; i < cols; ++i) w[i][i] = 1;

  auto row_swap = [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    std::swap(w[i], w[j]);
  };
  // col_j += q * col_i  <=>  (V^{-1}) row_i -= q * row_j
  auto col_add = [&](std::size_t j, std::size_t i, const Int& q) {
    for (auto& row : a) row[j] += q * row[i];
    for (std::size_t c = 0; c < cols; ++c) w[i][c] -= q * w[j][c];
  };
  auto row_add = [&](std::size_t j, std::size_t i, const Int& q) {
    for (std::size_t c = 0; c < cols; ++c) a[j][c] += q * a[i][c];
  };
  auto col_negate = [&](std::size_t i) {
    for (auto& row : a) row[i] = -row[i];
    for (std::size_t c = 0; c < cols; ++c) w[i][c] = -w[i][c];
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // minimal nonzero entry of the trailing submatrix
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 &&
              (pr == rows ||
               boost::multiprecision::abs(a[r][c]) < boost::multiprecision::abs(a[pr][pc])))
            pr = r, pc = c;
      if (pr == rows) break;  // submatrix is zero
      if (pr != t) row_swap(pr, t);
      if (pc != t) col_swap(pc, t);
      if (a[t][t] < 0) col_negate(t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (a[r][t] != 0) {
          row_add(r, t, -(a[r][t] / a[t][t]));
          if (a[r][t] != 0) clean = false;
        }
      for (std::size_t c = t + 1; c < cols; ++c)
        if (a[t][c] != 0) {
          col_add(c, t, -(a[t][c] / a[t][t]));
          if (a[t][c] != 0) clean = false;
        }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      bool divides_all = true;
      for (std::size_t r = t + 1; r < rows && divides_all; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            row_add(t, r, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }

  SmithResult res;
  res.diagonal.reserve(n);
  for (std::size_t t = 0; t < n; ++t) res.diagonal.push_back(a[t][t]);
  res.new_basis = std::move(w);
  return res;
}

}  // namespace catdiv
