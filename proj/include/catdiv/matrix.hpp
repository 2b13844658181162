#pragma once

// Dense exact matrices over a field, with the rank/inverse routines the
// localized category needs and the interleaved block refinement shared
// with the Burnside module: a refinement by s places copy i of a summand
// at positions congruent to i's refinement index mod s, matching the
// <ss'> = <s> x <s'> convention i -> (i mod s, i div s).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catdiv/fields.hpp"

namespace catdiv {

template <typename F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() : field_(), rows_(0), cols_(0) {}

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              field_.zero()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  static Matrix scalar(F field, int n, const Elem& c) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }
  const Elem& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.eq(a.data_[i], b.data_[i])) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.field_.is_zero(a.at(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j)
          r.at(i, j) = a.field_.add(r.at(i, j), a.field_.mul(a.at(i, k), b.at(k, j)));
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], c);
    return r;
  }

  int rank() const {
    Matrix m = *this;
    int rank = 0;
    for (int col = 0; col < m.cols_ && rank < m.rows_; ++col) {
      int pivot = -1;
      for (int r = rank; r < m.rows_; ++r)
        if (!field_.is_zero(m.at(r, col))) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != rank)
        for (int c = 0; c < m.cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
      Elem inv = field_.inv(m.at(rank, col));
      for (int r = rank + 1; r < m.rows_; ++r) {
        if (field_.is_zero(m.at(r, col))) continue;
        Elem factor = field_.mul(m.at(r, col), inv);
        for (int c = col; c < m.cols_; ++c)
          m.at(r, c) = field_.sub(m.at(r, c), field_.mul(factor, m.at(rank, c)));
      }
      ++rank;
    }
    return rank;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix m = *this;
    Matrix inv = identity(field_, rows_);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int r = col; r < rows_; ++r)
        if (!field_.is_zero(m.at(r, col))) {
          pivot = r;
          break;
        }
      if (pivot < 0) return std::nullopt;
      if (pivot != col)
        for (int c = 0; c < cols_; ++c) {
          std::swap(m.at(pivot, c), m.at(col, c));
          std::swap(inv.at(pivot, c), inv.at(col, c));
        }
      Elem d = field_.inv(m.at(col, col));
      for (int c = 0; c < cols_; ++c) {
        m.at(col, c) = field_.mul(m.at(col, c), d);
        inv.at(col, c) = field_.mul(inv.at(col, c), d);
      }
      for (int r = 0; r < rows_; ++r) {
        if (r == col || field_.is_zero(m.at(r, col))) continue;
        Elem factor = m.at(r, col);
        for (int c = 0; c < cols_; ++c) {
          m.at(r, c) = field_.sub(m.at(r, c), field_.mul(factor, m.at(col, c)));
          inv.at(r, c) = field_.sub(inv.at(r, c), field_.mul(factor, inv.at(col, c)));
        }
      }
    }
    return inv;
  }

  // Block direct sum: [a 0; 0 b].
  friend Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

 private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

// s-fold refinement of a morphism matrix whose rows come in blocks of
// height block_rows and columns in blocks of width block_cols.  Refined
// copy index i' decomposes as (i' mod s, i' div s): refinement copy, then
// original copy.
template <typename F>
Matrix<F> refine_matrix(const Matrix<F>& m, int s, int block_rows, int block_cols) {
  if (s < 1) throw std::invalid_argument("refine_matrix: s must be positive");
  if (block_rows <= 0 || block_cols <= 0)
    return Matrix<F>(m.field(), m.rows() * s, m.cols() * s);
  if (m.rows() % block_rows != 0 || m.cols() % block_cols != 0)
    throw std::invalid_argument("refine_matrix: block shape mismatch");
  int nr = m.rows() / block_rows, nc = m.cols() / block_cols;
  Matrix<F> r(m.field(), m.rows() * s, m.cols() * s);
  for (int jb = 0; jb < nr * s; ++jb)
    for (int ib = 0; ib < nc * s; ++ib) {
      if (jb % s != ib % s) continue;
      int j0 = jb / s, i0 = ib / s;
      for (int w = 0; w < block_rows; ++w)
        for (int v = 0; v < block_cols; ++v)
          r.at(jb * block_rows + w, ib * block_cols + v) =
              m.at(j0 * block_rows + w, i0 * block_cols + v);
    }
  return r;
}

// Inverse of refine_matrix for a single prime step: recover the base
// matrix when m is exactly a p-fold refinement, else nullopt.
template <typename F>
std::optional<Matrix<F>> unrefine_matrix(const Matrix<F>& m, int p, int block_rows,
                                         int block_cols) {
  if (block_rows <= 0 || block_cols <= 0) {
    if (m.rows() % p != 0 || m.cols() % p != 0) return std::nullopt;
    return Matrix<F>(m.field(), m.rows() / p, m.cols() / p);
  }
  if (m.rows() % (block_rows * p) != 0 || m.cols() % (block_cols * p) != 0)
    return std::nullopt;
  int nr = m.rows() / block_rows, nc = m.cols() / block_cols;
  Matrix<F> base(m.field(), m.rows() / p, m.cols() / p);
  for (int j0 = 0; j0 < nr / p; ++j0)
    for (int i0 = 0; i0 < nc / p; ++i0)
      for (int w = 0; w < block_rows; ++w)
        for (int v = 0; v < block_cols; ++v)
          base.at(j0 * block_rows + w, i0 * block_cols + v) =
              m.at((j0 * p) * block_rows + w, (i0 * p) * block_cols + v);
  Matrix<F> again = refine_matrix(base, p, block_rows, block_cols);
  if (again == m) return base;
  return std::nullopt;
}

}  // namespace catdiv
