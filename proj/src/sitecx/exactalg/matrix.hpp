#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sitecx/exactalg/ring.hpp"

namespace sitecx {

/// Dense row-major matrix of ring elements. Arithmetic is done through the
/// free functions below, which take the ring explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> entries() const { return data_; }

  Matrix column(std::size_t c) const;
  Matrix row(std::size_t r) const;
  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix subtract(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& ring, const Scalar& s, const Matrix& a);
Matrix negate(const Ring& ring, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix normalized(const Ring& ring, const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(std::span<const Matrix> blocks, std::size_t rows);
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols);
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix kronecker(const Ring& ring, const Matrix& a, const Matrix& b);

Matrix select_rows(const Matrix& a, std::span<const std::size_t> rows);
Matrix select_cols(const Matrix& a, std::span<const std::size_t> cols);
Matrix row_range(const Matrix& a, std::size_t begin, std::size_t end);
Matrix col_range(const Matrix& a, std::size_t begin, std::size_t end);
/// Writes `block` into `target` with its top-left corner at (r, c).
void paste(Matrix& target, const Matrix& block, std::size_t r, std::size_t c);

/// Column-major vectorization and its inverse.
Matrix vectorize(const Matrix& a);
Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace sitecx
