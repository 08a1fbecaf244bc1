#include "sitecx/exactalg/matrix.hpp"

#include <sstream>

#include "sitecx/error.hpp"

namespace sitecx {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows * cols, ErrorCode::invalid_input,
          "matrix entry count does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, ErrorCode::invalid_input, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix m(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
  return m;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix m(1, cols_);
  for (std::size_t c = 0; c < cols_; ++c) m(0, c) = (*this)(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorCode::internal,
          "matrix product shape mismatch " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
              std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  Scalar acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  if (ring.kind() == RingKind::prime_field) return normalized(ring, out);
  return out;
}

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::internal,
          "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  return out;
}

Matrix subtract(const Ring& ring, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::internal,
          "matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.sub(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Ring& ring, const Scalar& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.mul(s, a(i, j));
  return out;
}

Matrix negate(const Ring& ring, const Matrix& a) { return scale(ring, ring.normalize(-1), a); }

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix normalized(const Ring& ring, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.normalize(a(i, j));
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::internal, "hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  paste(out, a, 0, 0);
  paste(out, b, 0, a.cols());
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorCode::internal, "vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  paste(out, a, 0, 0);
  paste(out, b, a.rows(), 0);
  return out;
}

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require(b.rows() == rows, ErrorCode::internal, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    paste(out, b, 0, c);
    c += b.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require(b.cols() == cols, ErrorCode::internal, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    paste(out, b, r, 0);
    r += b.rows();
  }
  return out;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    paste(out, b, r, c);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix kronecker(const Ring& ring, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return out;
}

Matrix select_rows(const Matrix& a, std::span<const std::size_t> rows) {
  Matrix out(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(rows[i], j);
  return out;
}

Matrix select_cols(const Matrix& a, std::span<const std::size_t> cols) {
  Matrix out(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(i, cols[j]);
  return out;
}

Matrix row_range(const Matrix& a, std::size_t begin, std::size_t end) {
  Matrix out(end - begin, a.cols());
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i - begin, j) = a(i, j);
  return out;
}

Matrix col_range(const Matrix& a, std::size_t begin, std::size_t end) {
  Matrix out(a.rows(), end - begin);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = a(i, j);
  return out;
}

void paste(Matrix& target, const Matrix& block, std::size_t r, std::size_t c) {
  require(r + block.rows() <= target.rows() && c + block.cols() <= target.cols(),
          ErrorCode::internal, "paste out of bounds");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) target(r + i, c + j) = block(i, j);
}

Matrix vectorize(const Matrix& a) {
  Matrix v(a.rows() * a.cols(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) v(j * a.rows() + i, 0) = a(i, j);
  return v;
}

Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols) {
  require(v.rows() == rows * cols && v.cols() == 1, ErrorCode::internal, "unvectorize shape");
  Matrix a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = v(j * rows + i, 0);
  return a;
}

}  // namespace sitecx
