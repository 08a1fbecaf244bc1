#include "sitecx/exactalg/linalg.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

Matrix kernel_basis(const Ring& ring, const Matrix& a) {
  if (a.rows() == 0) return Matrix::identity(a.cols());
  SmithForm s = smith_normal_form(ring, a);
  return col_range(s.V, s.rank(), a.cols());
}

Matrix hermite_basis(const Ring& ring, const Matrix& gens) {
  // Row-style echelon form of the transpose: each row is a generator.
  Matrix h = normalized(ring, transpose(gens));
  std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (sgn(h(i, c)) != 0 && (best == h.rows() || ring.norm(h(i, c)) < ring.norm(h(best, c))))
          best = i;
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Scalar q, rem;
        ring.divmod(h(i, c), h(r, c), q, rem);
        for (std::size_t j = c; j < n; ++j) h(i, j) = ring.sub(h(i, j), ring.mul(q, h(r, j)));
        if (sgn(rem) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= h.rows() || sgn(h(r, c)) == 0) continue;
    Scalar u = ring.unit_normalizer(h(r, c));
    for (std::size_t j = c; j < n; ++j) h(r, j) = ring.mul(u, h(r, j));
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Scalar q, rem;
      ring.divmod(h(i, c), h(r, c), q, rem);
      for (std::size_t j = c; j < n; ++j) h(i, j) = ring.sub(h(i, j), ring.mul(q, h(r, j)));
    }
    ++r;
  }
  return transpose(row_range(h, 0, r));
}

std::size_t rank(const Ring& ring, const Matrix& a) {
  return smith_normal_form(ring, a, false).rank();
}

LinearSolver::LinearSolver(const Ring& ring, const Matrix& a)
    : ring_(ring), rows_(a.rows()), cols_(a.cols()), smith_(smith_normal_form(ring, a)) {}

std::optional<Matrix> LinearSolver::solve(const Matrix& b) const {
  require(b.rows() == rows_, ErrorCode::internal, "solve: right-hand side has wrong height");
  Matrix ub = multiply(ring_, smith_.U, normalized(ring_, b));
  Matrix y(cols_, b.cols());
  std::size_t r = smith_.rank();
  for (std::size_t i = 0; i < ub.rows(); ++i)
    for (std::size_t j = 0; j < ub.cols(); ++j) {
      if (i < r) {
        if (!ring_.divides(smith_.diagonal[i], ub(i, j))) return std::nullopt;
        y(i, j) = ring_.exact_div(ub(i, j), smith_.diagonal[i]);
      } else if (sgn(ub(i, j)) != 0) {
        return std::nullopt;
      }
    }
  if (cols_ == 0) return Matrix(0, b.cols());
  return multiply(ring_, smith_.V, y);
}

std::optional<Matrix> solve(const Ring& ring, const Matrix& a, const Matrix& b) {
  return LinearSolver(ring, a).solve(b);
}

bool in_column_span(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (b.cols() == 0 || b.is_zero()) return true;
  if (a.cols() == 0) return false;
  return solve(ring, a, b).has_value();
}

}  // namespace sitecx
