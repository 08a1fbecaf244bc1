#pragma once

#include <optional>

#include "sitecx/exactalg/smith.hpp"

namespace sitecx {

/// Columns form a basis of {x : A x = 0}.
Matrix kernel_basis(const Ring& ring, const Matrix& a);

/// Canonical basis (Hermite normal form, reduced column echelon) of the
/// submodule spanned by the columns of `gens`.
Matrix hermite_basis(const Ring& ring, const Matrix& gens);

std::size_t rank(const Ring& ring, const Matrix& a);

/// Solves A X = B over the ring through a cached Smith form of A. The
/// returned solution is the particular one with all free parameters zero.
class LinearSolver {
 public:
  LinearSolver(const Ring& ring, const Matrix& a);

  std::optional<Matrix> solve(const Matrix& b) const;
  bool solvable(const Matrix& b) const { return solve(b).has_value(); }

  const SmithForm& smith() const { return smith_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  SmithForm smith_;
};

std::optional<Matrix> solve(const Ring& ring, const Matrix& a, const Matrix& b);

/// True when every column of `b` lies in the column span of `a`.
bool in_column_span(const Ring& ring, const Matrix& a, const Matrix& b);

}  // namespace sitecx
