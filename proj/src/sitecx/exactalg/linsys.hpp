#pragma once

#include <optional>
#include <vector>

#include "sitecx/exactalg/linalg.hpp"

namespace sitecx {

/// Linear system in unknown matrices X_b built from equations of the form
/// Σ L·X_b·R ≡ C modulo the column span of a relation matrix. Uses
/// vec(L X R) = (Rᵀ ⊗ L) vec(X) with column-major vec.
class LinearSystem {
 public:
  struct Term {
    Matrix left;
    std::size_t block;
    Matrix right;
  };

  explicit LinearSystem(Ring ring) : ring_(ring) {}

  std::size_t add_block(std::size_t rows, std::size_t cols);
  /// `relations` has as many rows as the equation; pass an empty-column
  /// matrix for exact equality.
  void add_equation(const std::vector<Term>& terms, const Matrix& rhs, const Matrix& relations);

  std::size_t unknowns() const { return unknowns_; }
  /// Values of the blocks for the canonical particular solution.
  std::optional<std::vector<Matrix>> solve() const;

 private:
  struct Equation {
    std::vector<Term> terms;
    Matrix rhs;
    Matrix relations;
    std::size_t slack_offset;
  };

  Ring ring_;
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::size_t slack_ = 0;
  std::vector<Equation> equations_;
};

}  // namespace sitecx
