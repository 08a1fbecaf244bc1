#include "sitecx/exactalg/linsys.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

std::size_t LinearSystem::add_block(std::size_t rows, std::size_t cols) {
  shapes_.emplace_back(rows, cols);
  offsets_.push_back(unknowns_);
  unknowns_ += rows * cols;
  return shapes_.size() - 1;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const Matrix& rhs, const Matrix& relations) {
  for (const auto& t : terms) {
    auto [r, c] = shapes_.at(t.block);
    require(t.left.cols() == r && t.right.rows() == c && t.left.rows() == rhs.rows() &&
                t.right.cols() == rhs.cols(),
            ErrorCode::internal, "linear system term has the wrong shape");
  }
  require(relations.rows() == rhs.rows(), ErrorCode::internal, "relation matrix has the wrong height");
  if (rhs.rows() == 0 || rhs.cols() == 0) return;
  equations_.push_back({terms, normalized(ring_, rhs), normalized(ring_, relations), slack_});
  slack_ += relations.cols() * rhs.cols();
}

std::optional<std::vector<Matrix>> LinearSystem::solve() const {
  std::size_t rows = 0;
  for (const auto& e : equations_) rows += e.rhs.rows() * e.rhs.cols();
  std::size_t cols = unknowns_ + slack_;
  Matrix a(rows, cols), b(rows, 1);
  std::size_t row = 0;
  for (const auto& e : equations_) {
    std::size_t p = e.rhs.rows(), q = e.rhs.cols();
    for (const auto& t : e.terms) {
      std::size_t off = offsets_[t.block];
      std::size_t br = shapes_[t.block].first;
      // coefficient of X(k, l) in entry (i, j) is L(i, k) R(l, j)
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t l = 0; l < t.right.rows(); ++l) {
          const Scalar& rlj = t.right(l, j);
          if (sgn(rlj) == 0) continue;
          for (std::size_t i = 0; i < p; ++i)
            for (std::size_t k = 0; k < t.left.cols(); ++k) {
              const Scalar& lik = t.left(i, k);
              if (sgn(lik) == 0) continue;
              Scalar& cell = a(row + j * p + i, off + l * br + k);
              cell = ring_.add(cell, ring_.mul(lik, rlj));
            }
        }
    }
    std::size_t r = e.relations.cols();
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t i = 0; i < p; ++i)
          if (sgn(e.relations(i, s)) != 0)
            a(row + j * p + i, unknowns_ + e.slack_offset + j * r + s) = ring_.neg(e.relations(i, s));
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t i = 0; i < p; ++i) b(row + j * p + i, 0) = e.rhs(i, j);
    row += p * q;
  }
  std::vector<Matrix> out;
  if (cols == 0) {
    if (!b.is_zero()) return std::nullopt;
    for (auto [r, c] : shapes_) out.emplace_back(r, c);
    return out;
  }
  auto x = sitecx::solve(ring_, a, b);
  if (!x) return std::nullopt;
  for (std::size_t blk = 0; blk < shapes_.size(); ++blk) {
    auto [r, c] = shapes_[blk];
    Matrix m(r, c);
    for (std::size_t l = 0; l < c; ++l)
      for (std::size_t k = 0; k < r; ++k) m(k, l) = (*x)(offsets_[blk] + l * r + k, 0);
    out.push_back(m);
  }
  return out;
}

}  // namespace sitecx
