#include "sitecx/exactalg/smith.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

namespace {

class Reducer {
 public:
  Reducer(const Ring& ring, Matrix a, bool track)
      : ring_(ring), a_(normalized(ring, a)), track_(track) {
    if (track_) {
      u_ = Matrix::identity(a_.rows());
      u_inv_ = Matrix::identity(a_.rows());
      v_ = Matrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (!column_clear(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      Scalar u = ring_.unit_normalizer(a_(t, t));
      if (u != 1) scale_row(t, u);
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a_(i, i));
    if (track_) {
      out.U = std::move(u_);
      out.U_inverse = std::move(u_inv_);
      out.V = std::move(v_);
    }
    return out;
  }

 private:
  // Moves an entry of minimal norm in the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t br = 0, bc = 0;
    mpz_class best = 0;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (sgn(a_(i, j)) == 0) continue;
        mpz_class n = ring_.norm(a_(i, j));
        if (best == 0 || n < best) {
          best = n;
          br = i;
          bc = j;
          if (best == 1) goto found;
        }
      }
    if (best == 0) return false;
  found:
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (sgn(a_(i, t)) != 0) return false;
    return true;
  }

  void clear_column(std::size_t t) {
    for (;;) {
      bool again = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        Scalar q, r;
        ring_.divmod(a_(i, t), a_(t, t), q, r);
        add_row(i, t, ring_.neg(q));
        if (sgn(r) != 0) again = true;
      }
      if (!again) return;
      repivot_column(t);
    }
  }

  void clear_row(std::size_t t) {
    for (;;) {
      bool again = false;
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        Scalar q, r;
        ring_.divmod(a_(t, j), a_(t, t), q, r);
        add_col(j, t, ring_.neg(q));
        if (sgn(r) != 0) again = true;
      }
      if (!again) return;
      repivot_row(t);
    }
  }

  void repivot_column(std::size_t t) {
    std::size_t best = t;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (sgn(a_(i, t)) != 0 && ring_.norm(a_(i, t)) < ring_.norm(a_(best, t))) best = i;
    swap_rows(t, best);
  }

  void repivot_row(std::size_t t) {
    std::size_t best = t;
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (sgn(a_(t, j)) != 0 && ring_.norm(a_(t, j)) < ring_.norm(a_(t, best))) best = j;
    swap_cols(t, best);
  }

  bool fix_divisibility(std::size_t t) {
    if (ring_.is_field() || ring_.norm(a_(t, t)) == 1) return false;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!ring_.divides(a_(t, t), a_(i, j))) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }

  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const Scalar& c) {
    if (sgn(c) == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (sgn(a_(k, j)) != 0) a_(i, j) = ring_.add(a_(i, j), ring_.mul(c, a_(k, j)));
    if (!track_) return;
    for (std::size_t j = 0; j < u_.cols(); ++j)
      if (sgn(u_(k, j)) != 0) u_(i, j) = ring_.add(u_(i, j), ring_.mul(c, u_(k, j)));
    // U⁻¹ ← U⁻¹ E⁻¹: col_k -= c * col_i
    for (std::size_t r = 0; r < u_inv_.rows(); ++r)
      if (sgn(u_inv_(r, i)) != 0)
        u_inv_(r, k) = ring_.sub(u_inv_(r, k), ring_.mul(c, u_inv_(r, i)));
  }

  // col_j += c * col_k
  void add_col(std::size_t j, std::size_t k, const Scalar& c) {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (sgn(a_(i, k)) != 0) a_(i, j) = ring_.add(a_(i, j), ring_.mul(c, a_(i, k)));
    if (!track_) return;
    for (std::size_t i = 0; i < v_.rows(); ++i)
      if (sgn(v_(i, k)) != 0) v_(i, j) = ring_.add(v_(i, j), ring_.mul(c, v_(i, k)));
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    a_.swap_rows(i, k);
    if (!track_) return;
    u_.swap_rows(i, k);
    u_inv_.swap_cols(i, k);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    a_.swap_cols(j, k);
    if (track_) v_.swap_cols(j, k);
  }

  void scale_row(std::size_t i, const Scalar& u) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = ring_.mul(u, a_(i, j));
    if (!track_) return;
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = ring_.mul(u, u_(i, j));
    Scalar inv = ring_.inverse(u);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = ring_.mul(inv, u_inv_(r, i));
  }

  const Ring& ring_;
  Matrix a_;
  bool track_;
  Matrix u_, u_inv_, v_;
};

}  // namespace

SmithForm smith_normal_form(const Ring& ring, const Matrix& a, bool with_transforms) {
  return Reducer(ring, a, with_transforms).run();
}

std::vector<Scalar> invariant_factors(const Ring& ring, const Matrix& a) {
  return smith_normal_form(ring, a, false).diagonal;
}

}  // namespace sitecx
