#include "doctest.h"

#include "sitecx/error.hpp"
#include "sitecx/exactalg/module.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace sitecx;
using testing_support::Rng;
using testing_support::to_matrix;

namespace {

std::vector<Scalar> scalars(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

void check_transforms(const Ring& ring, const Matrix& a) {
  SmithForm s = smith_normal_form(ring, a);
  Matrix d = multiply(ring, multiply(ring, s.U, a), s.V);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j && i < s.rank())
        CHECK(d(i, j) == s.diagonal[i]);
      else
        CHECK(sgn(d(i, j)) == 0);
    }
  CHECK(multiply(ring, s.U, s.U_inverse).is_identity());
  for (std::size_t i = 1; i < s.rank(); ++i) CHECK(ring.divides(s.diagonal[i - 1], s.diagonal[i]));
  if (ring.is_field())
    for (const auto& x : s.diagonal) CHECK(x == 1);
  // V is invertible: its Smith form is the identity.
  auto dv = invariant_factors(ring, s.V);
  CHECK(dv.size() == s.V.rows());
  for (const auto& x : dv) CHECK(x == 1);
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  Ring z = Ring::integers();
  CHECK(invariant_factors(z, Matrix::from_rows({{2, 4}, {6, 8}})) == scalars({2, 4}));
  CHECK(invariant_factors(z, Matrix::identity(3)) == scalars({1, 1, 1}));
  CHECK(invariant_factors(z, Matrix(2, 3)).empty());
  CHECK(invariant_factors(Ring::prime_field(2), Matrix::from_rows({{2, 4}, {6, 8}})).empty());
  CHECK(invariant_factors(Ring::rationals(), Matrix::from_rows({{2, 4}, {6, 8}})) ==
        scalars({1, 1}));
}

TEST_CASE("rational entries over the integers are rejected") {
  Matrix m(1, 1);
  m(0, 0) = Scalar(1, 2);
  try {
    smith_normal_form(Ring::integers(), m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::field_path_mismatch);
  }
}

TEST_CASE("smith transforms against random matrices and both oracles") {
  Rng rng(17);
  Ring z = Ring::integers();
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t c = static_cast<std::size_t>(rng.uniform(1, 4));
    auto im = rng.int_matrix(r, c, -5, 5);
    Matrix a = to_matrix(im);
    check_transforms(z, a);
    std::vector<Scalar> expected;
    for (auto f : oracle::invariant_factors(im)) expected.emplace_back(static_cast<long>(f));
    CHECK(invariant_factors(z, a) == expected);
    std::vector<Scalar> det_expected;
    for (auto f : oracle::determinantal_factors(im)) det_expected.emplace_back(static_cast<long>(f));
    CHECK(invariant_factors(z, a) == det_expected);
  }
  Ring f5 = Ring::prime_field(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto im = rng.int_matrix(3, 4, -5, 5);
    check_transforms(f5, to_matrix(im));
    CHECK(rank(f5, to_matrix(im)) == oracle::rank(im, 5));
  }
}

TEST_CASE("solve returns a particular solution exactly when one exists") {
  Ring z = Ring::integers();
  Matrix a = Matrix::from_rows({{2, 0}, {0, 3}});
  CHECK(solve(z, a, Matrix::from_rows({{4}, {9}})) == Matrix::from_rows({{2}, {3}}));
  CHECK_FALSE(solve(z, a, Matrix::from_rows({{1}, {0}})).has_value());
  CHECK(solve(Ring::rationals(), a, Matrix::from_rows({{1}, {0}})).has_value());
  Matrix k = kernel_basis(z, Matrix::from_rows({{1, 1, 1}}));
  CHECK(k.cols() == 2);
  CHECK(multiply(z, Matrix::from_rows({{1, 1, 1}}), k).is_zero());
}

TEST_CASE("hermite basis is canonical") {
  Ring z = Ring::integers();
  Matrix g1 = Matrix::from_rows({{2, 4}, {0, 6}});
  Matrix g2 = Matrix::from_rows({{6, 2}, {6, 0}});
  CHECK(hermite_basis(z, g1) == hermite_basis(z, g2));
  CHECK(hermite_basis(z, Matrix::from_rows({{0, 1}, {1, 0}, {0, 0}})) == col_range(Matrix::identity(3), 0, 2));
}

TEST_CASE("homology of a pair") {
  Ring z = Ring::integers();
  FpModule zz = FpModule::free(z, 1);
  FpModule h = homology_module(zz, zz, zz, Matrix::from_rows({{2}}), Matrix::from_rows({{0}}));
  CHECK(h.invariants() == ModuleInvariants{0, scalars({2})});
  FpModule z3 = FpModule::free(z, 3);
  CHECK(homology_module(z3, z3, z3, Matrix(3, 3), Matrix(3, 3)).invariants().free_rank == 3);
  CHECK(homology_module(zz, zz, zz, Matrix::from_rows({{-1}}), Matrix(1, 1)).is_zero());
  try {
    homology_module(zz, zz, zz, Matrix::from_rows({{1}}), Matrix::from_rows({{1}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::composition_nonzero);
  }
}

TEST_CASE("homology of a pair against the naive oracle") {
  Rng rng(99);
  Ring z = Ring::integers();
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    // d_in = kernel-compatible by construction: d_in = B·C with d_out·B = 0.
    auto dout_int = rng.int_matrix(n, m, -5, 5);
    if (rng.coin(0.3))
      for (auto& row : dout_int)
        for (auto& x : row) x = 0;
    Matrix d_out = to_matrix(dout_int);
    Matrix kb = kernel_basis(z, d_out);
    Matrix coeffs = to_matrix(rng.int_matrix(kb.cols(), k, -3, 3), k);
    Matrix d_in = kb.cols() == 0 ? Matrix(m, k) : multiply(z, kb, coeffs);
    FpModule a = FpModule::free(z, k), b = FpModule::free(z, m), c = FpModule::free(z, n);
    FpModule h = homology_module(a, b, c, d_in, d_out);
    auto expect = oracle::free_homology(testing_support::to_int_matrix(d_in), dout_int, 0, m);
    CHECK(h.invariants().free_rank == expect.free_rank);
    std::vector<Scalar> tors;
    for (auto t : expect.torsion) tors.emplace_back(static_cast<long>(t));
    CHECK(h.invariants().torsion == tors);
  }
}

TEST_CASE("module isomorphism") {
  Ring z = Ring::integers();
  FpModule z2z3 = FpModule::cyclic_sum(z, scalars({2, 3}));
  FpModule z6 = FpModule::cyclic_sum(z, scalars({6}));
  CHECK(modules_isomorphic(z2z3, z6));
  CHECK_FALSE(modules_isomorphic(FpModule::free(z, 1), FpModule::cyclic_sum(z, scalars({2}))));
  CHECK(modules_isomorphic(FpModule::free(z, 0), FpModule::free(z, 0)));
  // Presentation change: an extra generator killed by a relation.
  FpModule padded(z, 2, Matrix::from_rows({{6, 0}, {0, 1}}));
  CHECK(modules_isomorphic(padded, z6));
  CHECK_THROWS_AS(modules_isomorphic(z6, FpModule::free(Ring::rationals(), 1)), Error);
}

TEST_CASE("subquotient coordinates") {
  Ring z = Ring::integers();
  // ker of [1 1] : Z^2 -> Z, modulo nothing.
  Subquotient k = kernel(FpModule::free(z, 2), FpModule::free(z, 1), Matrix::from_rows({{1, 1}}));
  CHECK(k.module().invariants().free_rank == 1);
  Matrix v = Matrix::from_rows({{3}, {-3}});
  Matrix w = k.to_module(v);
  CHECK(multiply(z, k.inclusion(), w) == v);
  FpModule z4 = FpModule::cyclic_sum(z, scalars({4}));
  auto els = z4.elements(100);
  CHECK(els.size() == 4);
  Subquotient c = cokernel(z4, z4, Matrix::from_rows({{2}}));
  CHECK(c.module().invariants() == ModuleInvariants{0, scalars({2})});
}
