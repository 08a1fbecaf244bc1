#pragma once

#include <vector>

#include "sitecx/exactalg/matrix.hpp"

namespace sitecx {

/// U·A·V = D with D diagonal, d₁ | d₂ | … | d_r nonzero and canonical.
struct SmithForm {
  std::vector<Scalar> diagonal;  // the r nonzero invariant factors
  Matrix U;
  Matrix U_inverse;
  Matrix V;
  std::size_t rank() const { return diagonal.size(); }
};

/// Transforms are only accumulated when requested; the invariant factors
/// are always computed.
SmithForm smith_normal_form(const Ring& ring, const Matrix& a, bool with_transforms = true);

std::vector<Scalar> invariant_factors(const Ring& ring, const Matrix& a);

}  // namespace sitecx
