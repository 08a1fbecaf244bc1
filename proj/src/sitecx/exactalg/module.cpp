#include "sitecx/exactalg/module.hpp"

#include <mutex>
#include <sstream>

#include "sitecx/error.hpp"

namespace sitecx {

struct FpModule::Cache {
  std::once_flag once;
  PrunedForm pruned;
  ModuleInvariants invariants;
};

std::string ModuleInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "free^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "tors(" << t.get_str() << ")";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FpModule::FpModule(Ring ring, std::size_t generators)
    : FpModule(ring, generators, Matrix(generators, 0)) {}

FpModule::FpModule(Ring ring, std::size_t generators, Matrix relations)
    : ring_(ring),
      generators_(generators),
      relations_(normalized(ring, relations)),
      cache_(std::make_shared<Cache>()) {
  require(relations_.rows() == generators_, ErrorCode::invalid_input,
          "relation matrix must have one row per generator");
}

FpModule FpModule::cyclic_sum(const Ring& ring, const std::vector<Scalar>& orders) {
  Matrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  return FpModule(ring, orders.size(), rel);
}

const PrunedForm& FpModule::pruned() const {
  std::call_once(cache_->once, [this] {
    PrunedForm& p = cache_->pruned;
    ModuleInvariants& inv = cache_->invariants;
    if (!has_relations()) {
      p.free_rank = generators_;
      p.to = Matrix::identity(generators_);
      p.from = Matrix::identity(generators_);
      inv.free_rank = generators_;
      return;
    }
    SmithForm s = smith_normal_form(ring_, relations_);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (!ring_.is_unit(s.diagonal[i])) {
        keep.push_back(i);
        p.torsion.push_back(s.diagonal[i]);
      }
    for (std::size_t i = s.rank(); i < generators_; ++i) keep.push_back(i);
    p.free_rank = generators_ - s.rank();
    p.to = select_rows(s.U, keep);
    p.from = select_cols(s.U_inverse, keep);
    inv.free_rank = p.free_rank;
    inv.torsion = p.torsion;
  });
  return cache_->pruned;
}

const ModuleInvariants& FpModule::invariants() const {
  pruned();
  return cache_->invariants;
}

bool FpModule::is_finite() const {
  return invariants().free_rank == 0 || ring_.kind() == RingKind::prime_field;
}

bool FpModule::is_zero_element(const Matrix& v) const {
  require(v.rows() == generators_, ErrorCode::internal, "element has wrong length");
  if (!has_relations()) return normalized(ring_, v).is_zero();
  const PrunedForm& p = pruned();
  Matrix y = multiply(ring_, p.to, v);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      if (i < p.torsion.size()) {
        if (!ring_.divides(p.torsion[i], y(i, j))) return false;
      } else if (sgn(y(i, j)) != 0) {
        return false;
      }
    }
  return true;
}

Matrix FpModule::canonical_coordinates(const Matrix& v) const {
  const PrunedForm& p = pruned();
  Matrix y = multiply(ring_, p.to, v);
  for (std::size_t i = 0; i < p.torsion.size(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) = ring_.reduce_mod(y(i, j), p.torsion[i]);
  return y;
}

std::vector<Matrix> FpModule::elements(std::size_t limit) const {
  require(is_finite(), ErrorCode::strategy_infeasible,
          "cannot enumerate the elements of an infinite module");
  const PrunedForm& p = pruned();
  std::vector<mpz_class> orders;
  mpz_class total = 1;
  for (const auto& t : p.torsion) orders.push_back(abs(t.get_num()));
  for (std::size_t i = 0; i < p.free_rank; ++i) orders.push_back(ring_.characteristic());
  for (const auto& o : orders) total *= o;
  require(total <= limit, ErrorCode::strategy_infeasible,
          "module has " + total.get_str() + " elements, above the enumeration limit " +
              std::to_string(limit));
  std::vector<Matrix> out;
  Matrix coords(orders.size(), 1);
  for (;;) {
    out.push_back(multiply(ring_, p.from, coords));
    std::size_t i = orders.size();
    for (; i-- > 0;) {
      coords(i, 0) += 1;
      if (coords(i, 0) < orders[i]) break;
      coords(i, 0) = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::string FpModule::to_string() const {
  return "<" + std::to_string(generators_) + " gens | " + relations_.to_string() + "> = " +
         invariants().to_string();
}

FpModule direct_sum(const std::vector<FpModule>& parts) {
  require(!parts.empty(), ErrorCode::internal, "direct sum of no modules needs a ring");
  std::vector<Matrix> rels;
  std::size_t gens = 0;
  for (const auto& m : parts) {
    require_same_ring(parts.front().ring(), m.ring());
    rels.push_back(m.relations());
    gens += m.generators();
  }
  return FpModule(parts.front().ring(), gens, block_diagonal(rels));
}

bool is_well_defined(const FpModule& source, const FpModule& target, const Matrix& map) {
  if (map.rows() != target.generators() || map.cols() != source.generators()) return false;
  if (!source.has_relations()) return true;
  return target.is_zero_element(multiply(source.ring(), map, source.relations()));
}

void require_well_defined(const FpModule& source, const FpModule& target, const Matrix& map,
                          const std::string& what) {
  require(map.rows() == target.generators() && map.cols() == source.generators(),
          ErrorCode::invalid_input,
          what + ": matrix is " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
              ", expected " + std::to_string(target.generators()) + "x" +
              std::to_string(source.generators()));
  require(is_well_defined(source, target, map), ErrorCode::invalid_input,
          what + ": matrix does not carry relations to relations");
}

bool is_zero_map(const FpModule& target, const Matrix& map) { return target.is_zero_element(map); }

bool maps_equal(const FpModule& target, const Matrix& a, const Matrix& b) {
  return target.is_zero_element(subtract(target.ring(), a, b));
}

Subquotient::Subquotient(const Ring& ring, std::size_t ambient, const Matrix& lattice,
                         const Matrix& divisor)
    : ambient_(ambient) {
  basis_ = hermite_basis(ring, hstack(lattice, divisor));
  basis_solver_ = std::make_shared<LinearSolver>(ring, basis_);
  std::size_t k = basis_.cols();
  Matrix rel(k, 0);
  if (divisor.cols() > 0) {
    auto coords = basis_solver_->solve(divisor);
    require(coords.has_value(), ErrorCode::internal, "subquotient divisor outside lattice");
    rel = *coords;
  }
  Matrix proj = Matrix::identity(k);
  std::vector<std::size_t> kept(k);
  for (std::size_t i = 0; i < k; ++i) kept[i] = i;

  for (;;) {
    std::size_t col = rel.cols(), row = 0;
    for (std::size_t c = 0; c < rel.cols() && col == rel.cols(); ++c)
      for (std::size_t r = rel.rows(); r-- > 0;)
        if (sgn(rel(r, c)) != 0 && ring.is_unit(rel(r, c))) {
          col = c;
          row = r;
          break;
        }
    if (col == rel.cols()) break;
    Scalar coef = ring.neg(ring.inverse(rel(row, col)));
    Matrix pivot_col = rel.column(col);
    Matrix rel_row = rel.row(row);
    Matrix proj_row = proj.row(row);
    rel = add(ring, rel, scale(ring, coef, multiply(ring, pivot_col, rel_row)));
    proj = add(ring, proj, scale(ring, coef, multiply(ring, pivot_col, proj_row)));
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < rel.rows(); ++r)
      if (r != row) rows.push_back(r);
    rel = select_rows(rel, rows);
    proj = select_rows(proj, rows);
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(row));
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < rel.cols(); ++c)
      if (!rel.column(c).is_zero()) cols.push_back(c);
    rel = select_cols(rel, cols);
  }
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < rel.cols(); ++c)
    if (!rel.column(c).is_zero()) cols.push_back(c);
  module_ = FpModule(ring, kept.size(), select_cols(rel, cols));
  projection_ = std::move(proj);
  inclusion_ = select_cols(basis_, kept);
}

Matrix Subquotient::to_module(const Matrix& v) const {
  require(v.rows() == ambient_, ErrorCode::internal, "subquotient element has wrong length");
  if (basis_.cols() == 0) return Matrix(module_.generators(), v.cols());
  auto w = basis_solver_->solve(v);
  require(w.has_value(), ErrorCode::internal, "element does not lie in the subquotient lattice");
  return multiply(module_.ring(), projection_, *w);
}

bool Subquotient::contains(const Matrix& v) const {
  if (v.is_zero()) return true;
  if (basis_.cols() == 0) return false;
  return basis_solver_->solvable(v);
}

Matrix preimage_lattice(const FpModule& target, const Matrix& map, std::size_t source_generators) {
  require(map.rows() == target.generators() && map.cols() == source_generators,
          ErrorCode::internal, "preimage: shape mismatch");
  Matrix k = kernel_basis(target.ring(), hstack(map, target.relations()));
  return row_range(k, 0, source_generators);
}

Subquotient kernel(const FpModule& source, const FpModule& target, const Matrix& map) {
  Matrix lattice = hstack(preimage_lattice(target, map, source.generators()), source.relations());
  return Subquotient(source.ring(), source.generators(), lattice, source.relations());
}

Subquotient cokernel(const FpModule& source, const FpModule& target, const Matrix& map) {
  (void)source;
  return Subquotient(target.ring(), target.generators(), Matrix::identity(target.generators()),
                     hstack(target.relations(), map));
}

Subquotient image(const FpModule& source, const FpModule& target, const Matrix& map) {
  (void)source;
  return Subquotient(target.ring(), target.generators(), hstack(map, target.relations()),
                     target.relations());
}

Subquotient homology_of_pair(const FpModule& a, const FpModule& b, const FpModule& c,
                             const Matrix& d_in, const Matrix& d_out) {
  require_same_ring(a.ring(), b.ring());
  require_same_ring(b.ring(), c.ring());
  require(d_in.rows() == b.generators() && d_in.cols() == a.generators() &&
              d_out.rows() == c.generators() && d_out.cols() == b.generators(),
          ErrorCode::invalid_input, "homology_of_pair: differential shapes do not chain");
  require(is_zero_map(c, multiply(b.ring(), d_out, d_in)), ErrorCode::composition_nonzero,
          "d_out composed with d_in is nonzero");
  Matrix lattice = hstack(preimage_lattice(c, d_out, b.generators()), b.relations());
  return Subquotient(b.ring(), b.generators(), lattice, hstack(d_in, b.relations()));
}

FpModule homology_module(const FpModule& a, const FpModule& b, const FpModule& c,
                         const Matrix& d_in, const Matrix& d_out) {
  return homology_of_pair(a, b, c, d_in, d_out).module();
}

Matrix induced_map(const Subquotient& source, const Subquotient& target, const Matrix& ambient_map) {
  const Ring& ring = source.module().ring();
  return target.to_module(multiply(ring, ambient_map, source.inclusion()));
}

bool is_injective(const FpModule& source, const FpModule& target, const Matrix& map) {
  return kernel(source, target, map).module().is_zero();
}

bool is_surjective(const FpModule& source, const FpModule& target, const Matrix& map) {
  return cokernel(source, target, map).module().is_zero();
}

bool is_isomorphism(const FpModule& source, const FpModule& target, const Matrix& map) {
  return is_injective(source, target, map) && is_surjective(source, target, map);
}

bool modules_isomorphic(const FpModule& a, const FpModule& b) {
  require_same_ring(a.ring(), b.ring());
  return a.invariants() == b.invariants();
}

}  // namespace sitecx
