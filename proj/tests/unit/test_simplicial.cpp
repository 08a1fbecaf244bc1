#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>

#include "sitecx/complex/homology.hpp"
#include "sitecx/error.hpp"
#include "sitecx/simplicial/dold_kan.hpp"
#include "sitecx/simplicial/matching.hpp"
#include "support/random.hpp"

using namespace sitecx;
using testing_support::Rng;

namespace {

const Ring Z = Ring::integers();

Complex to_complex(const testing_support::RandomComplex& rc, const Ring& ring = Z) {
  std::vector<FpModule> levels;
  for (auto r : rc.ranks) levels.push_back(FpModule::free(ring, r));
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k < rc.diffs.size(); ++k) {
    Matrix m(rc.ranks[k], rc.ranks[k + 1]);
    for (std::size_t i = 0; i < rc.ranks[k]; ++i)
      for (std::size_t j = 0; j < rc.ranks[k + 1]; ++j) m(i, j) = static_cast<long>(rc.diffs[k][i][j]);
    diffs.push_back(normalized(ring, m));
  }
  return Complex::of_modules(ring, rc.lo, levels, diffs);
}

// Nerve of a finite poset given by its order relation, on the terminal site.
SimplicialSet nerve(const std::vector<std::vector<bool>>& le, int top) {
  auto site = terminal_site();
  std::size_t v = le.size();
  std::vector<std::vector<std::vector<std::size_t>>> chains(static_cast<std::size_t>(top + 1));
  for (std::size_t a = 0; a < v; ++a) chains[0].push_back({a});
  for (int n = 1; n <= top; ++n)
    for (const auto& ch : chains[static_cast<std::size_t>(n - 1)])
      for (std::size_t b = 0; b < v; ++b)
        if (le[ch.back()][b]) {
          auto next = ch;
          next.push_back(b);
          chains[static_cast<std::size_t>(n)].push_back(next);
        }
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(chains.size());
  for (std::size_t n = 0; n < chains.size(); ++n)
    for (std::size_t e = 0; e < chains[n].size(); ++e) index[n][chains[n][e]] = e;
  auto level = [&](std::size_t n) {
    std::vector<std::size_t> id(chains[n].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return SetPresheaf(site, {chains[n].size()}, {id});
  };
  SimplicialSet x;
  for (std::size_t n = 0; n < chains.size(); ++n) x.levels.push_back(level(n));
  for (std::size_t n = 0; n < chains.size(); ++n) {
    x.faces.emplace_back();
    if (n > 0)
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> comp;
        for (const auto& ch : chains[n]) {
          auto f = ch;
          f.erase(f.begin() + static_cast<long>(i));
          comp.push_back(index[n - 1].at(f));
        }
        x.faces.back().push_back({x.levels[n], x.levels[n - 1], {comp}});
      }
    x.degeneracies.emplace_back();
    if (n + 1 < chains.size())
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> comp;
        for (const auto& ch : chains[n]) {
          auto f = ch;
          f.insert(f.begin() + static_cast<long>(i), ch[i]);
          comp.push_back(index[n + 1].at(f));
        }
        x.degeneracies.back().push_back({x.levels[n], x.levels[n + 1], {comp}});
      }
  }
  x.require_valid();
  return x;
}

std::vector<std::vector<bool>> random_poset(Rng& rng, std::size_t v) {
  std::vector<std::vector<bool>> le(v, std::vector<bool>(v, false));
  for (std::size_t a = 0; a < v; ++a) le[a][a] = true;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) le[a][b] = rng.coin(0.5);
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;
  return le;
}

bool same_presentation(const ModPresheaf& a, const ModPresheaf& b) {
  for (ObjectId c = 0; c < a.site()->object_count(); ++c) {
    if (a.generators(c) != b.generators(c)) return false;
    if (!(a.value(c).relations() == b.value(c).relations()) &&
        !(a.value(c).relations().is_zero() && b.value(c).relations().is_zero()))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("constant simplicial module") {
  auto site = pseudocircle_site();
  ModPresheaf m = ModPresheaf::constant(site, FpModule::cyclic_sum(Z, {Scalar(0), Scalar(3)}));
  SimplicialModule x = SimplicialModule::constant(m, 4);
  x.require_valid();
  Complex mo = moore(x);
  for (int n = 1; n <= 4; ++n) {
    bool id = n % 2 == 0;
    for (ObjectId c = 0; c < site->object_count(); ++c) {
      Matrix d = mo.differential(n).components[c];
      CHECK(maps_equal(m.value(c), d, id ? Matrix::identity(m.generators(c)) : Matrix(d.rows(), d.cols())));
    }
  }
  ModPresheaf h0 = homology(mo, 0).presheaf;
  for (ObjectId c = 0; c < site->object_count(); ++c) CHECK(modules_isomorphic(h0.value(c), m.value(c)));
  for (int n = 1; n <= 3; ++n) CHECK(homology(mo, n).presheaf.is_zero());

  Normalized nx = normalize(x);
  CHECK(same_presentation(nx.complex.level(0), m));
  for (int n = 1; n <= 4; ++n) CHECK(nx.complex.level(n).is_zero());

  CHECK(moore(SimplicialModule::zero(site, Z, 3)).is_zero());
}

TEST_CASE("simplicial identities are enforced") {
  auto site = terminal_site();
  ModPresheaf lam = ModPresheaf::representable(site, Z, 0);
  SimplicialModule x = SimplicialModule::constant(lam, 2);
  x.faces[2][1] = PresheafMap::zero(lam, lam);
  CHECK_THROWS_AS(x.require_valid(), Error);
}

TEST_CASE("surjections") {
  CHECK(surjections(0).size() == 1);
  CHECK(surjections(2).size() == 4);  // C(2,k) summed over k
  CHECK(surjections(3).size() == 8);
  CHECK(surjections(3).front() == Monotone{0, 1, 2, 3});
}

TEST_CASE("Dold-Kan: N∘Γ = id and homotopy of Γ") {
  Rng rng(505);
  auto site = terminal_site();
  for (int trial = 0; trial < 50; ++trial) {
    auto rc = testing_support::random_complex(rng, 0, 5, 2);
    Complex c = to_complex(rc);
    SimplicialModule g = gamma(c, 4);
    Normalized n = normalize(g);
    for (int k = 0; k <= 4; ++k) {
      CHECK(same_presentation(n.complex.level(k), c.level(k)));
      std::size_t gk = g.levels[static_cast<std::size_t>(k)].generators(0);
      if (c.level(k).generators(0) > 0)
        CHECK(n.parts[static_cast<std::size_t>(k)].parts[0].inclusion() ==
              col_range(Matrix::identity(gk), 0, c.level(k).generators(0)));
      if (k > 0) CHECK(n.complex.differential(k).components[0] == c.differential(k).components[0]);
    }
    Complex mo = moore(g);
    for (int k = 0; k <= 4; ++k) {
      CHECK(homology_module(n.complex, k).invariants() == homology_module(c, k).invariants());
      // the Moore complex sees degenerate cycles at the truncation level
      if (k < 4) CHECK(homology_module(mo, k).invariants() == homology_module(c, k).invariants());
    }
  }
  Complex z = Complex::zero(site, Z);
  SimplicialModule gz = gamma(z, 3);
  for (const auto& l : gz.levels) CHECK(l.is_zero());

  ModPresheaf lam = ModPresheaf::representable(site, Z, 0);
  SimplicialModule gs = gamma(Complex::concentrated(lam, 0), 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(gs.levels[static_cast<std::size_t>(n)].generators(0) == 1);
    for (const auto& f : gs.faces[static_cast<std::size_t>(n)]) CHECK(f.components[0] == Matrix::identity(1));
  }
  CHECK_THROWS_AS(gamma(Complex::concentrated(lam, -1), 2), Error);
}

TEST_CASE("normalized inclusion is a quasi-isomorphism and the degenerate part is acyclic") {
  Rng rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialModule x = linearize(nerve(random_poset(rng, static_cast<std::size_t>(rng.uniform(2, 4))), 3), Z);
    if (trial % 2 == 1) x = direct_sum(x, gamma(to_complex(testing_support::random_complex(rng, 0, 4, 2)), 3));
    x.require_valid();
    Normalized n = normalize(x);
    n.inclusion.require_chain_map();
    CHECK(is_quasi_iso(n.inclusion, 0, 2).all());

    // Degenerate part D_n = Σ im s_i: N_n ⊕ D_n = X_n and D is acyclic below the top.
    Complex mo = moore(x);
    std::vector<ModPresheaf> dlevels;
    std::vector<Subquotient> dparts;
    for (int k = 0; k <= 3; ++k) {
      std::size_t g = x.levels[static_cast<std::size_t>(k)].generators(0);
      Matrix span(g, 0);
      if (k > 0)
        for (const auto& s : x.degeneracies[static_cast<std::size_t>(k - 1)]) span = hstack(span, s.components[0]);
      dparts.emplace_back(Z, g, span, Matrix(g, 0));
      std::size_t nd = n.complex.level(k).generators(0), dd = dparts.back().module().generators();
      CHECK(nd + dd == g);
      Matrix both = hstack(n.parts[static_cast<std::size_t>(k)].parts[0].inclusion(), dparts.back().inclusion());
      CHECK(rank(Z, both) == g);
      CHECK(invariant_factors(Z, both).back() == 1);
    }
    for (int k = 1; k <= 2; ++k) {
      // homology of D at k via the subquotient of cycles in D_k modulo d(D_{k+1})
      Matrix dk = mo.differential(k).components[0];
      Matrix dk1 = mo.differential(k + 1).components[0];
      Matrix in = multiply(Z, dk1, dparts[static_cast<std::size_t>(k + 1)].inclusion());
      Matrix cyc = multiply(Z, dk, dparts[static_cast<std::size_t>(k)].inclusion());
      FpModule dk_mod = dparts[static_cast<std::size_t>(k)].module();
      Subquotient zk = kernel(dk_mod, FpModule::free(Z, dk.rows()), cyc);
      // every D-cycle is a D-boundary
      Matrix cycles_ambient = multiply(Z, dparts[static_cast<std::size_t>(k)].inclusion(), zk.inclusion());
      CHECK(in_column_span(Z, in, cycles_ambient));
    }
  }
}

TEST_CASE("Dold-Kan adjunction counts over F2") {
  Ring f2 = Ring::prime_field(2);
  auto site = terminal_site();
  SimplicialSet x = nerve({{true, true}, {false, true}}, 2);
  std::vector<Complex> targets = {
      Complex::of_modules(f2, 0, {FpModule::free(f2, 1), FpModule::free(f2, 1)}, {Matrix::identity(1)}),
      Complex::of_modules(f2, 0, {FpModule::free(f2, 1), FpModule::free(f2, 1)}, {Matrix(1, 1)}),
      Complex::of_modules(f2, 0, {FpModule::free(f2, 1), FpModule::free(f2, 2)}, {Matrix::from_rows({{1, 1}})}),
  };
  for (const Complex& k : targets) {
    // chain maps N(F2 X) → K by enumeration
    Complex nx = normalize(linearize(x, f2)).complex;
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (int d = 0; d <= 2; ++d) shapes.emplace_back(k.level(d).generators(0), nx.level(d).generators(0));
    std::size_t bits = 0;
    for (auto [r, c] : shapes) bits += r * c;
    std::size_t chain_maps = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      std::vector<Matrix> m;
      std::size_t b = 0;
      for (auto [r, c] : shapes) {
        Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>((mask >> b++) & 1);
        m.push_back(a);
      }
      bool ok = true;
      for (int d = 1; d <= 2 && ok; ++d)
        ok = multiply(f2, k.differential(d).components[0], m[static_cast<std::size_t>(d)]) ==
             multiply(f2, m[static_cast<std::size_t>(d - 1)], nx.differential(d).components[0]);
      chain_maps += ok;
    }

    // simplicial maps X → Γ(K) by enumeration, levelwise
    SimplicialModule g = gamma(k, 2);
    auto elements = [&](int n) {
      std::size_t dim = g.levels[static_cast<std::size_t>(n)].generators(0);
      std::vector<Matrix> out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        Matrix v(dim, 1);
        for (std::size_t i = 0; i < dim; ++i) v(i, 0) = static_cast<long>((mask >> i) & 1);
        out.push_back(v);
      }
      return out;
    };
    auto apply = [&](const PresheafMap& f, const Matrix& v) { return multiply(f2, f.components[0], v); };
    std::vector<std::vector<Matrix>> y = {elements(0), elements(1), elements(2)};
    std::size_t n0 = x.levels[0].size(0), n1 = x.levels[1].size(0), n2 = x.levels[2].size(0);
    std::size_t simplicial_maps = 0;
    std::vector<std::size_t> f0(n0), f1(n1);
    std::function<void(std::size_t)> pick0, pick1;
    auto count_top = [&]() {
      std::size_t total = 1;
      for (std::size_t s = 0; s < n2 && total; ++s) {
        std::size_t options = 0;
        for (const auto& cand : y[2]) {
          bool ok = true;
          for (std::size_t i = 0; i <= 2 && ok; ++i)
            ok = apply(g.faces[2][i], cand) == y[1][f1[x.faces[2][i].components[0][s]]];
          for (std::size_t j = 0; j <= 1 && ok; ++j)
            for (std::size_t w = 0; w < n1 && ok; ++w)
              if (x.degeneracies[1][j].components[0][w] == s) ok = cand == apply(g.degeneracies[1][j], y[1][f1[w]]);
          options += ok;
        }
        total *= options;
      }
      return total;
    };
    pick1 = [&](std::size_t s) {
      if (s == n1) {
        simplicial_maps += count_top();
        return;
      }
      for (std::size_t e = 0; e < y[1].size(); ++e) {
        bool ok = true;
        for (std::size_t i = 0; i <= 1 && ok; ++i)
          ok = apply(g.faces[1][i], y[1][e]) == y[0][f0[x.faces[1][i].components[0][s]]];
        for (std::size_t w = 0; w < n0 && ok; ++w)
          if (x.degeneracies[0][0].components[0][w] == s) ok = y[1][e] == apply(g.degeneracies[0][0], y[0][f0[w]]);
        if (!ok) continue;
        f1[s] = e;
        pick1(s + 1);
      }
    };
    pick0 = [&](std::size_t v) {
      if (v == n0) {
        pick1(0);
        return;
      }
      for (std::size_t e = 0; e < y[0].size(); ++e) {
        f0[v] = e;
        pick0(v + 1);
      }
    };
    pick0(0);
    CHECK(chain_maps == simplicial_maps);
    CHECK(chain_maps > 1);
  }
}

TEST_CASE("matching objects") {
  auto site = terminal_site();
  SetPresheaf pt(site, {1}, {{0}});
  SimplicialSet c = SimplicialSet::constant(pt, 3);
  AugmentedSimplicialSet a{c, pt, identity_map(pt)};
  a.require_valid();
  for (int n = 0; n <= 3; ++n) {
    MatchingObject m = matching_object(a, n);
    CHECK(m.object.size(0) == 1);
    CHECK(m.comparison.components[0] == std::vector<std::size_t>{0});
  }
  CHECK(matching_object(a, 0).comparison.components == a.augmentation.components);
  CHECK_THROWS_AS(matching_object(a, 4), Error);

  // Δ^1 nerve augmented to a point: M_1 = X_0 × X_0, M_2 = compatible boundaries.
  SimplicialSet x = nerve({{true, true}, {false, true}}, 2);
  AugmentedSimplicialSet ax{x, pt, {x.levels[0], pt, {{0, 0}}}};
  ax.require_valid();
  CHECK(matching_object(ax, 1).object.size(0) == 4);
  // a nerve is determined by its vertices, so boundaries of 2-simplices fill
  MatchingObject m2 = matching_object(ax, 2);
  CHECK(m2.object.size(0) == 4);
  std::vector<std::size_t> seen(m2.comparison.components[0]);
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::size_t>{0, 1, 2, 3});
}
