#include "sitecx/simplicial/dold_kan.hpp"

#include <algorithm>
#include <map>

#include "sitecx/error.hpp"

namespace sitecx {

std::vector<Monotone> surjections(int n) {
  std::vector<Monotone> out;
  for (int k = n; k >= 0; --k) {
    // choose the k positions in 1..n where the value steps up
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    std::vector<Monotone> level;
    do {
      Monotone s(static_cast<std::size_t>(n + 1), 0);
      for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - 1)] + (pick[static_cast<std::size_t>(i - 1)] ? 1 : 0);
      level.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end(), std::greater<>());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Complex moore(const SimplicialModule& x) {
  const Ring& ring = x.ring();
  std::vector<PresheafMap> diffs;
  for (int n = 1; n <= x.truncation(); ++n) {
    const auto& faces = x.faces[static_cast<std::size_t>(n)];
    PresheafMap d = PresheafMap::zero(x.levels[static_cast<std::size_t>(n)], x.levels[static_cast<std::size_t>(n - 1)]);
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t c = 0; c < d.components.size(); ++c)
        d.components[c] = i % 2 == 0 ? add(ring, d.components[c], faces[i].components[c])
                                     : subtract(ring, d.components[c], faces[i].components[c]);
    diffs.push_back(d);
  }
  return Complex(x.site(), ring, 0, x.levels, diffs);
}

Normalized normalize(const SimplicialModule& x) {
  const Ring& ring = x.ring();
  std::size_t objects = x.site()->object_count();
  Normalized out;
  for (int n = 0; n <= x.truncation(); ++n) {
    const ModPresheaf& xn = x.levels[static_cast<std::size_t>(n)];
    if (n == 0) {
      std::vector<Subquotient> parts;
      for (ObjectId c = 0; c < objects; ++c) {
        const FpModule& m = xn.value(c);
        parts.emplace_back(ring, m.generators(), Matrix::identity(m.generators()), m.relations());
      }
      out.parts.push_back({xn, parts});
      continue;
    }
    const ModPresheaf& xm = x.levels[static_cast<std::size_t>(n - 1)];
    std::vector<ModPresheaf> copies(static_cast<std::size_t>(n), xm);
    ModPresheaf target = direct_sum(copies);
    PresheafMap stacked;
    for (ObjectId c = 0; c < objects; ++c) {
      std::vector<Matrix> blocks;
      for (int i = 0; i < n; ++i) blocks.push_back(x.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].components[c]);
      stacked.components.push_back(vstack(blocks, xn.generators(c)));
    }
    out.parts.push_back(kernel(xn, target, stacked));
  }
  std::vector<ModPresheaf> levels;
  for (const auto& p : out.parts) levels.push_back(p.presheaf);
  std::vector<PresheafMap> diffs;
  for (int n = 1; n <= x.truncation(); ++n) {
    PresheafMap dn = x.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
    if (n % 2 != 0)
      for (auto& m : dn.components) m = negate(ring, m);
    diffs.push_back(induced(out.parts[static_cast<std::size_t>(n)].parts, out.parts[static_cast<std::size_t>(n - 1)].parts, dn));
  }
  out.complex = Complex(x.site(), ring, 0, levels, diffs);
  std::vector<PresheafMap> comps;
  for (const auto& p : out.parts) {
    PresheafMap inc;
    for (const auto& part : p.parts) inc.components.push_back(part.inclusion());
    comps.push_back(inc);
  }
  out.inclusion = ComplexMorphism(out.complex, moore(x), 0, comps);
  return out;
}

namespace {

struct Factorization {
  Monotone epi;    // [m] ↠ [j]
  Monotone mono;   // [j] ↪ [k]
};

Factorization factor(const Monotone& theta) {
  Monotone image = theta;
  image.erase(std::unique(image.begin(), image.end()), image.end());
  Factorization f;
  f.mono = image;
  for (int v : theta)
    f.epi.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
  return f;
}

Monotone compose(const Monotone& g, const Monotone& f) {
  Monotone out;
  for (int v : f) out.push_back(g[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

SimplicialModule gamma(const Complex& c, int truncation) {
  const Ring& ring = c.ring();
  for (int n = c.lo(); n < 0 && n <= c.hi(); ++n)
    require(c.level(n).is_zero(), ErrorCode::nonconnective,
            "complex is nonzero in negative degree " + std::to_string(n) + "; truncate first");
  std::size_t objects = c.site()->object_count();

  struct Level {
    std::vector<Monotone> surj;
    std::map<Monotone, std::size_t> index;
    std::vector<std::vector<std::size_t>> offset;  // [summand][object]
    ModPresheaf presheaf;
  };
  std::vector<Level> levels;
  for (int n = 0; n <= truncation; ++n) {
    Level l;
    l.surj = surjections(n);
    std::vector<ModPresheaf> parts;
    std::vector<std::size_t> running(objects, 0);
    for (std::size_t s = 0; s < l.surj.size(); ++s) {
      l.index[l.surj[s]] = s;
      int k = l.surj[s].back();
      const ModPresheaf& ck = c.level(k);
      parts.push_back(ck);
      l.offset.push_back(running);
      for (ObjectId o = 0; o < objects; ++o) running[o] += ck.generators(o);
    }
    l.presheaf = direct_sum(parts);
    levels.push_back(std::move(l));
  }

  // θ*: Γ_n → Γ_m for monotone θ: [m] → [n].
  auto structure_map = [&](int m, int n, const Monotone& theta) {
    const Level& src = levels[static_cast<std::size_t>(n)];
    const Level& dst = levels[static_cast<std::size_t>(m)];
    PresheafMap out = PresheafMap::zero(src.presheaf, dst.presheaf);
    for (std::size_t s = 0; s < src.surj.size(); ++s) {
      const Monotone& sigma = src.surj[s];
      int k = sigma.back();
      Factorization f = factor(compose(sigma, theta));
      int j = f.epi.back();
      std::size_t t = dst.index.at(f.epi);
      bool identity = j == k;
      bool last_face = j == k - 1 && f.mono.back() == k - 1;
      if (!identity && !last_face) continue;
      for (ObjectId o = 0; o < objects; ++o) {
        Matrix block;
        if (identity) {
          block = Matrix::identity(c.level(k).generators(o));
        } else {
          block = c.differential(k).components[o];
          if (k % 2 != 0) block = negate(ring, block);
        }
        if (block.rows() == 0 || block.cols() == 0) continue;
        Matrix& comp = out.components[o];
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t q = 0; q < block.cols(); ++q) {
            Scalar& cell = comp(dst.offset[t][o] + r, src.offset[s][o] + q);
            cell = ring.add(cell, block(r, q));
          }
      }
    }
    return out;
  };

  SimplicialModule x;
  for (int n = 0; n <= truncation; ++n) {
    x.levels.push_back(levels[static_cast<std::size_t>(n)].presheaf);
    x.faces.emplace_back();
    if (n > 0)
      for (int i = 0; i <= n; ++i) {
        Monotone delta;
        for (int v = 0; v <= n; ++v)
          if (v != i) delta.push_back(v);
        x.faces.back().push_back(structure_map(n - 1, n, delta));
      }
    x.degeneracies.emplace_back();
    if (n < truncation)
      for (int i = 0; i <= n; ++i) {
        Monotone sigma;
        for (int v = 0; v <= n + 1; ++v) sigma.push_back(v <= i ? v : v - 1);
        x.degeneracies.back().push_back(structure_map(n + 1, n, sigma));
      }
  }
  x.require_valid();
  return x;
}

}  // namespace sitecx
