#include "sitecx/simplicial/simplicial.hpp"

#include <functional>
#include <string>

#include "sitecx/error.hpp"

namespace sitecx {

SetPresheafMap compose(const SetPresheafMap& g, const SetPresheafMap& f) {
  SetPresheafMap out{f.source, g.target, {}};
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    std::vector<std::size_t> comp;
    for (std::size_t y : f.components[c]) comp.push_back(g.components[c][y]);
    out.components.push_back(comp);
  }
  return out;
}

SetPresheafMap identity_map(const SetPresheaf& p) {
  SetPresheafMap out{p, p, {}};
  for (ObjectId c = 0; c < p.site()->object_count(); ++c) {
    std::vector<std::size_t> comp(p.size(c));
    for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = x;
    out.components.push_back(comp);
  }
  return out;
}

bool maps_equal(const SetPresheafMap& a, const SetPresheafMap& b) { return a.components == b.components; }

PresheafMap linearize(const SetPresheafMap& f, const Ring& ring) {
  PresheafMap out;
  for (ObjectId c = 0; c < f.source.site()->object_count(); ++c) {
    Matrix m(f.target.size(c), f.source.size(c));
    for (std::size_t x = 0; x < f.source.size(c); ++x) m(f.components[c][x], x) = 1;
    out.components.push_back(normalized(ring, m));
  }
  return out;
}

namespace {

// Checks all simplicial identities among the maps present up to level N.
template <typename Map>
void check_identities(int top, const std::vector<std::vector<Map>>& d, const std::vector<std::vector<Map>>& s,
                      const std::function<Map(const Map&, const Map&)>& comp,
                      const std::function<bool(int, const Map&, const Map&)>& equal,
                      const std::function<Map(int)>& id) {
  auto fail_at = [](const std::string& rule, int n) {
    fail(ErrorCode::invalid_input, "simplicial identity " + rule + " fails at level " + std::to_string(n));
  };
  auto at = [](const std::vector<std::vector<Map>>& v, int n, int i) -> const Map& {
    return v[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  };
  // d_i d_j = d_{j−1} d_i on X_n, i < j
  for (int n = 2; n <= top; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!equal(n - 2, comp(at(d, n - 1, i), at(d, n, j)), comp(at(d, n - 1, j - 1), at(d, n, i))))
          fail_at("d_i d_j = d_{j-1} d_i", n);
  // s_i s_j = s_{j+1} s_i on X_n, i ≤ j
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!equal(n + 2, comp(at(s, n + 1, i), at(s, n, j)), comp(at(s, n + 1, j + 1), at(s, n, i))))
          fail_at("s_i s_j = s_{j+1} s_i", n);
  // d_i s_j on X_n (s_j: X_n → X_{n+1}, d_i: X_{n+1} → X_n)
  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Map lhs = comp(at(d, n + 1, i), at(s, n, j));
        if (i == j || i == j + 1) {
          if (!equal(n, lhs, id(n))) fail_at("d_j s_j = d_{j+1} s_j = id", n);
        } else if (i < j) {
          if (!equal(n, lhs, comp(at(s, n - 1, j - 1), at(d, n, i)))) fail_at("d_i s_j = s_{j-1} d_i", n);
        } else {
          if (!equal(n, lhs, comp(at(s, n - 1, j), at(d, n, i - 1)))) fail_at("d_i s_j = s_j d_{i-1}", n);
        }
      }
}

template <typename Obj>
void check_shapes(const std::vector<Obj>& levels, std::size_t faces, std::size_t degeneracies,
                  const std::function<std::size_t(std::size_t)>& face_count,
                  const std::function<std::size_t(std::size_t)>& degeneracy_count) {
  std::size_t n = levels.size();
  require(n > 0, ErrorCode::invalid_input, "simplicial object needs level 0");
  require(faces == n && degeneracies == n, ErrorCode::invalid_input,
          "simplicial object needs face and degeneracy lists for every level");
  for (std::size_t k = 0; k < n; ++k) {
    require(face_count(k) == (k == 0 ? 0 : k + 1), ErrorCode::invalid_input,
            "level " + std::to_string(k) + " has the wrong number of faces");
    require(degeneracy_count(k) == (k + 1 < n ? k + 1 : 0), ErrorCode::invalid_input,
            "level " + std::to_string(k) + " has the wrong number of degeneracies");
  }
}

}  // namespace

void SimplicialSet::require_valid() const {
  check_shapes<SetPresheaf>(
      levels, faces.size(), degeneracies.size(), [&](std::size_t k) { return faces[k].size(); },
      [&](std::size_t k) { return degeneracies[k].size(); });
  for (const auto& l : levels) l.require_functorial();
  for (const auto& fs : faces)
    for (const auto& f : fs) f.require_natural();
  for (const auto& ss : degeneracies)
    for (const auto& s : ss) s.require_natural();
  check_identities<SetPresheafMap>(
      truncation(), faces, degeneracies,
      [](const SetPresheafMap& g, const SetPresheafMap& f) { return compose(g, f); },
      [](int, const SetPresheafMap& a, const SetPresheafMap& b) { return maps_equal(a, b); },
      [&](int n) { return identity_map(levels[static_cast<std::size_t>(n)]); });
}

SimplicialSet SimplicialSet::constant(const SetPresheaf& p, int n) {
  SimplicialSet x;
  SetPresheafMap id = identity_map(p);
  for (int k = 0; k <= n; ++k) {
    x.levels.push_back(p);
    x.faces.emplace_back(k == 0 ? 0 : static_cast<std::size_t>(k + 1), id);
    x.degeneracies.emplace_back(k < n ? static_cast<std::size_t>(k + 1) : 0, id);
  }
  return x;
}

SimplicialSet truncated(const SimplicialSet& x, int n) {
  SimplicialSet out;
  for (int k = 0; k <= n; ++k) {
    std::size_t i = static_cast<std::size_t>(k);
    out.levels.push_back(x.levels.at(i));
    out.faces.push_back(x.faces.at(i));
    out.degeneracies.push_back(k < n ? x.degeneracies.at(i) : std::vector<SetPresheafMap>{});
  }
  return out;
}

void AugmentedSimplicialSet::require_valid() const {
  simplicial.require_valid();
  augmentation.require_natural();
  if (simplicial.truncation() >= 1)
    require(maps_equal(compose(augmentation, simplicial.faces[1][0]), compose(augmentation, simplicial.faces[1][1])),
            ErrorCode::invalid_input, "augmentation does not coequalize d_0 and d_1");
}

void SimplicialModule::require_valid() const {
  check_shapes<ModPresheaf>(
      levels, faces.size(), degeneracies.size(), [&](std::size_t k) { return faces[k].size(); },
      [&](std::size_t k) { return degeneracies[k].size(); });
  for (const auto& l : levels) l.require_functorial();
  for (std::size_t n = 1; n < levels.size(); ++n)
    for (std::size_t i = 0; i < faces[n].size(); ++i)
      require_natural(levels[n], levels[n - 1], faces[n][i], "face d_" + std::to_string(i) + " at level " + std::to_string(n));
  for (std::size_t n = 0; n + 1 < levels.size(); ++n)
    for (std::size_t i = 0; i < degeneracies[n].size(); ++i)
      require_natural(levels[n], levels[n + 1], degeneracies[n][i],
                      "degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
  check_identities<PresheafMap>(
      truncation(), faces, degeneracies,
      [&](const PresheafMap& g, const PresheafMap& f) {
        PresheafMap out;
        for (std::size_t c = 0; c < f.components.size(); ++c)
          out.components.push_back(multiply(ring(), g.components[c], f.components[c]));
        return out;
      },
      [&](int n, const PresheafMap& a, const PresheafMap& b) {
        return sitecx::maps_equal(levels[static_cast<std::size_t>(n)], a, b);
      },
      [&](int n) { return PresheafMap::identity(levels[static_cast<std::size_t>(n)]); });
}

SimplicialModule SimplicialModule::constant(const ModPresheaf& m, int n) {
  SimplicialModule x;
  PresheafMap id = PresheafMap::identity(m);
  for (int k = 0; k <= n; ++k) {
    x.levels.push_back(m);
    x.faces.emplace_back(k == 0 ? 0 : static_cast<std::size_t>(k + 1), id);
    x.degeneracies.emplace_back(k < n ? static_cast<std::size_t>(k + 1) : 0, id);
  }
  return x;
}

SimplicialModule SimplicialModule::zero(SitePtr site, const Ring& ring, int n) {
  return constant(ModPresheaf::zero(std::move(site), ring), n);
}

SimplicialModule linearize(const SimplicialSet& x, const Ring& ring) {
  SimplicialModule out;
  for (const auto& l : x.levels) out.levels.push_back(ModPresheaf::linearize(l, ring));
  for (const auto& fs : x.faces) {
    out.faces.emplace_back();
    for (const auto& f : fs) out.faces.back().push_back(linearize(f, ring));
  }
  for (const auto& ss : x.degeneracies) {
    out.degeneracies.emplace_back();
    for (const auto& s : ss) out.degeneracies.back().push_back(linearize(s, ring));
  }
  return out;
}

SimplicialModule direct_sum(const SimplicialModule& a, const SimplicialModule& b) {
  require(a.truncation() == b.truncation(), ErrorCode::invalid_input, "truncation levels differ");
  auto sum_map = [&](const PresheafMap& f, const PresheafMap& g) {
    PresheafMap out;
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      std::vector<Matrix> blocks{f.components[c], g.components[c]};
      out.components.push_back(block_diagonal(blocks));
    }
    return out;
  };
  SimplicialModule out;
  for (std::size_t n = 0; n < a.levels.size(); ++n) {
    out.levels.push_back(sitecx::direct_sum(std::vector<ModPresheaf>{a.levels[n], b.levels[n]}));
    out.faces.emplace_back();
    for (std::size_t i = 0; i < a.faces[n].size(); ++i) out.faces.back().push_back(sum_map(a.faces[n][i], b.faces[n][i]));
    out.degeneracies.emplace_back();
    for (std::size_t i = 0; i < a.degeneracies[n].size(); ++i)
      out.degeneracies.back().push_back(sum_map(a.degeneracies[n][i], b.degeneracies[n][i]));
  }
  return out;
}

}  // namespace sitecx
