#include "sitecx/simplicial/matching.hpp"

#include <functional>
#include <map>
#include <string>

#include "sitecx/error.hpp"

namespace sitecx {

MatchingObject matching_object(const AugmentedSimplicialSet& x, int n) {
  const SimplicialSet& s = x.simplicial;
  require(n >= 0, ErrorCode::invalid_input, "matching object needs n ≥ 0");
  require(n <= s.truncation(), ErrorCode::beyond_truncation,
          "matching object at level " + std::to_string(n) + " beyond truncation " + std::to_string(s.truncation()));
  MatchingObject out;
  if (n == 0) {
    out.object = x.target;
    out.comparison = x.augmentation;
    for (ObjectId c = 0; c < x.target.site()->object_count(); ++c) {
      out.tuples.emplace_back();
      for (std::size_t e = 0; e < x.target.size(c); ++e) out.tuples.back().push_back({e});
    }
    return out;
  }
  const FinCategory& cat = s.site()->category();
  const SetPresheaf& prev = s.levels[static_cast<std::size_t>(n - 1)];
  // d_i on X_{n−1} (the augmentation when n − 1 = 0)
  auto face = [&](int i, ObjectId c, std::size_t y) {
    if (n - 1 == 0) return x.augmentation.components[c][y];
    return s.faces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)].components[c][y];
  };

  std::vector<std::size_t> sizes;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> tuple;
    std::function<void()> extend = [&]() {
      int j = static_cast<int>(tuple.size());
      if (j == n + 1) {
        found.push_back(tuple);
        return;
      }
      for (std::size_t y = 0; y < prev.size(c); ++y) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
          ok = face(i, c, y) == face(j - 1, c, tuple[static_cast<std::size_t>(i)]);
        if (!ok) continue;
        tuple.push_back(y);
        extend();
        tuple.pop_back();
      }
    };
    extend();
    for (std::size_t e = 0; e < found.size(); ++e) index[c][found[e]] = e;
    sizes.push_back(found.size());
    out.tuples.push_back(std::move(found));
  }
  std::vector<std::vector<std::size_t>> restrictions;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    std::vector<std::size_t> r;
    for (const auto& t : out.tuples[m.target]) {
      std::vector<std::size_t> img;
      for (std::size_t y : t) img.push_back(prev.restrict(f, y));
      r.push_back(index[m.source].at(img));
    }
    restrictions.push_back(r);
  }
  out.object = SetPresheaf(s.site(), sizes, restrictions);
  const SetPresheaf& level = s.levels[static_cast<std::size_t>(n)];
  out.comparison.source = level;
  out.comparison.target = out.object;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<std::size_t> comp;
    for (std::size_t e = 0; e < level.size(c); ++e) {
      std::vector<std::size_t> t;
      for (int i = 0; i <= n; ++i) t.push_back(s.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].components[c][e]);
      comp.push_back(index[c].at(t));
    }
    out.comparison.components.push_back(comp);
  }
  return out;
}

}  // namespace sitecx
