#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sitecx/site/category.hpp"

namespace sitecx {

/// A sieve on `target`: a set of morphisms into it closed under
/// precomposition, stored as a membership mask over all morphisms.
struct Sieve {
  ObjectId target = 0;
  std::vector<bool> members;

  bool contains(MorphismId f) const { return members[f]; }
  bool subset_of(const Sieve& other) const;
  std::size_t size() const;
  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve& a, const Sieve& b) {
    if (auto c = a.target <=> b.target; c != 0) return c;
    return a.members <=> b.members;
  }
};

struct Point {
  std::string name;
  std::vector<ObjectId> neighborhoods;  // objects the point lies in
  std::optional<ObjectId> minimal;      // a neighborhood mapping into all others
};

struct SiteReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks category axioms, that every object has a declared cover, that
/// families consist of morphisms into their object, and pullback stability
/// of the generated sieves.
SiteReport validate_site(const SiteSpec& spec);

/// A validated finite site with its Grothendieck topology materialized.
class Site {
 public:
  /// Throws invalid_site listing every violation.
  static std::shared_ptr<const Site> create(SiteSpec spec, std::string name = "");

  const std::string& name() const { return name_; }
  const SiteSpec& spec() const { return spec_; }
  const FinCategory& category() const { return category_; }
  std::size_t object_count() const { return category_.object_count(); }
  ObjectId object(const std::string& name) const { return category_.object(name); }
  const std::string& object_name(ObjectId c) const { return category_.object_name(c); }

  const std::vector<std::vector<MorphismId>>& covers(ObjectId c) const { return covers_.at(c); }

  Sieve maximal_sieve(ObjectId c) const;
  Sieve generated_sieve(ObjectId c, const std::vector<MorphismId>& family) const;
  Sieve pullback(const Sieve& s, MorphismId f) const;

  /// All sieves on c, and the covering ones.
  const std::vector<Sieve>& sieves(ObjectId c) const { return sieves_.at(c); }
  bool is_covering(const Sieve& s) const { return topology_.at(s.target).count(s) > 0; }
  const std::set<Sieve>& covering_sieves(ObjectId c) const { return topology_.at(c); }
  /// Intersection of all covering sieves of c, itself covering.
  const Sieve& minimal_covering_sieve(ObjectId c) const { return minimal_.at(c); }
  /// Morphisms of the minimal covering sieve, in id order.
  const std::vector<MorphismId>& minimal_cover(ObjectId c) const { return minimal_list_.at(c); }

  bool has_points() const { return !points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(const std::string& name) const;
  /// Points lying in c, in declaration order.
  std::vector<std::size_t> points_of(ObjectId c) const;

 private:
  Site() = default;
  void build_sieves();
  void build_topology();
  void build_points();

  std::string name_;
  SiteSpec spec_;
  FinCategory category_;
  std::vector<std::vector<std::vector<MorphismId>>> covers_;
  std::vector<std::vector<Sieve>> sieves_;
  std::vector<std::set<Sieve>> topology_;
  std::vector<Sieve> minimal_;
  std::vector<std::vector<MorphismId>> minimal_list_;
  std::vector<Point> points_;
};

using SitePtr = std::shared_ptr<const Site>;

struct OpenSpec {
  std::string name;
  std::vector<std::string> points;
};

/// Open-cover site of a finite topological space. Objects are the listed
/// opens (plus ∅ when `include_empty`), morphisms are inclusions, and each
/// open is covered by itself, by the minimal opens of its points, by its
/// maximal proper subopens when they cover it, and ∅ by the empty family.
SiteSpec finite_space_spec(const std::vector<std::string>& points, const std::vector<OpenSpec>& opens,
                           bool include_empty);

SitePtr terminal_site();
/// The four-point model of the circle: open points a, b and closed points x, y
/// with minimal opens Ux = {a,b,x}, Uy = {a,b,y}.
SitePtr pseudocircle_site(bool include_empty = false);
/// Two objects u → v with trivial topology.
SitePtr arrow_site();

}  // namespace sitecx
