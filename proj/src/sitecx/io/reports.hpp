#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sitecx/godement/hypercohomology.hpp"
#include "sitecx/io/schema.hpp"
#include "sitecx/resolve/sr.hpp"

namespace sitecx::io {

/// A report and whether the property it describes holds.
struct Outcome {
  Json report = Json::object();
  bool passed = true;
};

struct Range {
  int lo = 0;
  int hi = -1;
};

Outcome site_report(const SiteSpec& spec, const std::string& name);
/// H_n K(c) over `window`, the window of K by default.
Outcome homology_report(const Complex& k, std::optional<Range> window);
/// a_τK, its homology sheaves and the unit K → a_τK.
Outcome sheafify_report(const Complex& k);
Outcome descent_report(const Complex& k, const Hypercover& x);
Outcome cofrep_report(const Complex& k, int depth, Strategy strategy);
Outcome godement_report(const Complex& k, int levels);
Outcome hypercoh_report(const Complex& k, std::optional<ObjectId> object, Range range,
                        const std::vector<HypercohomologyMethod>& methods, std::optional<int> depth);
Outcome kan_report(const CoefficientFunctor& gamma, const Complex& k);
Outcome check_report(std::uint64_t seed, const std::vector<std::string>& suites);

}  // namespace sitecx::io
