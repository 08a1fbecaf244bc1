#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sitecx/hypercover/hypercover.hpp"
#include "sitecx/resolve/kan.hpp"

namespace sitecx::io {

using Json = nlohmann::json;

/// A JSON value with the file and pointer path it came from. Schema errors
/// throw invalid_input naming both.
class Node {
 public:
  Node(const Json& value, std::string origin, std::string path = "")
      : value_(&value), origin_(std::move(origin)), path_(std::move(path)) {}

  const Json& value() const { return *value_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void error(const std::string& message) const;

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;
  std::optional<Node> find(const std::string& key) const;
  Node at(std::size_t index) const;
  std::size_t size() const;

  const Json::object_t& object() const;
  const Json::array_t& array() const;
  std::string string() const;
  long integer() const;
  std::size_t count() const;
  bool boolean() const;

 private:
  const Json* value_;
  std::string origin_;
  std::string path_;
};

Json parse_text(const std::string& text, const std::string& origin);

/// {"ring": "Z"|"Q"|"Fp", "p": prime} read from the fields of `node`.
std::optional<Ring> parse_ring_tag(const Node& node);
Ring make_ring(const std::string& tag, unsigned long p);

/// Explicit {"objects", "morphisms", "compose", "covers", "points"} or
/// {"space": {"points", "opens", "include_empty"}}.
SiteSpec parse_site_spec(const Node& node);
std::string site_name(const Node& node);
SitePtr parse_site(const Node& node);

Scalar parse_scalar(const Node& node, const Ring& ring);
/// Array of rows; `cols` is inferred when unset.
Matrix parse_matrix(const Node& node, const Ring& ring, std::size_t rows, std::optional<std::size_t> cols);
FpModule parse_module(const Node& node, const Ring& ring);
ModPresheaf parse_presheaf(const Node& node, const SitePtr& site, const Ring& ring);
/// `ring` overrides the file's ring tag; without either the ring is ℤ.
Complex parse_complex(const Node& node, const SitePtr& site, std::optional<Ring> ring);
Hypercover parse_hypercover(const Node& node, const SitePtr& site);
CoefficientFunctor parse_coefficients(const Node& node, const SitePtr& site, std::optional<Ring> ring);

Json to_json(const Matrix& m);
Json to_json(const SiteSpec& spec);
Json to_json(const FpModule& m);
Json to_json(const ModPresheaf& p);
Json to_json(const Complex& k);

/// "Z^2 + Z/3", "F2", "0".
std::string module_label(const Ring& ring, const ModuleInvariants& inv);
std::string module_label(const FpModule& m);

enum class Format { json, text };

/// Canonical bytes of a report: sorted keys, two-space indentation and a
/// trailing newline, or the aligned plain-text projection.
std::string emit(const Json& report, Format format);

}  // namespace sitecx::io
