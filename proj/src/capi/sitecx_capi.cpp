#include "sitecx/sitecx.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sitecx/error.hpp"
#include "sitecx/check/suites.hpp"
#include "sitecx/io/reports.hpp"

struct sitecx_site {
  sitecx::SitePtr site;
};

struct sitecx_complex {
  sitecx::Complex complex;
};

struct sitecx_hypercover {
  sitecx::Hypercover hypercover;
};

struct sitecx_functor {
  sitecx::CoefficientFunctor functor;
};

namespace {

using sitecx::ErrorCode;
using namespace sitecx::io;

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sitecx_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::strategy_infeasible:
      return SITECX_MATH_FAILURE;
    case ErrorCode::internal:
      return SITECX_INTERNAL;
    default:
      return SITECX_INPUT_ERROR;
  }
}

template <typename F>
sitecx_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const sitecx::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return SITECX_INTERNAL;
  }
}

sitecx_status require_args(bool ok, const char* what) {
  if (ok) return SITECX_OK;
  last_error = std::string("null argument: ") + what;
  return SITECX_INPUT_ERROR;
}

std::optional<sitecx::Ring> ring_override(sitecx_ring ring) {
  if (!ring.tag) return std::nullopt;
  return make_ring(ring.tag, ring.p);
}

Node root(const Json& doc, const char* origin) { return Node(doc, origin ? origin : "<input>"); }

// Writes the report and maps the verdict to a status.
sitecx_status deliver(const Outcome& o, char** report) {
  *report = copy_string(emit(o.report, Format::json));
  if (!*report) throw std::bad_alloc();
  return o.passed ? SITECX_OK : SITECX_MATH_FAILURE;
}

}  // namespace

extern "C" {

const char* sitecx_version(void) { return "0.1.0"; }

const char* sitecx_last_error(void) { return last_error.c_str(); }

void sitecx_string_free(char* s) { std::free(s); }

sitecx_status sitecx_site_parse(const char* json, const char* origin, sitecx_site** out) {
  if (auto s = require_args(json && out, "json, out")) return s;
  *out = nullptr;
  return guarded([&] {
    Json doc = parse_text(json, origin ? origin : "<input>");
    *out = new sitecx_site{parse_site(root(doc, origin))};
    return SITECX_OK;
  });
}

void sitecx_site_free(sitecx_site* site) { delete site; }

sitecx_status sitecx_complex_parse(const sitecx_site* site, const char* json, const char* origin, sitecx_ring ring,
                                   sitecx_complex** out) {
  if (auto s = require_args(site && json && out, "site, json, out")) return s;
  *out = nullptr;
  return guarded([&] {
    Json doc = parse_text(json, origin ? origin : "<input>");
    *out = new sitecx_complex{parse_complex(root(doc, origin), site->site, ring_override(ring))};
    return SITECX_OK;
  });
}

void sitecx_complex_free(sitecx_complex* k) { delete k; }

sitecx_status sitecx_hypercover_parse(const sitecx_site* site, const char* json, const char* origin,
                                      sitecx_hypercover** out) {
  if (auto s = require_args(site && json && out, "site, json, out")) return s;
  *out = nullptr;
  return guarded([&] {
    Json doc = parse_text(json, origin ? origin : "<input>");
    *out = new sitecx_hypercover{parse_hypercover(root(doc, origin), site->site)};
    return SITECX_OK;
  });
}

void sitecx_hypercover_free(sitecx_hypercover* x) { delete x; }

sitecx_status sitecx_functor_parse(const sitecx_site* site, const char* json, const char* origin, sitecx_ring ring,
                                   sitecx_functor** out) {
  if (auto s = require_args(site && json && out, "site, json, out")) return s;
  *out = nullptr;
  return guarded([&] {
    Json doc = parse_text(json, origin ? origin : "<input>");
    *out = new sitecx_functor{parse_coefficients(root(doc, origin), site->site, ring_override(ring))};
    return SITECX_OK;
  });
}

void sitecx_functor_free(sitecx_functor* g) { delete g; }

sitecx_status sitecx_site_validate(const char* json, const char* origin, char** report) {
  if (auto s = require_args(json && report, "json, report")) return s;
  *report = nullptr;
  return guarded([&] {
    Json doc = parse_text(json, origin ? origin : "<input>");
    Node node = root(doc, origin);
    return deliver(site_report(parse_site_spec(node), site_name(node)), report);
  });
}

sitecx_status sitecx_homology(const sitecx_complex* k, const sitecx_range* window, char** report) {
  if (auto s = require_args(k && report, "complex, report")) return s;
  *report = nullptr;
  return guarded([&] {
    std::optional<Range> w;
    if (window) w = Range{window->lo, window->hi};
    return deliver(homology_report(k->complex, w), report);
  });
}

sitecx_status sitecx_sheafify(const sitecx_complex* k, char** report) {
  if (auto s = require_args(k && report, "complex, report")) return s;
  *report = nullptr;
  return guarded([&] { return deliver(sheafify_report(k->complex), report); });
}

sitecx_status sitecx_descent(const sitecx_complex* k, const sitecx_hypercover* x, char** report) {
  if (auto s = require_args(k && x && report, "complex, hypercover, report")) return s;
  *report = nullptr;
  return guarded([&] {
    sitecx::require(k->complex.site() == x->hypercover.site(), ErrorCode::invalid_input,
                    "complex and hypercover live on different sites");
    return deliver(descent_report(k->complex, x->hypercover), report);
  });
}

sitecx_status sitecx_cofrep(const sitecx_complex* k, int depth, const char* strategy, char** report) {
  if (auto s = require_args(k && report, "complex, report")) return s;
  *report = nullptr;
  return guarded([&] {
    std::string name = strategy ? strategy : "economical";
    sitecx::Strategy st = sitecx::Strategy::economical;
    if (name == "paper-exact")
      st = sitecx::Strategy::paper_exact;
    else
      sitecx::require(name == "economical", ErrorCode::invalid_input,
                      "unknown strategy '" + name + "' (expected economical or paper-exact)");
    sitecx::require(depth >= 1, ErrorCode::invalid_input, "depth must be at least 1");
    return deliver(cofrep_report(k->complex, depth, st), report);
  });
}

sitecx_status sitecx_godement(const sitecx_complex* k, int levels, char** report) {
  if (auto s = require_args(k && report, "complex, report")) return s;
  *report = nullptr;
  return guarded([&] {
    sitecx::require(levels >= 0, ErrorCode::invalid_input, "levels must be non-negative");
    return deliver(godement_report(k->complex, levels), report);
  });
}

sitecx_status sitecx_hypercoh(const sitecx_complex* k, const char* object, sitecx_range range, const char* method,
                              int depth, char** report) {
  if (auto s = require_args(k && report, "complex, report")) return s;
  *report = nullptr;
  return guarded([&] {
    const auto& site = k->complex.site();
    std::optional<sitecx::ObjectId> c;
    if (object) {
      sitecx::require(site->category().has_object(object), ErrorCode::unknown_object,
                      std::string("unknown object '") + object + "'");
      c = site->object(object);
    }
    sitecx::require(range.lo <= range.hi, ErrorCode::invalid_input, "empty range");
    std::string m = method ? method : "both";
    std::vector<sitecx::HypercohomologyMethod> methods;
    if (m == "godement" || m == "both") methods.push_back(sitecx::HypercohomologyMethod::godement);
    if (m == "cech-colimit" || m == "both") methods.push_back(sitecx::HypercohomologyMethod::cech_colimit);
    sitecx::require(!methods.empty(), ErrorCode::invalid_input,
                    "unknown method '" + m + "' (expected godement, cech-colimit or both)");
    std::optional<int> d;
    if (depth >= 0) d = depth;
    return deliver(hypercoh_report(k->complex, c, Range{range.lo, range.hi}, methods, d), report);
  });
}

sitecx_status sitecx_kan(const sitecx_functor* gamma, const sitecx_complex* k, char** report) {
  if (auto s = require_args(gamma && k && report, "functor, complex, report")) return s;
  *report = nullptr;
  return guarded([&] {
    sitecx::require(gamma->functor.site == k->complex.site(), ErrorCode::invalid_input,
                    "functor and complex live on different sites");
    sitecx::require_same_ring(gamma->functor.ring, k->complex.ring());
    return deliver(kan_report(gamma->functor, k->complex), report);
  });
}

sitecx_status sitecx_check(uint64_t seed, const char* suite, char** report) {
  if (auto s = require_args(report != nullptr, "report")) return s;
  *report = nullptr;
  return guarded([&] {
    std::vector<std::string> suites = suite ? std::vector<std::string>{suite} : sitecx::suite_names();
    return deliver(check_report(seed, suites), report);
  });
}

sitecx_status sitecx_render(const char* report, sitecx_format format, char** out) {
  if (auto s = require_args(report && out, "report, out")) return s;
  *out = nullptr;
  return guarded([&] {
    Json doc = parse_text(report, "<report>");
    *out = copy_string(emit(doc, format == SITECX_FORMAT_TEXT ? Format::text : Format::json));
    if (!*out) throw std::bad_alloc();
    return SITECX_OK;
  });
}

}  // extern "C"
