#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sitecx/sitecx.h"

namespace {

struct Options {
  std::string site, complex, hypercover, functor, object, suite;
  std::string ring, format = "json", strategy = "economical", method = "both";
  std::string window, range = "0..2";
  unsigned long p = 0;
  int depth = -1, levels = 2;
  std::uint64_t seed = 1;
};

struct InputError {
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SitePtr = std::unique_ptr<sitecx_site, Deleter<sitecx_site, sitecx_site_free>>;
using ComplexPtr = std::unique_ptr<sitecx_complex, Deleter<sitecx_complex, sitecx_complex_free>>;
using HypercoverPtr = std::unique_ptr<sitecx_hypercover, Deleter<sitecx_hypercover, sitecx_hypercover_free>>;
using FunctorPtr = std::unique_ptr<sitecx_functor, Deleter<sitecx_functor, sitecx_functor_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

sitecx_range parse_range(const std::string& text, const char* flag) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw InputError{std::string(flag) + ": expected lo..hi or a single degree, got '" + text + "'"};
  int lo = std::stoi(m[1].str());
  int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
  if (lo > hi) throw InputError{std::string(flag) + ": empty range '" + text + "'"};
  return {lo, hi};
}

sitecx_ring ring_of(const Options& o) {
  if (o.ring.empty()) {
    if (o.p != 0) throw InputError{"--p needs --ring Fp"};
    return {nullptr, 0};
  }
  if (o.ring == "Fp" && o.p == 0) throw InputError{"--ring Fp needs --p <prime>"};
  if (o.ring != "Fp" && o.p != 0) throw InputError{"--p only applies to --ring Fp"};
  return {o.ring.c_str(), o.p};
}

// Non-report failures surface as exceptions carrying the status.
struct Failure {
  sitecx_status status;
  std::string message;
};

void check(sitecx_status s) {
  if (s != SITECX_OK) throw Failure{s, sitecx_last_error()};
}

SitePtr load_site(const Options& o) {
  std::string text = read_file(o.site);
  sitecx_site* out = nullptr;
  check(sitecx_site_parse(text.c_str(), o.site.c_str(), &out));
  return SitePtr(out);
}

ComplexPtr load_complex(const Options& o, const sitecx_site* site) {
  std::string text = read_file(o.complex);
  sitecx_complex* out = nullptr;
  check(sitecx_complex_parse(site, text.c_str(), o.complex.c_str(), ring_of(o), &out));
  return ComplexPtr(out);
}

HypercoverPtr load_hypercover(const Options& o, const sitecx_site* site) {
  std::string text = read_file(o.hypercover);
  sitecx_hypercover* out = nullptr;
  check(sitecx_hypercover_parse(site, text.c_str(), o.hypercover.c_str(), &out));
  return HypercoverPtr(out);
}

FunctorPtr load_functor(const Options& o, const sitecx_site* site) {
  std::string text = read_file(o.functor);
  sitecx_functor* out = nullptr;
  check(sitecx_functor_parse(site, text.c_str(), o.functor.c_str(), ring_of(o), &out));
  return FunctorPtr(out);
}

int finish(sitecx_status status, char* report, const Options& o) {
  if (!report) {
    std::cerr << "error: " << sitecx_last_error() << "\n";
    return static_cast<int>(status);
  }
  char* rendered = nullptr;
  sitecx_status r = sitecx_render(report, o.format == "text" ? SITECX_FORMAT_TEXT : SITECX_FORMAT_JSON, &rendered);
  sitecx_string_free(report);
  if (r != SITECX_OK) {
    std::cerr << "error: " << sitecx_last_error() << "\n";
    return static_cast<int>(r);
  }
  std::fwrite(rendered, 1, std::strlen(rendered), stdout);
  sitecx_string_free(rendered);
  return static_cast<int>(status);
}

int run(const std::string& command, const Options& o) {
  char* report = nullptr;
  sitecx_status status;
  if (command == "site-validate") {
    std::string text = read_file(o.site);
    status = sitecx_site_validate(text.c_str(), o.site.c_str(), &report);
    return finish(status, report, o);
  }
  if (command == "check") {
    status = sitecx_check(o.seed, o.suite.empty() ? nullptr : o.suite.c_str(), &report);
    return finish(status, report, o);
  }
  // Every input is parsed before any computation starts.
  SitePtr site = load_site(o);
  ComplexPtr k = load_complex(o, site.get());
  if (command == "homology") {
    std::optional<sitecx_range> w;
    if (!o.window.empty()) w = parse_range(o.window, "--window");
    status = sitecx_homology(k.get(), w ? &*w : nullptr, &report);
  } else if (command == "sheafify") {
    status = sitecx_sheafify(k.get(), &report);
  } else if (command == "descent") {
    HypercoverPtr x = load_hypercover(o, site.get());
    status = sitecx_descent(k.get(), x.get(), &report);
  } else if (command == "cofrep") {
    status = sitecx_cofrep(k.get(), o.depth < 0 ? 3 : o.depth, o.strategy.c_str(), &report);
  } else if (command == "godement") {
    status = sitecx_godement(k.get(), o.levels, &report);
  } else if (command == "hypercoh") {
    sitecx_range r = parse_range(o.range, "--range");
    status = sitecx_hypercoh(k.get(), o.object.empty() ? nullptr : o.object.c_str(), r, o.method.c_str(), o.depth,
                             &report);
  } else {
    FunctorPtr g = load_functor(o, site.get());
    status = sitecx_kan(g.get(), k.get(), &report);
  }
  return finish(status, report, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological algebra of presheaf complexes on finite sites.", "sitecx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sitecx_version());
  Options o;

  auto common = [&](CLI::App* sub, bool needs_complex) {
    sub->add_option("--site", o.site, "Site JSON file")->required();
    if (needs_complex) {
      sub->add_option("--complex", o.complex, "Complex JSON file")->required();
      sub->add_option("--ring", o.ring, "Override the coefficient ring")->check(CLI::IsMember({"Z", "Q", "Fp"}));
      sub->add_option("--p", o.p, "Characteristic for --ring Fp");
    }
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("site-validate", "Check the category axioms and the coverage");
  common(validate, false);

  auto* homology = app.add_subcommand("homology", "Objectwise homology H_n K(c)");
  common(homology, true);
  homology->add_option("--window", o.window, "Degrees lo..hi (default: the window of K)");

  auto* sheafify = app.add_subcommand("sheafify", "Sheafify K degreewise and test the unit");
  common(sheafify, true);

  auto* descent = app.add_subcommand("descent", "Descent of K along a hypercover");
  common(descent, true);
  descent->add_option("--hypercover", o.hypercover, "Hypercover JSON file")->required();

  auto* cofrep = app.add_subcommand("cofrep", "Cofibrant replacement QK -> K");
  common(cofrep, true);
  cofrep->add_option("--depth", o.depth, "Resolution depth (default 3)");
  cofrep->add_option("--strategy", o.strategy, "Generator strategy")
      ->check(CLI::IsMember({"economical", "paper-exact"}));

  auto* godement = app.add_subcommand("godement", "Godement resolution god K");
  common(godement, true);
  godement->add_option("--levels", o.levels, "Cosimplicial levels (default 2)");

  auto* hypercoh = app.add_subcommand("hypercoh", "Hypercohomology table");
  common(hypercoh, true);
  hypercoh->add_option("--object", o.object, "Restrict the table to one object");
  hypercoh->add_option("--range", o.range, "Degrees lo..hi (default 0..2)");
  hypercoh->add_option("--method", o.method, "Computation method")
      ->check(CLI::IsMember({"godement", "cech-colimit", "both"}));
  hypercoh->add_option("--depth", o.depth, "Godement depth (default: smallest certifying)");

  auto* kan = app.add_subcommand("kan", "Left Kan extension along a coefficient functor");
  common(kan, true);
  kan->add_option("--functor", o.functor, "Coefficient functor JSON file")->required();

  auto* check = app.add_subcommand("check", "Run the seeded property suites");
  check->add_option("--seed", o.seed, "Random seed");
  check->add_option("--suite", o.suite, "Run a single suite");
  check->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return SITECX_INPUT_ERROR;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return SITECX_INPUT_ERROR;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << "\n";
    return static_cast<int>(e.status);
  }
}
