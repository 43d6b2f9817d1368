#ifndef CRNT_TOOLS_REPORT_HPP
#define CRNT_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "crnt/translation.hpp"

namespace crnt::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,          // unreadable or invalid input (network, translation, rates, state)
  kCap = 3,            // an enumeration cap was exceeded
  kNoTranslation = 4,  // the search found nothing within its budget
  kHypothesis = 5,     // a hypothesis of the requested analysis fails
};

struct Request {
  std::string command;  // analyze, generators, translate, tree-constants, steady-states, verify
  std::string network_text;
  std::optional<std::string> translation_text;
  bool search = false;
  std::optional<std::string> rates_text;
  std::optional<std::string> x0_text;
  bool solve = false;
  SearchOptions search_options;
  std::size_t sign_dim_cap = 12;
  std::size_t show = 10;  // candidates listed by `translate`
  std::uint64_t seed = 0;
  double tolerance = 1e-8;  // `verify`
};

struct Outcome {
  int exit_code = kOk;
  Json report;
};

/// Runs one subcommand.  Never throws for bad input: errors land in
/// report["error"] with the matching exit code.
Outcome run(const Request& request);

/// Plain-text rendering of a report.  Every scalar is printed exactly as it
/// appears in the JSON dump, so both forms carry identical values.
std::string render_text(const Json& report);

}  // namespace crnt::report

#endif
