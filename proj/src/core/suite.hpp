#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "rng.hpp"

namespace pastrev {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials_per_property = 25;
  int max_dim = 4;
  int entry_bound = 9;
  std::vector<std::string> only;   // empty = everything registered
  bool negative_controls = false;  // NC checks also run when named in `only`
};

/// One randomized trial. nullopt = pass; a JSON object describing the
/// counterexample otherwise.
using TrialFn = std::function<std::optional<Json>(Rng&, const SuiteConfig&)>;

enum class PropertyStatus { Check, Skip, NegativeControl };

struct PropertySpec {
  std::string id;
  std::string description;
  std::vector<int> items;  // numbered statements covered; empty for extra checks
  PropertyStatus status = PropertyStatus::Check;
  std::string skip_reason;
  int fixed_trials = 0;  // 0 = config value; deterministic checks pin 1
  std::string note;
  TrialFn trial;
};

struct CheckRecord {
  std::string id;
  std::string description;
  std::vector<int> items;
  std::string status;  // "checked" | "skipped" | "negative-control"
  std::string skip_reason;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  std::optional<Json> counterexample;  // first failing trial
  std::string note;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  int registered = 0;  // runnable (non-skip, non-control) properties known
  int executed = 0;    // actually run under the filter
  int failed = 0;      // executed properties with at least one failing trial
  bool overall_pass = false;
};

/// Full registry, stable order. Construction validates that every numbered
/// statement 1..114 is accounted for by a check or an explicit skip and that
/// ids are unique; any gap throws, so no suite or test run can proceed with
/// an unaccounted statement.
const std::vector<PropertySpec>& property_registry();

/// Per-property stream so that filtered runs reproduce the full run exactly.
std::uint64_t substream_seed(std::uint64_t seed, std::size_t property_index);

SuiteReport run_suite(const SuiteConfig& cfg);

Json to_json(const SuiteReport& report);

}  // namespace pastrev
