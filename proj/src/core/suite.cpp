#include "suite.hpp"

#include <algorithm>
#include <set>

namespace pastrev {

std::vector<PropertySpec> detail_build_registry();  // properties.cpp

std::uint64_t substream_seed(std::uint64_t seed, std::size_t property_index) {
  // splitmix64-style scramble of (seed, index); never returns zero.
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(property_index) + 1));
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z != 0 ? z : 0x9E3779B97F4A7C15ULL;
}

namespace {

void validate_registry(const std::vector<PropertySpec>& registry) {
  std::set<std::string> ids;
  std::set<int> covered;
  for (const auto& spec : registry) {
    if (!ids.insert(spec.id).second)
      throw Error("duplicate property id in registry: " + spec.id);
    if (spec.status != PropertyStatus::NegativeControl)
      for (int item : spec.items) covered.insert(item);
  }
  for (int item = 1; item <= 114; ++item)
    if (!covered.count(item))
      throw Error("registry does not account for numbered statement " + std::to_string(item));
}

bool selected(const PropertySpec& spec, const SuiteConfig& cfg) {
  const bool named =
      !cfg.only.empty() &&
      std::find(cfg.only.begin(), cfg.only.end(), spec.id) != cfg.only.end();
  if (spec.status == PropertyStatus::NegativeControl) {
    if (!cfg.negative_controls && !named) return false;
    return cfg.only.empty() || named || cfg.negative_controls;
  }
  return cfg.only.empty() || named;
}

}  // namespace

const std::vector<PropertySpec>& property_registry() {
  static const std::vector<PropertySpec> registry = [] {
    auto specs = detail_build_registry();
    validate_registry(specs);
    return specs;
  }();
  return registry;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto& registry = property_registry();
  for (const std::string& id : cfg.only) {
    const bool known = std::any_of(registry.begin(), registry.end(),
                                   [&](const PropertySpec& spec) { return spec.id == id; });
    if (!known) throw ParseError("unknown check id '" + id + "' in filter");
  }

  SuiteReport report;
  report.config = cfg;

  for (std::size_t index = 0; index < registry.size(); ++index) {
    const PropertySpec& spec = registry[index];
    if (spec.status == PropertyStatus::Check) ++report.registered;
    if (!selected(spec, cfg)) continue;

    CheckRecord record;
    record.id = spec.id;
    record.description = spec.description;
    record.items = spec.items;
    record.note = spec.note;

    if (spec.status == PropertyStatus::Skip) {
      record.status = "skipped";
      record.skip_reason = spec.skip_reason;
      report.checks.push_back(std::move(record));
      continue;
    }

    record.status = spec.status == PropertyStatus::NegativeControl ? "negative-control"
                                                                   : "checked";
    const int trials = spec.fixed_trials > 0 ? spec.fixed_trials : cfg.trials_per_property;
    Rng rng(substream_seed(cfg.seed, index));
    for (int t = 0; t < trials; ++t) {
      std::optional<Json> cx = spec.trial(rng, cfg);
      ++record.trials;
      if (cx) {
        ++record.failures;
        if (!record.counterexample) record.counterexample = std::move(cx);
      } else {
        ++record.passes;
      }
    }
    ++report.executed;
    if (record.failures > 0) ++report.failed;
    report.checks.push_back(std::move(record));
  }

  report.overall_pass = report.failed == 0;
  return report;
}

Json to_json(const SuiteReport& report) {
  Json config{{"seed", report.config.seed},
              {"trials_per_property", report.config.trials_per_property},
              {"max_dim", report.config.max_dim},
              {"entry_bound", report.config.entry_bound},
              {"negative_controls", report.config.negative_controls},
              {"only", report.config.only}};

  Json checks = Json::array();
  for (const CheckRecord& record : report.checks) {
    Json entry{{"id", record.id},
               {"description", record.description},
               {"items", record.items},
               {"status", record.status}};
    if (record.status == "skipped") {
      entry["reason"] = record.skip_reason;
    } else {
      entry["trials"] = record.trials;
      entry["passes"] = record.passes;
      entry["failures"] = record.failures;
      if (record.counterexample) entry["counterexample"] = *record.counterexample;
    }
    if (!record.note.empty()) entry["note"] = record.note;
    checks.push_back(std::move(entry));
  }

  return Json{{"config", std::move(config)},
              {"registered_checks", report.registered},
              {"executed_checks", report.executed},
              {"failed_checks", report.failed},
              {"overall_pass", report.overall_pass},
              {"checks", std::move(checks)}};
}

}  // namespace pastrev
