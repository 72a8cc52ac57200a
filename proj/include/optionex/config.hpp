#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optionex/learning.hpp"

namespace optionex {

struct SeedRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // exclusive

  std::uint64_t size() const { return hi > lo ? hi - lo : 0; }
  bool overlaps(const SeedRange& o) const { return lo < o.hi && o.lo < hi; }
  bool operator==(const SeedRange&) const = default;
};

struct ExperimentConfig {
  Method method = Method::Full;
  std::uint64_t seed = 1;
  std::string out_dir = "out";

  int plan_width = 64;
  int plan_height = 64;
  SeedRange train_seeds{0, 1000};
  SeedRange eval_seeds{100000, 100020};
  int starts_per_plan = 5;
  int episode_budget = 1000;
  GenParams gen;
  // Plan distribution for evaluation; equal to `gen` unless a transfer run
  // overrides it.
  GenParams eval_gen;
  SensorConfig sensor;

  AgentConfig agent;
  TrainConfig train;
  NetConfig net;

  // Input layers follow the plan size.
  NetConfig net_for_plans() const;
  PlanSource train_source() const;
};

/// Parses "section.key = value" text with [section] headers. Errors name the
/// offending line. Keys absent from the text keep their defaults.
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ExperimentConfig load_config(const std::string& path);
/// Applies one "section.key=value" override (from the command line).
void apply_override(ExperimentConfig& c, const std::string& assignment);
void validate(const ExperimentConfig& c);

/// Canonical text form; parse_config(to_text(c)) == c.
std::string to_text(const ExperimentConfig& c);

// Fingerprints (FNV-1a over canonical text).
// env: everything an agent sees (plans, sensing, budgets, reward).
std::uint64_t env_fingerprint(const ExperimentConfig& c);
// model: env plus method, network and training settings; stamped into
// checkpoints.
std::uint64_t model_fingerprint(const ExperimentConfig& c);
std::string hex64(std::uint64_t v);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace optionex
