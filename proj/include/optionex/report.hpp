#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optionex/harness.hpp"

namespace optionex {

double mean_coverage_at(const EvalRun& run, int t);

/// Coverage after `length` forward actions (the last timestep whose forward
/// count is <= length; final coverage once the episode has ended).
double coverage_at_length(const EpisodeSeries& ep, int length);

/// Smallest trajectory length at which the mean coverage-vs-length curve
/// reaches `target`; nullopt if it never does.
std::optional<int> length_at_coverage(const EvalRun& run, double target);

struct OptionCounts {
  std::int64_t navigation = 0;
  std::int64_t lookaround = 0;
  std::int64_t total() const { return navigation + lookaround; }
};
OptionCounts option_counts(const EvalRun& run);

/// Writes coverage_vs_timestep.csv, coverage_vs_length.csv,
/// option_selections.csv, option_histogram.csv and summary.csv into
/// `out_dir`; with `plots`, also coverage_vs_timestep.svg,
/// coverage_vs_length.svg and option_histogram.svg. Runs must share an env
/// fingerprint.
void emit_report(const std::vector<EvalRun>& runs, const std::string& out_dir, bool plots = false);

/// Reads the CSVs written by emit_report back into runs (one per method).
std::vector<EvalRun> load_report(const std::string& dir);

}  // namespace optionex
