#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "optionex/config.hpp"

namespace optionex {

struct OptionSelection {
  int macro_index = 0;
  OptionId option = OptionId::FrontierNavigation;
  int start_timestep = 0;
  int steps = 0;
};

/// Everything recorded for one evaluation episode. Curves are padded to the
/// episode budget with their final value, so index t is "after t atomic
/// steps" for every t in [0, budget].
struct EpisodeSeries {
  std::string method;
  int episode = 0;
  std::uint64_t plan_seed = 0;
  std::uint64_t start_seed = 0;
  std::uint64_t plan_hash = 0;
  std::int64_t total_area = 0;
  std::vector<std::int64_t> explored;  // explored cell count per timestep
  std::vector<int> forward;            // forward actions per timestep
  std::vector<OptionSelection> selections;
  std::string actions;  // 'L', 'R', 'F' per atomic step actually taken

  double coverage_at(int t) const;
  int forward_at(int t) const;
  int steps_taken() const { return static_cast<int>(actions.size()); }
  double final_coverage() const { return coverage_at(static_cast<int>(explored.size()) - 1); }
};

struct EvalRun {
  std::string method;
  std::uint64_t env_fingerprint = 0;
  std::uint64_t model_fingerprint = 0;  // 0 for the learning-free method
  bool transfer = false;                // eval_gen differs from the training distribution
  std::vector<EpisodeSeries> episodes;
};

/// Deterministic per-episode start seed for the k-th start on a plan.
std::uint64_t eval_start_seed(std::uint64_t experiment_seed, std::uint64_t plan_seed, int k);

/// Runs one greedy evaluation episode. `policy` may be null for the
/// learning-free method.
EpisodeSeries run_episode(Method method, const Policy* policy, const ExperimentConfig& config,
                          std::shared_ptr<const FloorPlan> plan, std::uint64_t plan_seed, std::uint64_t start_seed,
                          int episode_budget, bool disable_lookaround = false);

/// Plans are generated once per seed and shared across starts.
EvalRun run_eval(const ExperimentConfig& config, const Policy* policy);

/// Loads a checkpoint and rejects one whose fingerprint or network shape does
/// not match the config.
Policy load_policy_for(const ExperimentConfig& config, const std::string& checkpoint);

struct TrainOutcome {
  std::string final_checkpoint;
  int updates_run = 0;
};

/// Trains into config.out_dir: config.txt, train_log.csv, ckpt_NNNNNN.bin
/// (ckpt_000000 is the initial policy) and final.bin. With `resume` the latest
/// checkpoint in the directory is continued and the log truncated to match.
TrainOutcome run_train(const ExperimentConfig& config, bool resume = false, bool verbose = false);

/// Trajectory log: one header line, then one line per episode with its seeds,
/// plan hash, final explored count and the atomic action string.
void write_trajectory_log(const std::string& path, const EvalRun& run, const ExperimentConfig& config);

struct ReplayEpisode {
  int episode = 0;
  std::uint64_t plan_seed = 0;
  std::uint64_t start_seed = 0;
  std::uint64_t plan_hash = 0;
  std::int64_t final_explored = 0;
  std::string actions;
  bool complete = true;  // false for a line cut short; actions are then a prefix
};

struct TrajectoryLog {
  std::string method;
  std::uint64_t env_fingerprint = 0;
  bool transfer = false;
  std::vector<ReplayEpisode> episodes;
};

TrajectoryLog read_trajectory_log(const std::string& path);

struct ReplayResult {
  MapStack maps;
  CoverageStats stats;
  int steps = 0;
  bool complete_log = true;  // false when only a prefix was available
};

/// Re-simulates an episode from its seeds. Throws FormatError if the plan
/// regenerated from the config does not hash to the logged value, or if a full
/// replay does not reproduce the logged final coverage.
// `max_steps` < 0 replays everything; `on_step` sees the environment after
// every action.
ReplayResult replay_episode(const ReplayEpisode& ep, const ExperimentConfig& config, bool transfer,
                            int max_steps = -1, const std::function<void(const Environment&)>& on_step = {});

/// Binary PPM render with the legend: obstacle, free, unexplored, trajectory,
/// frontier, agent.
void write_ppm(const std::string& path, const MapStack& maps, int scale = 4);

}  // namespace optionex
