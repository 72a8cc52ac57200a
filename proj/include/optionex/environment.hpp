#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "optionex/gridworld.hpp"
#include "optionex/mapping.hpp"

namespace optionex {

struct StepOutcome {
  bool collided = false;
  std::int64_t gained = 0;  // newly explored observable cells
  double reward = 0.0;
};

/// One simulator instance: ground-truth plan, episode state and the agent's
/// maps, kept in sync. Owns no shared mutable state, so instances can live on
/// different threads.
class Environment {
 public:
  Environment(std::shared_ptr<const FloorPlan> plan, SensorConfig sensor = {}, int episode_budget = 1000);

  void reset(std::uint64_t start_seed);
  StepOutcome act(AtomicAction action);

  const FloorPlan& plan() const { return *plan_; }
  std::shared_ptr<const FloorPlan> plan_ptr() const { return plan_; }
  const SensorConfig& sensor() const { return sensor_; }
  const EpisodeState& state() const { return state_; }
  const AgentPose& pose() const { return state_.pose; }
  const MapStack& maps() const { return maps_; }
  const CoverageStats& stats() const { return stats_; }
  int timestep() const { return state_.timestep; }
  int remaining() const { return state_.budget - state_.timestep; }
  bool budget_exhausted() const { return state_.timestep >= state_.budget; }
  // Every observable cell explored.
  bool complete() const { return stats_.explored_count == stats_.total_area; }

  // Per-step coverage after each atomic action (index 0 is the reset scan)
  // and the matching forward counts.
  const std::vector<std::int64_t>& explored_history() const { return explored_history_; }
  const std::vector<int>& forward_history() const { return forward_history_; }
  const std::vector<AtomicAction>& action_history() const { return actions_; }

 private:
  std::shared_ptr<const FloorPlan> plan_;
  SensorConfig sensor_;
  int budget_;
  EpisodeState state_;
  MapStack maps_;
  CoverageStats stats_;
  std::vector<std::int64_t> explored_history_;
  std::vector<int> forward_history_;
  std::vector<AtomicAction> actions_;
};

}  // namespace optionex
