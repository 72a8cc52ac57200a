#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "optionex/agent.hpp"

namespace optionex {

struct TrainConfig {
  double gamma = 0.99;
  int macro_budget = kDefaultMacroBudget;
  int cadence = 20;  // macro-actions per worker between updates
  int num_envs = 8;
  double clip_eps = 0.2;
  double lr_policy = 3e-4;
  double lr_value = 1e-3;
  double lr_termination = 3e-4;
  double entropy_weight = 0.01;
  double grad_clip = 0.5;
  int episode_length = 1000;
  int buffer_capacity = 20;
  int updates = 200;
  int checkpoint_every = 50;  // 0 disables periodic checkpoints

  bool operator==(const TrainConfig&) const = default;
};

void validate(const TrainConfig& c);

/// One-step advantage: r + gamma * v_next - v_cur.
double advantage(double r, double v_next, double v_cur, double gamma);
/// Option-critic TD target: r + gamma * ((1 - beta) v_next_same + beta v_next_max).
double td_target(double r, double beta, double v_next_same, double v_next_max, double gamma);

/// Clipped surrogate for one sample: min(ratio A, clip(ratio, 1-eps, 1+eps) A).
double clipped_surrogate(double ratio, double adv, double eps);
/// d surrogate / d ratio (0 where the clip is active).
double clipped_surrogate_slope(double ratio, double adv, double eps);

/// FIFO store of whole trajectories (one per worker per collection round).
class RolloutBuffer {
 public:
  explicit RolloutBuffer(int capacity = 20) : capacity_(capacity) {}

  void push(std::vector<Transition> trajectory);
  int capacity() const { return capacity_; }
  std::size_t trajectory_count() const { return trajectories_.size(); }
  std::size_t transition_count() const;
  bool empty() const { return transition_count() == 0; }
  const std::deque<std::vector<Transition>>& trajectories() const { return trajectories_; }
  std::uint64_t macro_action_counter() const { return macro_actions_; }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& traj : trajectories_)
      for (const auto& t : traj) f(t);
  }

 private:
  int capacity_;
  std::deque<std::vector<Transition>> trajectories_;
  std::uint64_t macro_actions_ = 0;
};

struct UpdateStats {
  double objective = 0.0;  // mean surrogate + entropy bonus, or mean loss
  double grad_norm = 0.0;
};

/// One clipped-surrogate ascent step on the intra-option heads and trunk.
UpdateStats policy_update(const RolloutBuffer& buffer, Policy& policy, Method method, const TrainConfig& config);
/// One step on the termination heads only.
UpdateStats termination_update(const RolloutBuffer& buffer, Policy& policy, const TrainConfig& config);
/// One descent step on the squared TD error (value heads and trunk).
UpdateStats value_update(const RolloutBuffer& buffer, Policy& policy, Method method, const TrainConfig& config);

// The objectives themselves, for finite-difference checks and logging.
double policy_objective(const RolloutBuffer& buffer, const Policy& policy, Method method, const TrainConfig& config,
                        Params* grad = nullptr);
double value_loss(const RolloutBuffer& buffer, const Policy& policy, Method method, const TrainConfig& config,
                  Params* grad = nullptr);
// Mean of beta(s') * (V(s', w) - max V(s', .)); its negative gradient is the
// termination step direction.
double termination_objective(const RolloutBuffer& buffer, const Policy& policy, const TrainConfig& config,
                             Params* grad = nullptr);

/// Draws training plans and start poses for a worker.
struct PlanSource {
  std::uint64_t seed_lo = 0;
  std::uint64_t seed_hi = 1000;  // exclusive
  int width = 64;
  int height = 64;
  GenParams gen;
  SensorConfig sensor;
};

/// A simulator slot: its environment, controller and random stream.
struct Worker {
  int id = 0;
  Rng rng;
  std::unique_ptr<Environment> env;
  std::unique_ptr<Controller> controller;
  int episode = 0;
  int episodes_done = 0;
  std::vector<double> finished_coverage;
};

/// Parallel simulators sharing one read-only policy snapshot.
class RolloutCollector {
 public:
  RolloutCollector(Method method, const TrainConfig& config, PlanSource source, std::uint64_t seed);

  /// Each worker runs `cadence` macro-actions; workers meet at every macro
  /// boundary. Returns one trajectory per worker.
  std::vector<std::vector<Transition>> collect(const Policy& policy);

  int episodes_done() const;
  std::vector<double> take_finished_coverage();
  double mean_current_coverage() const;
  const std::vector<Worker>& workers() const { return workers_; }

 private:
  void start_episode(Worker& w, const Policy& policy);

  Method method_;
  TrainConfig config_;
  PlanSource source_;
  std::vector<Worker> workers_;
};

/// Convenience wrapper used by tests: collect once into a fresh buffer.
RolloutBuffer collect_rollouts(RolloutCollector& collector, const Policy& policy, int capacity);

struct TrainLogRow {
  int update_index = 0;
  int episodes_done = 0;
  double mean_macro_reward = 0.0;
  double mean_coverage = 0.0;
  double option1_freq = 0.0;
  double option2_freq = 0.0;
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double termination_loss = 0.0;
};

std::string train_log_header();
std::string format_log_row(const TrainLogRow& r);

struct TrainResult {
  Policy policy;
  std::vector<TrainLogRow> log;
};

struct TrainHooks {
  // Called after every update; returning false aborts training.
  std::function<bool(int update, const Policy&, const TrainLogRow&)> on_update;
};

TrainResult train(Method method, const NetConfig& net, const TrainConfig& config, const PlanSource& source,
                  std::uint64_t seed, const TrainHooks& hooks = {}, const Policy* resume_from = nullptr,
                  int first_update = 0);

}  // namespace optionex
