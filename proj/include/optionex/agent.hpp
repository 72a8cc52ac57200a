#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optionex/environment.hpp"
#include "optionex/planner.hpp"
#include "optionex/policy.hpp"

namespace optionex {

/// Exploration agents: the two-option method, its navigation-only ablation,
/// and the comparison agents.
enum class Method : std::uint8_t { Full, OptionDisabled, Frontier, Arbitrary, Atomic };
const char* method_name(Method m);
Method method_from_name(const std::string& name);  // throws ConfigError
bool is_learned(Method m);
// Policy head used by the method's (first) option.
Group primary_head(Method m);

enum class ActionKind : std::uint8_t { Goal, Angle, Atomic };

/// One macro-level transition as collected by a worker.
struct Transition {
  MapStack state;
  MapStack next_state;
  OptionId option = OptionId::FrontierNavigation;
  ActionKind kind = ActionKind::Goal;
  int action_index = 0;  // index into the candidate list at `state`, angle index, or atomic action
  Cell goal{-1, -1};
  int angle = 0;
  double logprob = 0.0;
  double reward = 0.0;
  std::int64_t gain = 0;
  int steps = 0;
  OptionValues values;       // V(s, .)
  OptionValues next_values;  // V(s', .)
  double beta_next = 0.0;    // beta_option(s')
  bool terminated = false;
  bool done = false;  // episode finished with the map complete; no bootstrap from s'
  int worker = 0;
  int episode = 0;
  int macro_index = 0;
};

struct AgentConfig {
  int macro_budget = kDefaultMacroBudget;
  // Consecutive zero-step macro-actions after which the episode is cut short
  // (a greedy agent that keeps picking an unreachable goal would never
  // consume its step budget).
  int max_idle_macros = 16;
  // Closest-frontier agent: full rotation on arrival.
  bool rotate_on_arrival = true;
};

struct MacroStep {
  std::optional<Transition> transition;  // only for learned methods when recording
  OptionId option = OptionId::FrontierNavigation;
  int start_timestep = 0;
  int steps = 0;
  std::int64_t gain = 0;
  double reward = 0.0;
  bool episode_over = false;
  bool acted = false;  // false when the episode ended before any macro-action
};

/// Runs one method macro-action by macro-action on an Environment. Greedy
/// mode takes argmax intra-option actions; termination draws always come from
/// the supplied stream so greedy runs stay reproducible.
class Controller {
 public:
  Controller(Method method, const Policy* policy, AgentConfig config, bool greedy);

  Method method() const { return method_; }
  OptionId option() const { return option_; }
  // Forces every option selection to navigation (probability of look-around 0).
  void disable_lookaround(bool v) { no_lookaround_ = v; }

  // Swapping the policy drops any cached features.
  void set_policy(const Policy* policy) {
    policy_ = policy;
    cache_valid_ = false;
  }

  void begin_episode(const Environment& env);
  MacroStep step(Environment& env, Rng& rng, bool record);
  bool episode_over() const { return over_; }

 private:
  const std::vector<double>& features(const Environment& env);
  MacroStep step_frontier(Environment& env);
  OptionId select_option(const OptionValues& v) const;

  Method method_;
  const Policy* policy_;
  AgentConfig config_;
  bool greedy_;
  bool no_lookaround_ = false;
  OptionId option_ = OptionId::FrontierNavigation;
  bool over_ = false;
  int idle_ = 0;
  int macro_index_ = 0;
  std::vector<double> cached_features_;
  bool cache_valid_ = false;
};

}  // namespace optionex
