#pragma once

#include <vector>

#include "optionex/agent.hpp"

namespace optionex {

enum class BaselineKind : std::uint8_t { FrontierClosest, AtomicRL, ArbitraryPointRL, OptionDisabled };
Method baseline_method(BaselineKind k);

/// Frontier cell with the shortest planned path from the pose; ties go to the
/// lowest (y, x). Throws NoFrontier when the frontier is empty or unreachable.
Cell frontier_closest_step(const MapStack& maps, const AgentPose& pose);

/// Probabilities over TurnLeft, TurnRight, MoveForward.
std::vector<double> atomic_agent(const Params& p, std::span<const double> features);

/// Probabilities over known free cells, in known_free_cells() order.
std::vector<double> arbitrary_point_agent(const Params& p, std::span<const double> features, const MapStack& maps);

/// The navigation head of the two-option policy used on its own.
GoalSample option_disabled_agent(const Params& p, std::span<const double> features, const MapStack& maps, Rng* rng);

}  // namespace optionex
