#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "optionex/bitlayer.hpp"
#include "optionex/environment.hpp"

namespace optionex {

struct Path {
  std::vector<Cell> cells;
  int length() const { return static_cast<int>(cells.size()) - 1; }
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Uniform-cost wavefront over cells not marked in `blocked` (4-connected).
/// Distances are in steps; unreachable cells hold kUnreachable.
std::vector<int> distance_field(const BitLayer& blocked, Cell source);

/// Shortest 4-connected path over non-occupancy cells; unexplored cells count
/// as traversable. Cost-to-go is expanded from the goal and the path follows
/// steepest descent from the start, preferring E, N, W, S on ties.
Path plan_path(const BitLayer& occupancy, const BitLayer& explored, Cell start, Cell goal);

struct MacroTranscript {
  std::vector<AtomicAction> actions;
  int steps_used = 0;
  double reward = 0.0;
  std::int64_t explored_gain = 0;  // cells; reward == explored_gain / total_area
  bool terminal_state_reached = false;
  bool unreachable = false;
  bool goal_blocked = false;
};

inline constexpr int kDefaultMacroBudget = 50;

/// Drives the agent towards `goal`, replanning whenever a newly observed
/// obstacle lands on the remaining path. Stops on arrival, budget exhaustion,
/// episode end, or when the goal itself turns out to be an obstacle.
MacroTranscript execute_navigation(Environment& env, Cell goal, int budget = kDefaultMacroBudget);

/// angle / 90 left turns, each scan integrated. `angle` must be one of
/// 90, 180, 270, 360.
MacroTranscript execute_lookaround(Environment& env, int angle, int budget = kDefaultMacroBudget);

/// Rotation that gets from `from` to `to`: the shorter direction, left on ties.
/// Returns MoveForward when no rotation is needed.
AtomicAction turn_towards(Heading from, Heading to);

}  // namespace optionex
