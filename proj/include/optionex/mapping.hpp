#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "optionex/bitlayer.hpp"
#include "optionex/gridworld.hpp"

namespace optionex {

enum class Channel : int { Occupancy = 0, Explored = 1, Trajectory = 2, CurrentLocation = 3, Frontier = 4 };
inline constexpr int kNumChannels = 5;
const char* channel_name(Channel c);

/// The five online maps, in input-channel order. Map frame == world frame.
struct MapStack {
  MapStack() = default;
  MapStack(int width, int height);

  int width() const { return occupancy.width(); }
  int height() const { return occupancy.height(); }
  const BitLayer& channel(Channel c) const;
  Cell agent() const { return agent_; }

  BitLayer occupancy;
  BitLayer explored;
  BitLayer trajectory;
  BitLayer current_location;
  BitLayer frontier;

  bool operator==(const MapStack&) const = default;

  // Checks the channel invariants; returns an empty string when they hold.
  std::string check_invariants() const;

  // Five blocks in the floor-plan text format, each preceded by "# <channel>".
  void dump(std::ostream& out) const;

 private:
  friend void integrate_scan(MapStack&, const AgentPose&, const DepthScan&);
  Cell agent_{-1, -1};
};

/// Marks traversed cells explored, hit obstacles as occupancy, stamps the pose
/// into trajectory/current-location and recomputes the frontier. Bits in
/// occupancy, explored and trajectory are only ever set.
void integrate_scan(MapStack& maps, const AgentPose& pose, const DepthScan& scan);

/// A cell is frontier iff explored, not occupancy, and 4-adjacent to an
/// unexplored in-bounds cell. Row-parallel under OpenMP.
BitLayer compute_frontier(const BitLayer& explored, const BitLayer& occupancy);
/// Same shifted-mask kernel, single-threaded.
BitLayer compute_frontier_serial(const BitLayer& explored, const BitLayer& occupancy);

struct CoverageStats {
  std::int64_t explored_count = 0;
  std::int64_t total_area = 0;
  double coverage = 0.0;
};

CoverageStats coverage(const MapStack& maps, const FloorPlan& plan);

/// Increment of explored area as a fraction of total area.
double coverage_reward(const CoverageStats& prev, const CoverageStats& next);

}  // namespace optionex
