#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "optionex/bitlayer.hpp"
#include "optionex/core.hpp"
#include "optionex/rng.hpp"

namespace optionex {

enum class Terrain : std::uint8_t { Free = 0, Obstacle = 1 };

/// Ground-truth world. Border is all obstacle, free space is 4-connected.
class FloorPlan {
 public:
  FloorPlan() = default;
  // Validates the invariants and throws FormatError on violation.
  FloorPlan(int width, int height, std::vector<Terrain> cells);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  Terrain at(Cell c) const { return cells_[index(c)]; }
  bool is_free(Cell c) const { return in_bounds(c) && at(c) == Terrain::Free; }
  bool is_obstacle(Cell c) const { return !is_free(c); }

  const std::vector<Cell>& free_cells() const { return free_cells_; }
  // Free cells plus obstacle cells 4-adjacent to a free cell.
  const BitLayer& observable() const { return observable_; }
  std::int64_t total_area() const { return total_area_; }

  std::uint64_t hash() const;
  bool operator==(const FloorPlan& o) const {
    return width_ == o.width_ && height_ == o.height_ && cells_ == o.cells_;
  }

  // Plain-text format: "width height" header, then one row per line, '#'
  // obstacle and '.' free.
  std::string to_text() const;
  static FloorPlan from_text(const std::string& text);
  static FloorPlan read(std::istream& in);

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<Terrain> cells_;
  std::vector<Cell> free_cells_;
  BitLayer observable_;
  std::int64_t total_area_ = 0;
};

struct GenParams {
  int room_count = 6;
  int min_room = 4;
  int max_room = 14;
  int corridor_width = 2;
  int clutter = 4;  // single-cell pillars dropped into rooms
  int max_attempts = 64;
};

void validate(const GenParams& p, int width, int height);

/// Rooms joined by L-shaped corridors; pillars are rejected if they would
/// disconnect free space. Identical (seed, size, params) give identical plans.
FloorPlan generate_floorplan(std::uint64_t seed, int width, int height, const GenParams& params = {});

enum class AtomicAction : std::uint8_t { TurnLeft = 0, TurnRight = 1, MoveForward = 2 };
inline constexpr int kNumAtomicActions = 3;
char action_char(AtomicAction a);
AtomicAction action_from_char(char c);

struct AgentPose {
  Cell cell;
  Heading heading = Heading::E;
  bool operator==(const AgentPose&) const = default;
};

struct SensorConfig {
  double fov = 90.0;
  double max_range = 10.0;
  int n_rays = 64;
};

void validate(const SensorConfig& s);

enum class HitType : std::uint8_t { Obstacle, MaxRange };

struct Ray {
  double offset = 0.0;    // degrees, counter-clockwise from heading
  double distance = 0.0;  // centre-to-centre distance of the hit cell, or max_range
  HitType hit = HitType::MaxRange;
};

struct DepthScan {
  std::vector<Ray> rays;
  double fov = 0.0;
  double max_range = 0.0;
  // Cells the scan observed, sorted row-major and de-duplicated.
  std::vector<Cell> free_cells;
  std::vector<Cell> obstacle_cells;
  bool operator==(const DepthScan& o) const;
};

/// Casts n_rays evenly over the field of view with supercover traversal from
/// the centre of the pose cell. Each ray visits cells in order of entry; where
/// it passes exactly through a lattice corner the two side cells are touched
/// together before the diagonal cell. A ray stops after the first group that
/// contains an obstacle, or before the first group with a cell whose centre
/// lies farther than max_range.
DepthScan sense(const FloorPlan& plan, const AgentPose& pose, const SensorConfig& sensor);

struct EpisodeState {
  AgentPose pose;
  int timestep = 0;
  int forward_count = 0;
  int budget = 1000;
  Rng rng;
};

std::pair<EpisodeState, DepthScan> reset(const FloorPlan& plan, std::uint64_t start_seed,
                                         const SensorConfig& sensor = {}, int budget = 1000);

struct StepResult {
  EpisodeState state;
  DepthScan scan;
  bool collided = false;
};

StepResult step(const EpisodeState& state, const FloorPlan& plan, AtomicAction action,
                const SensorConfig& sensor = {});

}  // namespace optionex
