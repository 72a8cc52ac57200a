#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace optionex {

struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

// Grid y grows downwards; N is y - 1. Turning left is counter-clockwise.
enum class Heading : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

inline constexpr int kHeadingDx[4] = {1, 0, -1, 0};
inline constexpr int kHeadingDy[4] = {0, -1, 0, 1};

inline Heading turn_left(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 1) % 4); }
inline Heading turn_right(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 3) % 4); }
inline Cell ahead(Cell c, Heading h) {
  return {c.x + kHeadingDx[static_cast<int>(h)], c.y + kHeadingDy[static_cast<int>(h)]};
}
inline double heading_degrees(Heading h) { return 90.0 * static_cast<int>(h); }
char heading_char(Heading h);

// Errors. Each failure mode named by the interface contracts gets its own type so
// callers can react to it (the learner treats NoFrontier differently from I/O failure).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenerationFailed : Error { using Error::Error; };
struct EpisodeOver : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnreachableGoal : Error { using Error::Error; };
struct InvalidGoal : Error { using Error::Error; };
struct NoFrontier : Error { using Error::Error; };
struct EmptyBuffer : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct FingerprintMismatch : Error { using Error::Error; };

}  // namespace optionex
