#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "optionex/network.hpp"

namespace optionex {

enum class OptionId : std::uint8_t { FrontierNavigation = 0, LookAround = 1 };
inline constexpr int kNumOptions = 2;
const char* option_name(OptionId o);

/// Greedy policy over options: argmax, ties go to frontier navigation.
OptionId choose_option(double v_frontier, double v_lookaround);

inline constexpr int kLookAngles[kNumAngles] = {90, 180, 270, 360};

/// Candidate cells for a pointer head together with their encodings. Row i of
/// `phi` encodes cells[i] as: x / W, y / H, (x - ax) / W, (y - ay) / H,
/// planned distance from the agent / (W + H), and the unexplored fraction of
/// the 7x7 window around the cell.
struct CellEncodings {
  std::vector<Cell> cells;
  std::vector<double> phi;
  std::size_t size() const { return cells.size(); }
  std::span<const double> row(std::size_t i) const { return {phi.data() + i * kCellEncodingDim, kCellEncodingDim}; }
};

CellEncodings encode_cells(const MapStack& maps, std::vector<Cell> cells);

/// Frontier candidates: the frontier layer, minus the agent's own cell when
/// any other frontier cell exists.
std::vector<Cell> frontier_candidates(const MapStack& maps);
/// Known free cells (explored and not occupancy).
std::vector<Cell> known_free_cells(const MapStack& maps);

std::vector<double> softmax(std::span<const double> logits);
std::vector<double> log_softmax(std::span<const double> logits);
double entropy(std::span<const double> probs);

struct Choice {
  int index = 0;
  double logprob = 0.0;
};

/// Samples from softmax(logits) when `rng` is set, otherwise takes the argmax
/// (lowest index on ties).
Choice choose(std::span<const double> logits, Rng* rng);

// Head evaluation. Pointer heads score cell i as phi_i . (W f + b); the
// categorical heads are W f + b over 4 angles or 3 atomic actions.
std::vector<double> pointer_logits(const Params& p, Group head, std::span<const double> f, const CellEncodings& enc);
std::vector<double> categorical_logits(const Params& p, Group head, std::span<const double> f);

// Backprop of d(objective)/d(logits) into the head's parameters (accumulated
// into grad). Returns d(objective)/d(features).
std::vector<double> pointer_backward(const Params& p, Group head, std::span<const double> f, const CellEncodings& enc,
                                     std::span<const double> dlogits, Params& grad);
std::vector<double> categorical_backward(const Params& p, Group head, std::span<const double> f,
                                         std::span<const double> dlogits, Params& grad);

struct OptionValues {
  double frontier = 0.0;
  double lookaround = 0.0;
  double operator[](OptionId o) const { return o == OptionId::FrontierNavigation ? frontier : lookaround; }
  double max() const { return frontier > lookaround ? frontier : lookaround; }
};

OptionValues option_values(const Params& p, std::span<const double> f);
// d V(s, option) / d(features) and the head gradient scaled by `scale`.
std::vector<double> value_backward(const Params& p, OptionId option, std::span<const double> f, double scale,
                                   Params& grad);

inline constexpr double kTerminationLogitClamp = 30.0;
double termination_logit(const Params& p, std::span<const double> f, OptionId option);
/// Logistic of the head's logit (clamped to +-30), so strictly inside (0, 1).
double termination_prob(const Params& p, std::span<const double> f, OptionId option);
// Accumulates scale * d beta / d eta into grad (termination head only).
void termination_backward(const Params& p, OptionId option, std::span<const double> f, double scale, Params& grad);

struct GoalSample {
  Cell goal;
  double logprob = 0.0;
  int index = 0;
};

/// Pointer softmax over frontier candidates. Throws NoFrontier on an empty set.
GoalSample sample_frontier_goal(const Params& p, std::span<const double> f, const MapStack& maps, Rng* rng);
/// Pointer softmax over known free cells (arbitrary-point agent).
GoalSample sample_arbitrary_goal(const Params& p, std::span<const double> f, const MapStack& maps, Rng* rng);

struct AngleSample {
  int angle = 360;
  double logprob = 0.0;
  int index = 3;
};
AngleSample sample_lookaround_angle(const Params& p, std::span<const double> f, Rng* rng);

/// Map encoder plus parameters; the unit that gets checkpointed.
class Policy {
 public:
  Policy() : trunk_(NetConfig{}) {}
  explicit Policy(const NetConfig& config) : trunk_(config), params_(config) {}
  Policy(const NetConfig& config, std::uint64_t seed);

  const NetConfig& config() const { return trunk_.config(); }
  const Trunk& trunk() const { return trunk_; }
  const Params& params() const { return params_; }
  Params& params() { return params_; }

  std::vector<double> features(const MapStack& maps, TrunkCache* cache = nullptr) const;

 private:
  Trunk trunk_;
  Params params_;
};

// Checkpoint: "OPTXCKPT" magic, u32 version, u64 fingerprint, config block
// (height, width, conv count, conv widths, hidden, feature dim, value bias
// init), u64 parameter count, then every tensor in layout order as
// little-endian IEEE-754 doubles.
inline constexpr std::uint32_t kCheckpointVersion = 1;
void save_checkpoint(std::ostream& out, const Policy& policy, std::uint64_t fingerprint);
Policy load_checkpoint(std::istream& in, std::uint64_t* fingerprint = nullptr);
void save_checkpoint(const std::string& path, const Policy& policy, std::uint64_t fingerprint);
Policy load_checkpoint(const std::string& path, std::uint64_t* fingerprint = nullptr);

}  // namespace optionex
