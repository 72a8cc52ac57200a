#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "optionex/kernels.hpp"
#include "optionex/mapping.hpp"
#include "optionex/rng.hpp"

namespace optionex {

/// Shape of the map encoder and the heads on top of it.
struct NetConfig {
  int height = 128;
  int width = 128;
  std::vector<int> conv_channels{8, 16, 16, 32, 32, 32, 32};
  int hidden = 256;
  int feature_dim = 256;
  double value_bias_init = 1.0;

  bool operator==(const NetConfig&) const = default;
};

void validate(const NetConfig& c);

inline constexpr int kInputChannels = kNumChannels;
// Per-cell encoding fed to the pointer heads; see cell_encoding().
inline constexpr int kCellEncodingDim = 6;
inline constexpr int kNumAngles = 4;

/// Parameter groups. Trunk and the intra-option, atomic, arbitrary and value
/// heads form theta; the termination heads form eta and nothing else touches them.
enum class Group : std::uint8_t { Trunk, FrontierHead, LookHead, ValueHead, TerminationHead, AtomicHead, ArbitraryHead };
inline constexpr int kNumGroups = 7;
const char* group_name(Group g);

struct TensorSlot {
  std::string name;
  Group group;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Flat storage for every parameter with named, grouped slices. Gradients use
/// the same layout, so a gradient is simply another Params.
class Params {
 public:
  Params() = default;
  explicit Params(const NetConfig& config);

  const NetConfig& config() const { return config_; }
  const std::vector<TensorSlot>& slots() const { return slots_; }
  const TensorSlot& slot(const std::string& name) const;

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }
  std::span<double> tensor(const TensorSlot& s) { return {data_.data() + s.offset, s.size}; }
  std::span<const double> tensor(const TensorSlot& s) const { return {data_.data() + s.offset, s.size}; }
  std::span<double> tensor(const std::string& name) { return tensor(slot(name)); }
  std::span<const double> tensor(const std::string& name) const { return tensor(slot(name)); }

  void zero();
  Params zeros_like() const;
  void init(Rng& rng);

  double group_norm_sq(Group g) const;
  // this += scale * other, restricted to group g.
  void axpy(Group g, double scale, const Params& other);
  void scale(Group g, double factor);

  bool operator==(const Params& o) const { return config_ == o.config_ && data_ == o.data_; }

 private:
  void add(const std::string& name, Group g, std::size_t size);

  NetConfig config_;
  std::vector<TensorSlot> slots_;
  std::vector<double> data_;
};

/// Activations saved by the forward pass for backprop.
struct TrunkCache {
  std::vector<std::vector<double>> acts;  // acts[0] is the input; then each layer's post-ReLU output
  std::vector<double> features() const { return acts.back(); }
  // Sign pattern of every ReLU pre-activation, packed; used to detect
  // finite-difference steps that cross a kink.
  std::vector<bool> relu_pattern;
};

/// 5 x H x W input tensor (channel order = MapStack channel order).
std::vector<double> map_input(const MapStack& maps, const NetConfig& config);

/// Conv stack (k3 s2 p1, ReLU) followed by two ReLU dense layers.
class Trunk {
 public:
  explicit Trunk(const NetConfig& config);

  const NetConfig& config() const { return config_; }
  int feature_dim() const { return config_.feature_dim; }
  int flat_dim() const { return flat_dim_; }
  const std::vector<kernels::ConvShape>& conv_shapes() const { return shapes_; }

  std::vector<double> forward(const Params& p, std::span<const double> input, TrunkCache* cache = nullptr,
                              bool serial = false) const;
  // Accumulates d(loss)/d(trunk params) into grad. Returns d(loss)/d(input) when
  // want_input_grad is set, otherwise an empty vector.
  std::vector<double> backward(const Params& p, const TrunkCache& cache, std::span<const double> dfeatures,
                               Params& grad, bool want_input_grad = false, bool serial = false) const;

 private:
  NetConfig config_;
  std::vector<kernels::ConvShape> shapes_;
  int flat_dim_ = 0;
};

}  // namespace optionex
