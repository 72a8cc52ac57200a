#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optionex/core.hpp"

namespace optionex {

/// Binary H x W grid packed into 64-bit words, one run of words per row.
/// Bit (x % 64) of word (x / 64) in row y holds cell (x, y). Bits past the
/// width are always zero.
class BitLayer {
 public:
  BitLayer() = default;
  BitLayer(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int words_per_row() const { return words_; }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool in_bounds(Cell c) const { return in_bounds(c.x, c.y); }

  bool get(int x, int y) const {
    return (bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] >> (x & 63)) & 1U;
  }
  bool get(Cell c) const { return get(c.x, c.y); }
  void set(int x, int y, bool v = true) {
    auto& w = bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)];
    const std::uint64_t m = std::uint64_t{1} << (x & 63);
    w = v ? (w | m) : (w & ~m);
  }
  void set(Cell c, bool v = true) { set(c.x, c.y, v); }

  std::span<std::uint64_t> row(int y) {
    return {bits_.data() + static_cast<std::size_t>(y) * words_, static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> row(int y) const {
    return {bits_.data() + static_cast<std::size_t>(y) * words_, static_cast<std::size_t>(words_)};
  }
  // Valid-bit mask for word w of any row.
  std::uint64_t word_mask(int w) const;

  void clear();
  void fill();
  std::int64_t count() const;
  bool any() const;
  // Cells in row-major (y, x) order.
  std::vector<Cell> cells() const;

  bool same_shape(const BitLayer& o) const { return width_ == o.width_ && height_ == o.height_; }
  bool subset_of(const BitLayer& o) const;
  bool intersects(const BitLayer& o) const;
  std::int64_t count_and(const BitLayer& o) const;

  BitLayer& operator|=(const BitLayer& o);
  BitLayer& operator&=(const BitLayer& o);
  friend BitLayer operator&(BitLayer a, const BitLayer& b) { return a &= b; }
  friend BitLayer operator|(BitLayer a, const BitLayer& b) { return a |= b; }
  BitLayer operator~() const;
  bool operator==(const BitLayer&) const = default;

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  void check_shape(const BitLayer& o) const;

  int width_ = 0;
  int height_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace optionex
