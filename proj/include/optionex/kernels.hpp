#pragma once

#include <span>

namespace optionex::kernels {

// 3x3 stride-2 pad-1 convolution over CHW tensors in double precision.
struct ConvShape {
  int in_c = 0, in_h = 0, in_w = 0;
  int out_c = 0, out_h = 0, out_w = 0;
  static constexpr int kKernel = 3;
  static constexpr int kStride = 2;
  static constexpr int kPad = 1;

  static ConvShape make(int in_c, int in_h, int in_w, int out_c);
  int in_size() const { return in_c * in_h * in_w; }
  int out_size() const { return out_c * out_h * out_w; }
  int weight_size() const { return out_c * in_c * kKernel * kKernel; }
};

// The OpenMP variants split work over channels; each output element is
// produced by exactly one thread, so results do not depend on thread count.
void conv2d_forward(const ConvShape& s, std::span<const double> in, std::span<const double> weight,
                    std::span<const double> bias, std::span<double> out);
// Accumulates into dweight/dbias; overwrites din unless it is empty.
void conv2d_backward(const ConvShape& s, std::span<const double> in, std::span<const double> weight,
                     std::span<const double> dout, std::span<double> din, std::span<double> dweight,
                     std::span<double> dbias);

// Straight-loop references. The backward pass scatters into din, so it sums in
// a different order from the gather used by conv2d_backward.
void conv2d_forward_serial(const ConvShape& s, std::span<const double> in, std::span<const double> weight,
                           std::span<const double> bias, std::span<double> out);
void conv2d_backward_serial(const ConvShape& s, std::span<const double> in, std::span<const double> weight,
                            std::span<const double> dout, std::span<double> din, std::span<double> dweight,
                            std::span<double> dbias);

// y = W x + b with W row-major [out][in].
void dense_forward(int in_dim, int out_dim, std::span<const double> x, std::span<const double> weight,
                   std::span<const double> bias, std::span<double> y);
void dense_backward(int in_dim, int out_dim, std::span<const double> x, std::span<const double> weight,
                    std::span<const double> dy, std::span<double> dx, std::span<double> dweight,
                    std::span<double> dbias);
void dense_forward_serial(int in_dim, int out_dim, std::span<const double> x, std::span<const double> weight,
                          std::span<const double> bias, std::span<double> y);
void dense_backward_serial(int in_dim, int out_dim, std::span<const double> x, std::span<const double> weight,
                           std::span<const double> dy, std::span<double> dx, std::span<double> dweight,
                           std::span<double> dbias);

}  // namespace optionex::kernels
