// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count; on a single core the two columns should roughly agree.

#include <benchmark/benchmark.h>

#include <vector>

#include "optionex/kernels.hpp"
#include "optionex/mapping.hpp"
#include "optionex/rng.hpp"

using namespace optionex;
using namespace optionex::kernels;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

// First layer of the default trunk: 5 x 128 x 128 -> 8 x 64 x 64.
ConvShape first_layer() { return ConvShape::make(5, 128, 128, 8); }

template <bool Serial>
void BM_ConvForward(benchmark::State& st) {
  const auto s = first_layer();
  const auto in = noise(static_cast<std::size_t>(s.in_size()), 1);
  const auto w = noise(static_cast<std::size_t>(s.weight_size()), 2);
  const auto b = noise(static_cast<std::size_t>(s.out_c), 3);
  std::vector<double> out(static_cast<std::size_t>(s.out_size()));
  for (auto _ : st) {
    if (Serial) conv2d_forward_serial(s, in, w, b, out);
    else conv2d_forward(s, in, w, b, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Serial>
void BM_ConvBackward(benchmark::State& st) {
  const auto s = ConvShape::make(8, 64, 64, 16);
  const auto in = noise(static_cast<std::size_t>(s.in_size()), 1);
  const auto w = noise(static_cast<std::size_t>(s.weight_size()), 2);
  const auto dout = noise(static_cast<std::size_t>(s.out_size()), 3);
  std::vector<double> din(static_cast<std::size_t>(s.in_size())), dw(w.size()), db(static_cast<std::size_t>(s.out_c));
  for (auto _ : st) {
    if (Serial) conv2d_backward_serial(s, in, w, dout, din, dw, db);
    else conv2d_backward(s, in, w, dout, din, dw, db);
    benchmark::DoNotOptimize(din.data());
  }
}

template <bool Serial>
void BM_Dense(benchmark::State& st) {
  const int in_dim = 2048, out_dim = 256;
  const auto x = noise(in_dim, 1);
  const auto w = noise(static_cast<std::size_t>(in_dim) * out_dim, 2);
  const auto b = noise(out_dim, 3);
  std::vector<double> y(out_dim);
  for (auto _ : st) {
    if (Serial) dense_forward_serial(in_dim, out_dim, x, w, b, y);
    else dense_forward(in_dim, out_dim, x, w, b, y);
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Serial>
void BM_Frontier(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(7);
  BitLayer explored(n, n), occupancy(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (rng.uniform() < 0.5) explored.set(x, y);
      if (rng.uniform() < 0.2) occupancy.set(x, y);
    }
  for (auto _ : st) {
    auto f = Serial ? compute_frontier_serial(explored, occupancy) : compute_frontier(explored, occupancy);
    benchmark::DoNotOptimize(f);
  }
}

}  // namespace

BENCHMARK(BM_ConvForward<true>)->Name("conv_forward/serial");
BENCHMARK(BM_ConvForward<false>)->Name("conv_forward/openmp");
BENCHMARK(BM_ConvBackward<true>)->Name("conv_backward/serial");
BENCHMARK(BM_ConvBackward<false>)->Name("conv_backward/openmp");
BENCHMARK(BM_Dense<true>)->Name("dense_forward/serial");
BENCHMARK(BM_Dense<false>)->Name("dense_forward/openmp");
BENCHMARK(BM_Frontier<true>)->Name("frontier/serial")->Arg(128)->Arg(1024);
BENCHMARK(BM_Frontier<false>)->Name("frontier/openmp")->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
