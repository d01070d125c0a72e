#pragma once

// Inner loops of the tensor power iteration.
//
// Every kernel has a scalar reference and, where the host supports it, an AVX2
// variant. Variants are bit-identical to the reference: element-wise kernels
// use only correctly rounded operations in the same order, and reductions
// accumulate into four interleaved partial sums (lane i takes elements
// i, i+4, ...) combined as (s0 + s1) + (s2 + s3) in both implementations.

#include <cstdint>
#include <span>
#include <string_view>

namespace hyperspec::kernels {

struct Bounds {
  double lo;
  double hi;
};

struct KernelTable {
  std::string_view name;

  /// y[v] += sum over edges e containing v of prod_{u in e, u != v} x[u].
  /// `edges` is flat with `rank` 0-based ids per edge; products are formed
  /// left to right over the edge's slots and accumulated edge by edge.
  void (*edge_products)(std::span<const std::uint32_t> edges, int rank, std::span<const double> x,
                        std::span<double> y);

  /// out[i] = x[i]^k by k-1 repeated multiplications (k >= 1).
  void (*int_power)(std::span<const double> x, int k, std::span<double> out);

  /// out[i] = x[i]^(1/k); k = 1 copies, k = 2 is sqrt, otherwise pow.
  void (*root)(std::span<const double> x, int k, std::span<double> out);

  /// out[i] = a[i] * b[i].
  void (*multiply)(std::span<const double> a, std::span<const double> b, std::span<double> out);

  /// y[i] += alpha * x[i].
  void (*add_scaled)(std::span<const double> x, double alpha, std::span<double> y);

  /// x[i] *= alpha.
  void (*scale)(std::span<double> x, double alpha);

  /// min and max of num[i] / den[i] (den[i] > 0).
  Bounds (*ratio_bounds)(std::span<const double> num, std::span<const double> den);

  /// sum_i w[i] * x[i]^k, or sum_i x[i]^k when w is empty.
  double (*power_sum)(std::span<const double> x, int k, std::span<const double> w);

  /// max_i |a[i] - alpha * b[i]|.
  double (*max_abs_diff)(std::span<const double> a, double alpha, std::span<const double> b);
};

const KernelTable& scalar();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2();

/// The best table for this host. Setting HYPERSPEC_KERNELS=scalar in the
/// environment pins the scalar reference.
const KernelTable& active();

}  // namespace hyperspec::kernels
