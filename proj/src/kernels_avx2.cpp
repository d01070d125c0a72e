// Built with -mavx2 and no FMA; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <cmath>

#include "hyperspec/kernels.hpp"
#include "kernels_internal.hpp"

namespace hyperspec::kernels {

namespace {

constexpr std::size_t kLanes = 4;
constexpr std::size_t kMaxRank = 16;

void edge_products(std::span<const std::uint32_t> edges, int rank, std::span<const double> x,
                   std::span<double> y) {
  const std::size_t r = static_cast<std::size_t>(rank);
  const std::size_t count = edges.size() / r;
  if (r > kMaxRank) {
    scalar().edge_products(edges, rank, x, y);
    return;
  }
  const std::uint32_t* e = edges.data();
  alignas(32) double prod[kMaxRank][kLanes];
  __m256d slot[kMaxRank];

  std::size_t b = 0;
  for (; b + kLanes <= count; b += kLanes) {
    const std::uint32_t* e0 = e + b * r;
    for (std::size_t s = 0; s < r; ++s) {
      __m128i idx = _mm_set_epi32(static_cast<int>(e0[3 * r + s]), static_cast<int>(e0[2 * r + s]),
                                  static_cast<int>(e0[r + s]), static_cast<int>(e0[s]));
      slot[s] = _mm256_i32gather_pd(x.data(), idx, 8);
    }
    for (std::size_t k = 0; k < r; ++k) {
      __m256d p = _mm256_set1_pd(1.0);
      for (std::size_t j = 0; j < r; ++j)
        if (j != k) p = _mm256_mul_pd(p, slot[j]);
      _mm256_store_pd(prod[k], p);
    }
    // Scatter in the reference order: edge by edge, slot by slot.
    for (std::size_t lane = 0; lane < kLanes; ++lane)
      for (std::size_t k = 0; k < r; ++k) y[e0[lane * r + k]] += prod[k][lane];
  }
  if (b < count) scalar().edge_products(edges.subspan(b * r), rank, x, y);
}

void int_power(std::span<const double> x, int k, std::span<double> out) {
  std::size_t i = 0;
  for (; i + kLanes <= x.size(); i += kLanes) {
    __m256d v = _mm256_loadu_pd(x.data() + i);
    __m256d p = v;
    for (int s = 1; s < k; ++s) p = _mm256_mul_pd(p, v);
    _mm256_storeu_pd(out.data() + i, p);
  }
  if (i < x.size()) scalar().int_power(x.subspan(i), k, out.subspan(i));
}

void root(std::span<const double> x, int k, std::span<double> out) {
  std::size_t i = 0;
  if (k == 1 || k == 2) {
    for (; i + kLanes <= x.size(); i += kLanes) {
      __m256d v = _mm256_loadu_pd(x.data() + i);
      _mm256_storeu_pd(out.data() + i, k == 2 ? _mm256_sqrt_pd(v) : v);
    }
  }
  for (; i < x.size(); ++i) out[i] = detail::scalar_root(x[i], k);
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  for (; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void add_scaled(std::span<const double> x, double alpha, std::span<double> y) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= x.size(); i += kLanes) {
    __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), t));
  }
  for (; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::span<double> x, double alpha) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= x.size(); i += kLanes)
    _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i), va));
  for (; i < x.size(); ++i) x[i] *= alpha;
}

double hmin(__m256d v) {
  alignas(32) double t[kLanes];
  _mm256_store_pd(t, v);
  return std::fmin(std::fmin(t[0], t[1]), std::fmin(t[2], t[3]));
}

double hmax(__m256d v) {
  alignas(32) double t[kLanes];
  _mm256_store_pd(t, v);
  return std::fmax(std::fmax(t[0], t[1]), std::fmax(t[2], t[3]));
}

Bounds ratio_bounds(std::span<const double> num, std::span<const double> den) {
  if (num.size() < kLanes) return scalar().ratio_bounds(num, den);
  __m256d lo = _mm256_div_pd(_mm256_loadu_pd(num.data()), _mm256_loadu_pd(den.data()));
  __m256d hi = lo;
  std::size_t i = kLanes;
  for (; i + kLanes <= num.size(); i += kLanes) {
    __m256d q = _mm256_div_pd(_mm256_loadu_pd(num.data() + i), _mm256_loadu_pd(den.data() + i));
    lo = _mm256_min_pd(lo, q);
    hi = _mm256_max_pd(hi, q);
  }
  Bounds b{hmin(lo), hmax(hi)};
  for (; i < num.size(); ++i) {
    double q = num[i] / den[i];
    b.lo = std::fmin(b.lo, q);
    b.hi = std::fmax(b.hi, q);
  }
  return b;
}

double power_sum(std::span<const double> x, int k, std::span<const double> w) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= x.size(); i += kLanes) {
    __m256d v = _mm256_loadu_pd(x.data() + i);
    __m256d p = v;
    for (int s = 1; s < k; ++s) p = _mm256_mul_pd(p, v);
    if (!w.empty()) p = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), p);
    acc = _mm256_add_pd(acc, p);
  }
  alignas(32) double lane[kLanes];
  _mm256_store_pd(lane, acc);
  for (; i < x.size(); ++i) {
    double p = x[i];
    for (int s = 1; s < k; ++s) p *= x[i];
    if (!w.empty()) p = w[i] * p;
    lane[i % kLanes] += p;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double max_abs_diff(std::span<const double> a, double alpha, std::span<const double> b) {
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_mul_pd(va, _mm256_loadu_pd(b.data() + i)));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
  }
  double out = hmax(m);
  for (; i < a.size(); ++i) out = std::fmax(out, std::fabs(a[i] - alpha * b[i]));
  return out;
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2",     edge_products, int_power,    root,      multiply,
                                 add_scaled, scale,         ratio_bounds, power_sum, max_abs_diff};
  return table;
}

}  // namespace detail
}  // namespace hyperspec::kernels
