#include <cmath>

#include "hyperspec/kernels.hpp"
#include "kernels_internal.hpp"

namespace hyperspec::kernels {

namespace {

void edge_products(std::span<const std::uint32_t> edges, int rank, std::span<const double> x,
                   std::span<double> y) {
  const std::size_t r = static_cast<std::size_t>(rank);
  for (std::size_t base = 0; base + r <= edges.size(); base += r) {
    const std::uint32_t* e = edges.data() + base;
    for (std::size_t k = 0; k < r; ++k) {
      double prod = 1.0;
      for (std::size_t j = 0; j < r; ++j)
        if (j != k) prod *= x[e[j]];
      y[e[k]] += prod;
    }
  }
}

void int_power(std::span<const double> x, int k, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    double p = x[i];
    for (int s = 1; s < k; ++s) p *= x[i];
    out[i] = p;
  }
}

void root(std::span<const double> x, int k, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = detail::scalar_root(x[i], k);
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void add_scaled(std::span<const double> x, double alpha, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::span<double> x, double alpha) {
  for (double& v : x) v *= alpha;
}

Bounds ratio_bounds(std::span<const double> num, std::span<const double> den) {
  Bounds b{num[0] / den[0], num[0] / den[0]};
  for (std::size_t i = 1; i < num.size(); ++i) {
    double q = num[i] / den[i];
    b.lo = std::fmin(b.lo, q);
    b.hi = std::fmax(b.hi, q);
  }
  return b;
}

double power_sum(std::span<const double> x, int k, std::span<const double> w) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    double p = x[i];
    for (int s = 1; s < k; ++s) p *= x[i];
    if (!w.empty()) p = w[i] * p;
    lane[i % 4] += p;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double max_abs_diff(std::span<const double> a, double alpha, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::fmax(m, std::fabs(a[i] - alpha * b[i]));
  return m;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar",  edge_products, int_power,    root,         multiply,
                                 add_scaled, scale,        ratio_bounds, power_sum,    max_abs_diff};
  return table;
}

}  // namespace hyperspec::kernels
