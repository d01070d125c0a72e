#pragma once

#include <cmath>

namespace hyperspec::kernels {

struct KernelTable;

namespace detail {

inline double scalar_root(double v, int k) {
  if (k == 1) return v;
  if (k == 2) return std::sqrt(v);
  return std::pow(v, 1.0 / k);
}

#if defined(HYPERSPEC_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace detail
}  // namespace hyperspec::kernels
