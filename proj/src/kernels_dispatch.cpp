#include <cstdlib>
#include <string_view>

#include "hyperspec/kernels.hpp"
#include "kernels_internal.hpp"

namespace hyperspec::kernels {

const KernelTable* avx2() {
#if defined(HYPERSPEC_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* pin = std::getenv("HYPERSPEC_KERNELS");
    if (pin != nullptr && std::string_view(pin) == "scalar") return scalar();
    if (const auto* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace hyperspec::kernels
