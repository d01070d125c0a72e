#include "hyperspec/compositions.hpp"

namespace hyperspec {

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

std::uint64_t composition_count(int n, int t) {
  if (t < 1 || n < t) return 0;
  // C(n-1, k) with k = min(t-1, n-t); each partial product is itself binomial.
  const std::uint64_t k = static_cast<std::uint64_t>(std::min(t - 1, n - t));
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (static_cast<std::uint64_t>(n) - i) / i;
  return c;
}

std::vector<Composition> enumerate_compositions(int n, int t) {
  std::vector<Composition> out;
  out.reserve(composition_count(n, t));
  for_each_composition(n, t, [&](const std::vector<int>& c) { out.push_back({c}); });
  return out;
}

}  // namespace hyperspec
