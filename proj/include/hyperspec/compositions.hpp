#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperspec {

/// Ordered tuple of positive integers.
struct Composition {
  std::vector<int> parts;

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  std::size_t length() const { return parts.size(); }
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// C(n-1, t-1).
std::uint64_t composition_count(int n, int t);

/// Calls f(const std::vector<int>&) on every composition of n into t positive
/// parts, lexicographically.
template <class F>
void for_each_composition(int n, int t, F&& f) {
  if (t < 1 || n < t) throw std::invalid_argument("compositions need n >= t >= 1");
  std::vector<int> c(static_cast<std::size_t>(t), 1);
  c.back() = n - t + 1;
  while (true) {
    f(static_cast<const std::vector<int>&>(c));
    // Successor: rightmost slot j whose suffix still has a spare unit gets
    // bumped, the slots after it reset to 1 and the last slot takes the rest.
    int j = t - 2;
    int suffix = c.back();
    while (j >= 0 && suffix <= t - 1 - j) suffix += c[static_cast<std::size_t>(j--)];
    if (j < 0) return;
    ++c[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < t - 1; ++k) c[static_cast<std::size_t>(k)] = 1;
    c.back() = suffix - 1 - (t - 2 - j);
  }
}

std::vector<Composition> enumerate_compositions(int n, int t);

}  // namespace hyperspec
