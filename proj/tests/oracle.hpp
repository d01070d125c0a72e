#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library's numeric code: edges come in as plain vectors and all arithmetic
// is long double.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Edges = std::vector<std::vector<unsigned>>;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return v;
}

/// Transversal blow-up with ids assigned class by class.
inline Edges blow_up(const Edges& base, const std::vector<int>& parts) {
  std::vector<unsigned> first(parts.size() + 1, 1);
  for (std::size_t j = 0; j < parts.size(); ++j) first[j + 1] = first[j] + static_cast<unsigned>(parts[j]);
  Edges out;
  for (const auto& e : base) {
    std::vector<unsigned> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == e.size()) {
        auto s = cur;
        std::sort(s.begin(), s.end());
        out.push_back(s);
        return;
      }
      const unsigned c = e[k] - 1;
      for (unsigned v = first[c]; v < first[c + 1]; ++v) {
        cur.push_back(v);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Power iteration with shift 1/2 and max-entry normalization, stopped when
/// the Collatz-Wielandt bracket is below 1e-14 relative. Weights give the
/// class-constant reduction of a blow-up; pass all ones otherwise. Assumes a
/// connected edge set covering every vertex.
inline long double rho(int n, int r, const Edges& edges, std::vector<long double> w = {}) {
  if (w.empty()) w.assign(static_cast<std::size_t>(n), 1.0L);
  std::vector<long double> x(static_cast<std::size_t>(n), 1.0L);
  long double lo = 0, hi = 0;
  for (int it = 0; it < 2000000; ++it) {
    std::vector<long double> ax(static_cast<std::size_t>(n), 0.0L);
    for (const auto& e : edges)
      for (std::size_t a = 0; a < e.size(); ++a) {
        long double p = 1;
        for (std::size_t b = 0; b < e.size(); ++b)
          if (b != a) p *= w[e[b] - 1] * x[e[b] - 1];
        ax[e[a] - 1] += p;
      }
    lo = INFINITY;
    hi = 0;
    for (int v = 0; v < n; ++v) {
      const long double ratio = ax[v] / std::pow(x[v], static_cast<long double>(r - 1));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= 1e-14L * hi) break;
    long double mx = 0;
    for (int v = 0; v < n; ++v) {
      x[v] = std::pow(ax[v] + 0.5L * std::pow(x[v], static_cast<long double>(r - 1)), 1.0L / (r - 1));
      mx = std::max(mx, x[v]);
    }
    for (auto& xv : x) xv /= mx;
  }
  return (lo + hi) / 2;
}

/// Closed form for a sunflower blow-up, direct powers.
inline long double sunflower_rho(int m, int q, int r, const std::vector<int>& parts) {
  long double px = 1;
  for (int k = 0; k < r - q; ++k) px *= parts[static_cast<std::size_t>(k)];
  long double sum = 0;
  for (int l = 0; l < m; ++l) {
    long double pl = 1;
    for (int k = 0; k < q; ++k) pl *= parts[static_cast<std::size_t>(r - q + l * q + k)];
    sum += std::pow(pl, static_cast<long double>(r - 1) / (r - q));
  }
  return std::pow(px, static_cast<long double>(r - 1) / r) * std::pow(sum, static_cast<long double>(r - q) / r);
}

/// All compositions of n into t positive parts, order unspecified.
inline std::vector<std::vector<int>> compositions(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == t - 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = 1; v <= left - (t - 1 - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  if (t >= 1 && n >= t) rec(n);
  return out;
}

inline std::uint64_t max_product(int s, int p) {
  std::uint64_t best = 0;
  for (const auto& c : compositions(s, p)) {
    std::uint64_t v = 1;
    for (int x : c) v *= static_cast<std::uint64_t>(x);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace oracle
