#pragma once

#include <cstdint>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct Rational {
  long num;
  long den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return num % den == 0; }
};

/// A blow-up of SH(m,q,r) with part sizes in the kernel-then-petals order.
class SunflowerBlowup {
 public:
  SunflowerBlowup(SunflowerParams params, std::vector<int> parts);

  const SunflowerParams& params() const { return params_; }
  const std::vector<int>& parts() const { return parts_; }

  /// Product of the kernel part sizes.
  std::uint64_t kernel_product() const;
  /// Product of the part sizes of petal l (1-based).
  std::uint64_t petal_product(int l) const;

 private:
  SunflowerParams params_;
  std::vector<int> parts_;
};

/// g_p(s): the largest product of p positive integers summing to s.
struct BalancedSplit {
  BalancedSplit(long total, long slots);

  long s;
  long p;
  long a;  ///< floor(s / p)
  long l;  ///< s - a p
  std::uint64_t value;
};

/// rho(SH(m,q,r) o parts) =
///   P_X^{(r-1)/r} * [ sum_l P_l^{(r-1)/(r-q)} ]^{(r-q)/r}.
double sunflower_rho(const SunflowerBlowup& sb);

/// Exponent (r-1)/(r-q) applied to the petal products.
Rational petal_exponent(const SunflowerParams& p);

std::uint64_t balanced_product(long s, long p);

/// rho(G o (k,...,k)) = k^{r-1} rho(G).
double scaling_rho(double rho_g, int k, int r);

}  // namespace hyperspec
