#include "hyperspec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperspec {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer product overflows 64 bits");
  return out;
}

std::uint64_t product(const std::vector<int>& parts, std::size_t first, std::size_t count) {
  std::uint64_t p = 1;
  for (std::size_t i = first; i < first + count; ++i) p = checked_mul(p, static_cast<std::uint64_t>(parts[i]));
  return p;
}

// log of a part product: exact integer when it fits, else a sum of logs.
double log_product(const std::vector<int>& parts, std::size_t first, std::size_t count) {
  try {
    return std::log(static_cast<double>(product(parts, first, count)));
  } catch (const std::overflow_error&) {
    double s = 0.0;
    for (std::size_t i = first; i < first + count; ++i) s += std::log(static_cast<double>(parts[i]));
    return s;
  }
}

}  // namespace

SunflowerBlowup::SunflowerBlowup(SunflowerParams params, std::vector<int> parts)
    : params_(params), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != params_.order())
    throw std::invalid_argument("sunflower blow-up needs " + std::to_string(params_.order()) + " parts, got " +
                                std::to_string(parts_.size()));
  if (std::ranges::any_of(parts_, [](int v) { return v < 1; }))
    throw std::invalid_argument("sunflower blow-up parts must be positive");
}

std::uint64_t SunflowerBlowup::kernel_product() const {
  return product(parts_, 0, static_cast<std::size_t>(params_.kernel_size()));
}

std::uint64_t SunflowerBlowup::petal_product(int l) const {
  return product(parts_, params_.petal_begin(l) - 1, static_cast<std::size_t>(params_.q));
}

BalancedSplit::BalancedSplit(long total, long slots) : s(total), p(slots) {
  if (p < 1 || s < p) throw std::invalid_argument("balanced split needs s >= p >= 1");
  a = s / p;
  l = s - a * p;
  value = 1;
  for (long i = 0; i < p - l; ++i) value = checked_mul(value, static_cast<std::uint64_t>(a));
  for (long i = 0; i < l; ++i) value = checked_mul(value, static_cast<std::uint64_t>(a + 1));
}

std::uint64_t balanced_product(long s, long p) { return BalancedSplit(s, p).value; }

Rational petal_exponent(const SunflowerParams& p) { return {p.r - 1, p.r - p.q}; }

double sunflower_rho(const SunflowerBlowup& sb) {
  const auto& p = sb.params();
  const auto& parts = sb.parts();
  const Rational kernel_exp{p.r - 1, p.r};
  const Rational petal_exp = petal_exponent(p);
  const Rational outer_exp{p.r - p.q, p.r};

  // Sorted so the sum does not depend on petal order.
  std::vector<double> terms;
  for (int l = 1; l <= p.m; ++l)
    terms.push_back(petal_exp.value() * log_product(parts, p.petal_begin(l) - 1, static_cast<std::size_t>(p.q)));
  std::ranges::sort(terms);
  const double top = terms.back();
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  const double log_petals = top + std::log(acc);

  const double log_kernel = log_product(parts, 0, static_cast<std::size_t>(p.kernel_size()));
  return std::exp(kernel_exp.value() * log_kernel + outer_exp.value() * log_petals);
}

double scaling_rho(double rho_g, int k, int r) {
  if (k < 1 || r < 2 || rho_g < 0.0) throw std::invalid_argument("scaling_rho needs k >= 1, r >= 2, rho >= 0");
  return std::pow(static_cast<double>(k), r - 1) * rho_g;
}

}  // namespace hyperspec
