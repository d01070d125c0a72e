#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/kernels.hpp"

namespace hyperspec {

/// Nonnegative vector normalized to unit r-th power sum.
struct PerronVector {
  std::vector<double> values;
};

struct SpectralResult {
  double rho = 0.0;
  PerronVector vector;
  long iterations = 0;
  /// max_v |(A x^{r-1})_v - rho x_v^{r-1}| at the returned vector.
  double residual = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool converged = false;
  /// Bracket after every iteration, only filled when SpectralOptions::trace is set.
  std::vector<std::pair<double, double>> bracket_trace;
};

struct SpectralOptions {
  double tol = 1e-10;
  long max_iter = 100000;
  /// Shift sigma in y = A x^{r-1} + sigma x^{[r-1]}.
  double shift = 1.0;
  bool trace = false;
  /// Kernel table; nullptr selects kernels::active().
  const kernels::KernelTable* kernels = nullptr;
};

/// Class-constant reduction of a blow-up: one unknown per base vertex, each
/// edge residue weighted by the part sizes of the vertices it contains.
struct QuotientSystem {
  QuotientSystem(UniformHypergraph base, std::vector<int> weights);

  UniformHypergraph base;
  std::vector<int> weights;
};

class NotConvergedError : public std::runtime_error {
 public:
  NotConvergedError(const std::string& what, SpectralResult result)
      : std::runtime_error(what), result_(std::move(result)) {}
  const SpectralResult& result() const { return result_; }

 private:
  SpectralResult result_;
};

/// y_v = sum_{e containing v} prod_{u in e \ v} x_u, one pass over the edges.
std::vector<double> apply_adjacency(const UniformHypergraph& g, std::span<const double> x,
                                    const kernels::KernelTable* table = nullptr);

/// A(G) x^r = sum_e r x^e for x with unit r-th power sum (checked to 1e-9).
double rayleigh_value(const UniformHypergraph& g, std::span<const double> x);

double residual(const UniformHypergraph& g, std::span<const double> x, double rho,
                const kernels::KernelTable* table = nullptr);

/// Shifted power iteration with Collatz-Wielandt bracketing. Disconnected
/// inputs are solved per component; the largest component value wins and its
/// vector is returned padded with zeros.
SpectralResult spectral_radius(const UniformHypergraph& g, const SpectralOptions& options = {});

/// Spectral radius of blow_up(base, weights) without building the blow-up.
/// The returned vector has one entry per base vertex and satisfies
/// sum_i w_i x_i^r = 1, so expanding it class-constantly gives the blow-up's
/// normalized Perron vector.
SpectralResult quotient_spectral_radius(const QuotientSystem& system, const SpectralOptions& options = {});

/// Class-constant expansion of a quotient vector onto the blow-up vertices.
std::vector<double> expand_quotient_vector(std::span<const double> base_values, std::span<const int> weights);

/// Convenience for callers that treat non-convergence as an error.
SpectralResult require_converged(SpectralResult result, const std::string& context);

}  // namespace hyperspec
