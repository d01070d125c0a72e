#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/closed_form.hpp"
#include "hyperspec/compositions.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

enum class Evaluator { quotient_solver, sunflower_closed_form };

std::string to_string(Evaluator e);

struct ExtremalOptions {
  /// Relative band for treating two spectral radii as tied.
  double tie_tol = 1e-9;
  int workers = 1;
  SpectralOptions solver;
};

struct RankedComposition {
  Composition composition;
  double rho;
};

struct ExtremalReport {
  std::string family;
  int n = 0;
  Evaluator evaluator = Evaluator::quotient_solver;
  std::size_t evaluations = 0;
  double tie_tolerance = 0.0;
  std::vector<RankedComposition> minima;  ///< lexicographic order
  std::vector<RankedComposition> maxima;

  std::vector<Composition> minimizers() const;
  std::vector<Composition> maximizers() const;
};

/// Thrown when some blow-up in a scan fails to converge.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, Composition parts, SpectralResult result)
      : std::runtime_error(what), parts_(std::move(parts)), result_(std::move(result)) {}
  const Composition& parts() const { return parts_; }
  const SpectralResult& result() const { return result_; }

 private:
  Composition parts_;
  SpectralResult result_;
};

/// "K_4^3", "SH(2,2,3)" or a generic description.
std::string family_name(const UniformHypergraph& g);

/// rho(G o parts) by the chosen evaluator.
double evaluate_blowup(const UniformHypergraph& g, const std::vector<int>& parts, Evaluator evaluator,
                       const SpectralOptions& solver = {});

/// Evaluates every member of B_n(G) and collects the tie-banded minima and maxima.
ExtremalReport brute_force_extremal(const UniformHypergraph& g, int n, Evaluator evaluator,
                                    const ExtremalOptions& options = {});

// Discrete optimizers ------------------------------------------------------

struct IntegerOptimum {
  std::vector<long> vector;
  double value;
};

/// R(b) = b_1^beta (b_2^beta + ... + b_l^beta).
double objective_R(const std::vector<long>& b, double beta);
/// f(s) = sum_i g_q(s_i)^beta.
double objective_f(const std::vector<long>& s, long q, double beta);

/// Minimizer of R over positive b summing to theta: b_1 = 1, the rest a
/// near-equal split of theta - 1 (smaller parts first). With `verify` the
/// optimum is recomputed by exhaustion and a mismatch throws std::logic_error.
IntegerOptimum minimize_R(long theta, long l, double beta, bool verify = false);

/// Maximizer of f over q <= s_1 <= ... <= s_m summing to theta:
/// s = (q, ..., q, theta - (m-1) q).
IntegerOptimum maximize_f(long theta, long m, long q, double beta, bool verify = false);

struct ExhaustiveOptimum {
  double value;
  std::vector<std::vector<long>> arguments;
};

/// All minimizers of R by exhaustion (exact integer comparison for integral beta).
ExhaustiveOptimum exhaustive_min_R(long theta, long l, double beta);
/// All maximizers of f over nondecreasing vectors by exhaustion.
ExhaustiveOptimum exhaustive_max_f(long theta, long m, long q, double beta);

// Maximum-spectral-radius objective over the kernel mass s -----------------

struct ObjectiveScan {
  int s_min = 0;
  int s_max = 0;
  /// Objective value for s = s_min + i.
  std::vector<double> values;
  /// Filled when (r-1)/(r-q) is an integer; the maxima are then exact.
  std::vector<std::uint64_t> exact_values;
  std::vector<int> maximum_points;
  double tie_tolerance = 1e-12;
};

/// Evaluates g_{r-q}(s)^e [m - 1 + g_q(n - s - (m-1) q)^e], e = (r-1)/(r-q),
/// for r-q <= s <= n-mq.
ObjectiveScan scan_eq14(int n, int m, int q, int r);

/// The maximum candidate with kernel mass s: kernel split near-equally, last
/// petal takes n - (m-1) q - s near-equally, other petals all ones.
std::vector<int> kernel_mass_candidate(const SunflowerParams& p, int n, int s);

// Extremal-class checkers ---------------------------------------------------

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  ExtremalReport report;
  std::vector<std::string> notes;
};

/// Minima of B_n(K_t^r) are exactly the permutations of (n-t+1,1,...,1) and
/// maxima exactly the near-equal splits.
VerificationReport verify_theorem5(int t, int r, int n, const ExtremalOptions& options = {});

/// SH(m,1,r): minima have unit kernel classes, all sharing one value; maxima
/// follow the n < mr / n >= mr split.
VerificationReport verify_theorem41(int m, int r, int n, const ExtremalOptions& options = {});

/// SH(m,q,r), q >= 2: minima put one designated vertex per petal at
/// floor/ceil((n-t)/m) + 1; maxima are the kernel-mass candidates at the
/// maximum points of scan_eq14.
VerificationReport verify_theorem9(int m, int q, int r, int n, const ExtremalOptions& options = {});

/// Argmax over s of scan_eq14 versus argmax over s of rho(kernel_mass_candidate(s)).
VerificationReport verify_eq14_transform(int n, int m, int q, int r, const SpectralOptions& solver = {});

/// minimize_R against exhaustion for theta in [l, theta_max].
VerificationReport verify_lemma7(long theta_max, long l, double beta);

/// maximize_f against exhaustion for theta in [mq, theta_max].
/// beta = 1 is compared on the optimum value only.
VerificationReport verify_lemma8(long theta_max, long m, long q, double beta);

/// `count` random shift-test instances; each must raise rho by more than 1e-9 rho.
VerificationReport verify_shift_batch(int count, unsigned long seed, const SpectralOptions& solver = {});

/// rho(G o (k,...,k)) against k^{r-1} rho(G) on `count` random connected
/// 3-uniform bases with t <= 6, full blow-up solved directly.
VerificationReport verify_scaling(int k, int count, unsigned long seed, const SpectralOptions& solver = {});

/// (rho before, rho after) moving one unit of part size from class i to class
/// j. Requires i ~ j, L_{G-j}(i) subset of L_{G-i}(j) and parts[i] - parts[j] >= 2.
std::pair<double, double> shift_test(const UniformHypergraph& g, const Composition& parts, Vertex i, Vertex j,
                                     const SpectralOptions& solver = {});

}  // namespace hyperspec
