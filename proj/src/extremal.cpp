#include "hyperspec/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace hyperspec {

namespace {

std::optional<long> integral(double beta) {
  if (beta >= 0.0 && beta <= 64.0 && std::floor(beta) == beta) return static_cast<long>(beta);
  return std::nullopt;
}

std::uint64_t checked_pow(std::uint64_t base, long e) {
  std::uint64_t out = 1;
  for (long i = 0; i < e; ++i)
    if (__builtin_mul_overflow(out, base, &out)) throw std::overflow_error("exact objective overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exact objective overflows 64 bits");
  return out;
}

std::uint64_t exact_R(const std::vector<long>& b, long beta) {
  std::uint64_t tail = 0;
  for (std::size_t i = 1; i < b.size(); ++i) tail = checked_add(tail, checked_pow(static_cast<std::uint64_t>(b[i]), beta));
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(checked_pow(static_cast<std::uint64_t>(b[0]), beta), tail, &out))
    throw std::overflow_error("exact objective overflows 64 bits");
  return out;
}

std::uint64_t exact_f(const std::vector<long>& s, long q, long beta) {
  std::uint64_t out = 0;
  for (long v : s) out = checked_add(out, checked_pow(balanced_product(v, q), beta));
  return out;
}

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b)); }

// Scores a candidate list, keeping the arguments tied with the best one.
// Exact integer scores are compared exactly; real scores with relative 1e-12.
class BestTracker {
 public:
  explicit BestTracker(bool maximize) : maximize_(maximize) {}

  void offer(const std::vector<long>& arg, double value, std::optional<std::uint64_t> exact) {
    int cmp = 0;  // >0: better than current best
    if (!have_) {
      cmp = 1;
    } else if (exact && best_exact_) {
      cmp = *exact == *best_exact_ ? 0 : ((*exact > *best_exact_) == maximize_ ? 1 : -1);
    } else {
      cmp = close(value, best_, 1e-12) ? 0 : ((value > best_) == maximize_ ? 1 : -1);
    }
    if (cmp > 0) {
      have_ = true;
      best_ = value;
      best_exact_ = exact;
      out_.arguments.clear();
    }
    if (cmp >= 0) out_.arguments.push_back(arg);
  }

  ExhaustiveOptimum result() {
    out_.value = best_;
    return out_;
  }

 private:
  bool maximize_;
  bool have_ = false;
  double best_ = 0.0;
  std::optional<std::uint64_t> best_exact_;
  ExhaustiveOptimum out_{0.0, {}};
};

std::vector<long> to_long(const std::vector<int>& v) { return {v.begin(), v.end()}; }

double evaluate_with(const UniformHypergraph& g, const std::vector<int>& parts, Evaluator evaluator,
                     const std::optional<SunflowerParams>& params, const SpectralOptions& solver) {
  if (evaluator == Evaluator::sunflower_closed_form) return sunflower_rho(SunflowerBlowup(*params, parts));
  auto res = quotient_spectral_radius(QuotientSystem(g, parts), solver);
  if (!res.converged) {
    Composition c{parts};
    throw SolverFailure("quotient solver did not converge on " + c.to_string() + " after " +
                            std::to_string(res.iterations) + " iterations",
                        c, std::move(res));
  }
  return res.rho;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long c = 1;
  for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

std::string to_string(Evaluator e) { return e == Evaluator::quotient_solver ? "solver" : "closed"; }

std::vector<Composition> ExtremalReport::minimizers() const {
  std::vector<Composition> out;
  for (const auto& m : minima) out.push_back(m.composition);
  return out;
}

std::vector<Composition> ExtremalReport::maximizers() const {
  std::vector<Composition> out;
  for (const auto& m : maxima) out.push_back(m.composition);
  return out;
}

std::string family_name(const UniformHypergraph& g) {
  const std::string t = std::to_string(g.order()), r = std::to_string(g.rank());
  if (static_cast<long>(g.edge_count()) == binomial(g.order(), g.rank())) return "K_" + t + "^" + r;
  if (auto p = recognize_sunflower(g))
    return "SH(" + std::to_string(p->m) + "," + std::to_string(p->q) + "," + std::to_string(p->r) + ")";
  return describe(g);
}

double evaluate_blowup(const UniformHypergraph& g, const std::vector<int>& parts, Evaluator evaluator,
                       const SpectralOptions& solver) {
  std::optional<SunflowerParams> params;
  if (evaluator == Evaluator::sunflower_closed_form) {
    params = recognize_sunflower(g);
    if (!params) throw std::invalid_argument("closed-form evaluator needs a sunflower base");
  }
  return evaluate_with(g, parts, evaluator, params, solver);
}

ExtremalReport brute_force_extremal(const UniformHypergraph& g, int n, Evaluator evaluator,
                                    const ExtremalOptions& options) {
  const int t = g.order();
  if (n < t) throw std::invalid_argument("n must be at least the base order " + std::to_string(t));
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  std::optional<SunflowerParams> params;
  if (evaluator == Evaluator::sunflower_closed_form) {
    params = recognize_sunflower(g);
    if (!params) throw std::invalid_argument("closed-form evaluator needs a sunflower base");
  }

  const auto comps = enumerate_compositions(n, t);
  std::vector<double> values(comps.size(), 0.0);
  std::vector<std::exception_ptr> errors(comps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < comps.size(); i = next++) {
      try {
        values[i] = evaluate_with(g, comps[i].parts, evaluator, params, options.solver);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::min<int>(options.workers, static_cast<int>(comps.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  // Lowest index first so failures are reported deterministically.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExtremalReport report;
  report.family = family_name(g);
  report.n = n;
  report.evaluator = evaluator;
  report.evaluations = comps.size();
  report.tie_tolerance = options.tie_tol;
  const auto [lo, hi] = std::ranges::minmax_element(values);
  const double vmin = *lo, vmax = *hi;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (values[i] <= vmin + options.tie_tol * std::fabs(vmin)) report.minima.push_back({comps[i], values[i]});
    if (values[i] >= vmax - options.tie_tol * std::fabs(vmax)) report.maxima.push_back({comps[i], values[i]});
  }
  return report;
}

double objective_R(const std::vector<long>& b, double beta) {
  double tail = 0.0;
  for (std::size_t i = 1; i < b.size(); ++i) tail += std::pow(static_cast<double>(b[i]), beta);
  return std::pow(static_cast<double>(b[0]), beta) * tail;
}

double objective_f(const std::vector<long>& s, long q, double beta) {
  double out = 0.0;
  for (long v : s) out += std::pow(static_cast<double>(balanced_product(v, q)), beta);
  return out;
}

ExhaustiveOptimum exhaustive_min_R(long theta, long l, double beta) {
  const auto ib = integral(beta);
  BestTracker best(false);
  for_each_composition(static_cast<int>(theta), static_cast<int>(l), [&](const std::vector<int>& c) {
    auto b = to_long(c);
    std::optional<std::uint64_t> exact;
    if (ib) exact = exact_R(b, *ib);
    best.offer(b, objective_R(b, beta), exact);
  });
  return best.result();
}

ExhaustiveOptimum exhaustive_max_f(long theta, long m, long q, double beta) {
  if (theta < m * q) throw std::invalid_argument("exhaustive_max_f needs theta >= m q");
  const auto ib = integral(beta);
  BestTracker best(true);
  // s_i = c_i + q - 1 maps compositions of theta - m(q-1) onto vectors with s_i >= q.
  for_each_composition(static_cast<int>(theta - m * (q - 1)), static_cast<int>(m), [&](const std::vector<int>& c) {
    if (!std::ranges::is_sorted(c)) return;
    std::vector<long> s;
    for (int v : c) s.push_back(v + q - 1);
    std::optional<std::uint64_t> exact;
    if (ib) exact = exact_f(s, q, *ib);
    best.offer(s, objective_f(s, q, beta), exact);
  });
  return best.result();
}

IntegerOptimum minimize_R(long theta, long l, double beta, bool verify) {
  if (l < 3) throw std::invalid_argument("minimize_R needs l >= 3");
  if (theta < l) throw std::invalid_argument("minimize_R needs theta >= l");
  if (!(beta >= 1.0)) throw std::invalid_argument("minimize_R needs beta >= 1");
  auto tail = balanced_parts(static_cast<int>(theta - 1), static_cast<int>(l - 1));
  std::ranges::reverse(tail);
  std::vector<long> b{1};
  b.insert(b.end(), tail.begin(), tail.end());
  IntegerOptimum out{b, objective_R(b, beta)};

  if (verify) {
    auto ex = exhaustive_min_R(theta, l, beta);
    if (std::ranges::find(ex.arguments, b) == ex.arguments.end() || !close(ex.value, out.value, 1e-12))
      throw std::logic_error("minimize_R: characterized minimizer is not an exhaustive minimizer");
    if (beta > 1.0) {
      // Every minimizer is b_1 = 1 with a near-equal tail in some order.
      for (const auto& a : ex.arguments) {
        auto [mn, mx] = std::minmax_element(a.begin() + 1, a.end());
        if (a[0] != 1 || *mx - *mn > 1)
          throw std::logic_error("minimize_R: exhaustive search found a minimizer outside the characterization");
      }
      long a = (theta - 1) / (l - 1), rem = (theta - 1) % (l - 1);
      if (static_cast<long>(ex.arguments.size()) != binomial(l - 1, rem) || a < 1)
        throw std::logic_error("minimize_R: characterized minimizers missing from the exhaustive set");
    }
  }
  return out;
}

IntegerOptimum maximize_f(long theta, long m, long q, double beta, bool verify) {
  if (q < 2) throw std::invalid_argument("maximize_f needs q >= 2");
  if (m < 2) throw std::invalid_argument("maximize_f needs m >= 2");
  if (theta < m * q) throw std::invalid_argument("maximize_f needs theta >= m q");
  if (!(beta > 1.0)) throw std::invalid_argument("maximize_f needs beta > 1");
  std::vector<long> s(static_cast<std::size_t>(m), q);
  s.back() = theta - (m - 1) * q;
  IntegerOptimum out{s, objective_f(s, q, beta)};
  if (verify) {
    auto ex = exhaustive_max_f(theta, m, q, beta);
    if (ex.arguments.size() != 1 || ex.arguments.front() != s || !close(ex.value, out.value, 1e-12))
      throw std::logic_error("maximize_f: exhaustive maximizers differ from the characterization");
  }
  return out;
}

ObjectiveScan scan_eq14(int n, int m, int q, int r) {
  if (q < 2 || m < 2 || r < 3) throw std::invalid_argument("scan_eq14 needs q >= 2, m >= 2, r >= 3");
  const SunflowerParams p(m, q, r);
  if (n < p.order()) throw std::invalid_argument("scan_eq14: empty domain, n must be at least " + std::to_string(p.order()));

  const Rational e = petal_exponent(p);
  ObjectiveScan scan;
  scan.s_min = r - q;
  scan.s_max = n - m * q;
  const bool exact = e.is_integer();
  for (int s = scan.s_min; s <= scan.s_max; ++s) {
    const auto gk = balanced_product(s, r - q);
    const auto gp = balanced_product(n - s - (m - 1) * q, q);
    if (exact) {
      const long k = e.num / e.den;
      std::uint64_t v = 0;
      if (__builtin_mul_overflow(checked_pow(gk, k), checked_add(static_cast<std::uint64_t>(m - 1), checked_pow(gp, k)), &v))
        throw std::overflow_error("scan_eq14 value overflows 64 bits");
      scan.exact_values.push_back(v);
      scan.values.push_back(static_cast<double>(v));
    } else {
      const double ev = e.value();
      scan.values.push_back(std::pow(static_cast<double>(gk), ev) * (m - 1 + std::pow(static_cast<double>(gp), ev)));
    }
  }
  if (exact) {
    const auto best = *std::ranges::max_element(scan.exact_values);
    scan.tie_tolerance = 0.0;
    for (std::size_t i = 0; i < scan.exact_values.size(); ++i)
      if (scan.exact_values[i] == best) scan.maximum_points.push_back(scan.s_min + static_cast<int>(i));
  } else {
    const double best = *std::ranges::max_element(scan.values);
    for (std::size_t i = 0; i < scan.values.size(); ++i)
      if (scan.values[i] >= best * (1.0 - scan.tie_tolerance)) scan.maximum_points.push_back(scan.s_min + static_cast<int>(i));
  }
  return scan;
}

std::vector<int> kernel_mass_candidate(const SunflowerParams& p, int n, int s) {
  const int last = n - (p.m - 1) * p.q - s;
  if (s < p.kernel_size() || last < p.q) throw std::invalid_argument("kernel mass outside r-q <= s <= n-mq");
  auto parts = balanced_parts(s, p.kernel_size());
  parts.insert(parts.end(), static_cast<std::size_t>((p.m - 1) * p.q), 1);
  auto tail = balanced_parts(last, p.q);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return parts;
}

}  // namespace hyperspec
