#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hyperspec {

namespace {

const kernels::KernelTable& pick(const kernels::KernelTable* table) {
  return table != nullptr ? *table : kernels::active();
}

std::vector<std::uint32_t> zero_based(std::span<const Vertex> flat) {
  std::vector<std::uint32_t> out(flat.size());
  std::ranges::transform(flat, out.begin(), [](Vertex v) { return v - 1; });
  return out;
}

void check_vector(const UniformHypergraph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("vector has " + std::to_string(x.size()) + " entries, hypergraph has " +
                                std::to_string(g.order()) + " vertices");
  if (std::ranges::any_of(x, [](double v) { return !(v >= 0.0); }))
    throw std::invalid_argument("vector entries must be nonnegative");
}

// One connected eigenproblem: `dim` unknowns, 0-based flat edges and optional
// class weights (empty means all ones).
struct Problem {
  int rank;
  std::size_t dim;
  std::vector<std::uint32_t> edges;
  std::vector<double> weights;
};

SpectralResult power_iterate(const Problem& p, const SpectralOptions& opt) {
  const auto& k = pick(opt.kernels);
  const int r = p.rank;
  const std::span<const double> w = p.weights;
  const double sigma = opt.shift;

  const double total_weight =
      w.empty() ? static_cast<double>(p.dim) : std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> x(p.dim, std::pow(1.0 / total_weight, 1.0 / r));
  std::vector<double> xp(p.dim), z(p.dim), ax(p.dim), y(p.dim);

  SpectralResult res;
  for (long it = 1; it <= opt.max_iter; ++it) {
    k.int_power(x, r - 1, xp);
    if (w.empty())
      std::ranges::copy(x, z.begin());
    else
      k.multiply(w, x, z);
    std::ranges::fill(ax, 0.0);
    k.edge_products(p.edges, r, z, ax);

    const auto b = k.ratio_bounds(ax, xp);
    res.lambda_min = b.lo;
    res.lambda_max = b.hi;
    res.iterations = it;
    if (opt.trace) res.bracket_trace.emplace_back(b.lo, b.hi);
    res.rho = 0.5 * (b.lo + b.hi);
    if (b.hi - b.lo <= opt.tol * std::max(1.0, b.hi)) {
      res.converged = true;
      break;
    }
    if (it == opt.max_iter) break;

    std::ranges::copy(ax, y.begin());
    k.add_scaled(xp, sigma, y);
    k.root(y, r - 1, x);
    k.scale(x, 1.0 / std::pow(k.power_sum(x, r, w), 1.0 / r));
  }
  res.residual = k.max_abs_diff(ax, res.rho, xp);
  res.vector.values = std::move(x);
  return res;
}

// Solves every edge-carrying component of `g` (with per-vertex weights) and
// keeps the largest.
SpectralResult solve_by_components(const UniformHypergraph& g, std::span<const int> weights,
                                   const SpectralOptions& opt) {
  if (g.edge_count() == 0) throw std::invalid_argument("spectral radius of a hypergraph without edges");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto components = edge_components(g);

  SpectralResult best;
  bool have = false;
  bool all_converged = true;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  for (const auto& comp : components) {
    std::vector<long> local(static_cast<std::size_t>(g.order()) + 1, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<long>(i);

    Problem p{g.rank(), comp.size(), {}, {}};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto edge = g.edge(e);
      if (local[edge[0]] < 0) continue;
      for (Vertex v : edge) p.edges.push_back(static_cast<std::uint32_t>(local[v]));
    }
    if (!weights.empty())
      for (Vertex v : comp) p.weights.push_back(static_cast<double>(weights[v - 1]));

    auto res = power_iterate(p, opt);
    all_converged = all_converged && res.converged;
    bracket_lo = std::max(bracket_lo, res.lambda_min);
    bracket_hi = std::max(bracket_hi, res.lambda_max);
    if (!have || res.rho > best.rho) {
      std::vector<double> full(static_cast<std::size_t>(g.order()), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i] - 1] = res.vector.values[i];
      res.vector.values = std::move(full);
      best = std::move(res);
      have = true;
    }
  }
  if (components.size() > 1) {
    best.lambda_min = bracket_lo;
    best.lambda_max = bracket_hi;
    best.converged = all_converged;
  }
  return best;
}

}  // namespace

QuotientSystem::QuotientSystem(UniformHypergraph base_graph, std::vector<int> part_weights)
    : base(std::move(base_graph)), weights(std::move(part_weights)) {
  if (static_cast<int>(weights.size()) != base.order())
    throw std::invalid_argument("quotient system needs one weight per base vertex");
  if (std::ranges::any_of(weights, [](int v) { return v < 1; }))
    throw std::invalid_argument("quotient weights must be positive");
}

std::vector<double> apply_adjacency(const UniformHypergraph& g, std::span<const double> x,
                                    const kernels::KernelTable* table) {
  check_vector(g, x);
  std::vector<double> y(x.size(), 0.0);
  pick(table).edge_products(zero_based(g.flat_edges()), g.rank(), x, y);
  return y;
}

double rayleigh_value(const UniformHypergraph& g, std::span<const double> x) {
  check_vector(g, x);
  double norm = 0.0;
  for (double v : x) norm += std::pow(v, g.rank());
  if (std::fabs(norm - 1.0) > 1e-9)
    throw std::invalid_argument("rayleigh_value needs sum x_v^r = 1, got " + std::to_string(norm));
  double total = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    double prod = 1.0;
    for (Vertex v : g.edge(e)) prod *= x[v - 1];
    total += prod;
  }
  return g.rank() * total;
}

double residual(const UniformHypergraph& g, std::span<const double> x, double rho,
                const kernels::KernelTable* table) {
  const auto& k = pick(table);
  auto ax = apply_adjacency(g, x, &k);
  std::vector<double> xp(x.size());
  k.int_power(x, g.rank() - 1, xp);
  return k.max_abs_diff(ax, rho, xp);
}

SpectralResult spectral_radius(const UniformHypergraph& g, const SpectralOptions& options) {
  auto res = solve_by_components(g, {}, options);
  res.residual = residual(g, res.vector.values, res.rho, options.kernels);
  return res;
}

SpectralResult quotient_spectral_radius(const QuotientSystem& system, const SpectralOptions& options) {
  return solve_by_components(system.base, system.weights, options);
}

std::vector<double> expand_quotient_vector(std::span<const double> base_values, std::span<const int> weights) {
  if (base_values.size() != weights.size()) throw std::invalid_argument("weights/values length mismatch");
  std::vector<double> out;
  for (std::size_t i = 0; i < weights.size(); ++i)
    out.insert(out.end(), static_cast<std::size_t>(weights[i]), base_values[i]);
  return out;
}

SpectralResult require_converged(SpectralResult result, const std::string& context) {
  if (!result.converged) {
    std::string msg = context + ": power iteration did not converge after " + std::to_string(result.iterations) +
                      " iterations, bracket [" + std::to_string(result.lambda_min) + ", " +
                      std::to_string(result.lambda_max) + "]";
    throw NotConvergedError(msg, std::move(result));
  }
  return result;
}

}  // namespace hyperspec
