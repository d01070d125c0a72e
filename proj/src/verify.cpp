#include <algorithm>
#include <cmath>
#include <set>

#include "hyperspec/extremal.hpp"

namespace hyperspec {

namespace {

std::set<Composition> permutations_of(std::vector<int> parts) {
  std::ranges::sort(parts);
  std::set<Composition> out;
  do out.insert({parts});
  while (std::ranges::next_permutation(parts).found);
  return out;
}

template <class Pred>
std::set<Composition> all_matching(int n, int t, Pred pred) {
  std::set<Composition> out;
  for_each_composition(n, t, [&](const std::vector<int>& c) {
    if (pred(c)) out.insert({c});
  });
  return out;
}

void compare_sets(VerificationReport& rep, const std::string& which, const std::vector<Composition>& got,
                  const std::set<Composition>& expected) {
  const std::set<Composition> found(got.begin(), got.end());
  for (const auto& c : found)
    if (!expected.contains(c)) rep.failures.push_back(which + ": unexpected " + c.to_string());
  for (const auto& c : expected)
    if (!found.contains(c)) rep.failures.push_back(which + ": missing " + c.to_string());
}

bool near_equal(std::span<const int> block) {
  auto [mn, mx] = std::ranges::minmax(block);
  return mx - mn <= 1;
}

int block_sum(std::span<const int> block) {
  int s = 0;
  for (int v : block) s += v;
  return s;
}

std::string label(const std::string& name, std::initializer_list<int> args) {
  std::string out = name + "(";
  bool first = true;
  for (int a : args) {
    out += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return out + ")";
}

}  // namespace

VerificationReport verify_theorem5(int t, int r, int n, const ExtremalOptions& options) {
  VerificationReport rep;
  rep.name = label("theorem5", {t, r, n});
  rep.report = brute_force_extremal(complete_hypergraph(t, r), n, Evaluator::quotient_solver, options);

  std::vector<int> lopsided(static_cast<std::size_t>(t), 1);
  lopsided[0] = n - t + 1;
  compare_sets(rep, "minima", rep.report.minimizers(), permutations_of(lopsided));
  compare_sets(rep, "maxima", rep.report.maximizers(), permutations_of(balanced_parts(n, t)));
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_theorem41(int m, int r, int n, const ExtremalOptions& options) {
  if (m < 2 || r < 2 || n < r + m - 1) throw std::invalid_argument("q = 1 sunflower check needs m >= 2, r >= 2, n >= r + m - 1");
  VerificationReport rep;
  rep.name = label("theorem41", {m, r, n});
  const SunflowerParams p(m, 1, r);
  const int t = p.order();
  const std::size_t kernel = static_cast<std::size_t>(r - 1);
  rep.report = brute_force_extremal(sunflower(p), n, Evaluator::quotient_solver, options);

  auto unit_kernel = all_matching(n, t, [&](const std::vector<int>& c) {
    return std::all_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(kernel), [](int v) { return v == 1; });
  });
  compare_sets(rep, "minima", rep.report.minimizers(), unit_kernel);
  if (!rep.report.minima.empty()) {
    auto [lo, hi] = std::ranges::minmax(rep.report.minima, {}, &RankedComposition::rho);
    if (hi.rho - lo.rho > 1e-9 * hi.rho)
      rep.failures.push_back("minima: values spread over [" + std::to_string(lo.rho) + ", " + std::to_string(hi.rho) + "]");
  }

  std::set<Composition> expected_max;
  if (n < m * r) {
    rep.notes.push_back("case n < mr");
    for (auto k : permutations_of(balanced_parts(n - m, r - 1))) {
      k.parts.insert(k.parts.end(), static_cast<std::size_t>(m), 1);
      expected_max.insert(k);
    }
  } else {
    rep.notes.push_back("case n >= mr");
    auto target = balanced_parts(n, r);
    std::ranges::sort(target);
    expected_max = all_matching(n, t, [&](const std::vector<int>& c) {
      std::vector<int> merged(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(kernel));
      merged.push_back(block_sum(std::span(c).subspan(kernel)));
      std::ranges::sort(merged);
      return merged == target;
    });
  }
  compare_sets(rep, "maxima", rep.report.maximizers(), expected_max);
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_theorem9(int m, int q, int r, int n, const ExtremalOptions& options) {
  VerificationReport rep;
  rep.name = label("theorem9", {m, q, r, n});
  const auto scan = scan_eq14(n, m, q, r);
  const SunflowerParams p(m, q, r);
  const int t = p.order();
  const std::size_t kernel = static_cast<std::size_t>(p.kernel_size());
  rep.report = brute_force_extremal(sunflower(p), n, Evaluator::quotient_solver, options);

  auto petal = [&](const std::vector<int>& c, int l) {
    return std::span(c).subspan(p.petal_begin(l) - 1, static_cast<std::size_t>(q));
  };
  auto kernel_ones = [&](const std::vector<int>& c) {
    return std::all_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(kernel), [](int v) { return v == 1; });
  };
  auto all_ones = [](std::span<const int> b) { return std::ranges::all_of(b, [](int v) { return v == 1; }); };

  const int lo = (n - t) / m + 1, hi = (n - t + m - 1) / m + 1;
  auto expected_min = all_matching(n, t, [&](const std::vector<int>& c) {
    if (!kernel_ones(c)) return false;
    for (int l = 1; l <= m; ++l) {
      auto b = petal(c, l);
      const int big = std::ranges::max(b);
      if (std::ranges::count_if(b, [](int v) { return v > 1; }) > 1 || big < lo || big > hi) return false;
    }
    return true;
  });
  compare_sets(rep, "minima", rep.report.minimizers(), expected_min);

  std::string points;
  for (int s : scan.maximum_points) points += (points.empty() ? "" : ",") + std::to_string(s);
  rep.notes.push_back("eq14 maximum points {" + points + "}");
  auto expected_max = all_matching(n, t, [&](const std::vector<int>& c) {
    auto k = std::span(c).first(kernel);
    if (!near_equal(k) || std::ranges::find(scan.maximum_points, block_sum(k)) == scan.maximum_points.end())
      return false;
    int heavy = 0;
    for (int l = 1; l <= m; ++l) {
      auto b = petal(c, l);
      if (!near_equal(b)) return false;
      if (!all_ones(b)) ++heavy;
    }
    return heavy <= 1;
  });
  compare_sets(rep, "maxima", rep.report.maximizers(), expected_max);
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_eq14_transform(int n, int m, int q, int r, const SpectralOptions& solver) {
  VerificationReport rep;
  rep.name = label("eq14", {n, m, q, r});
  const auto scan = scan_eq14(n, m, q, r);
  const SunflowerParams p(m, q, r);
  const auto g = sunflower(p);
  std::vector<double> rho;
  for (int s = scan.s_min; s <= scan.s_max; ++s)
    rho.push_back(evaluate_blowup(g, kernel_mass_candidate(p, n, s), Evaluator::quotient_solver, solver));
  const double best = std::ranges::max(rho);
  std::vector<int> argmax;
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (rho[i] >= best * (1.0 - 1e-9)) argmax.push_back(scan.s_min + static_cast<int>(i));
  if (argmax != scan.maximum_points) {
    std::string a, b;
    for (int s : argmax) a += " " + std::to_string(s);
    for (int s : scan.maximum_points) b += " " + std::to_string(s);
    rep.failures.push_back("argmax of rho {" + a + " } differs from eq14 maximum points {" + b + " }");
  }
  rep.passed = rep.failures.empty();
  return rep;
}

std::pair<double, double> shift_test(const UniformHypergraph& g, const Composition& parts, Vertex i, Vertex j,
                                     const SpectralOptions& solver) {
  if (static_cast<int>(parts.length()) != g.order())
    throw std::invalid_argument("shift_test: parts length differs from the base order");
  if (i < 1 || j < 1 || i > static_cast<Vertex>(g.order()) || j > static_cast<Vertex>(g.order()) || i == j)
    throw std::invalid_argument("shift_test: i and j must be distinct base vertices");
  if (!adjacent(g, i, j)) throw std::invalid_argument("shift_test: precondition failed: i and j are not adjacent");
  const auto li = link_set(g, i, {j});
  const auto lj = link_set(g, j, {i});
  if (!std::ranges::includes(lj, li))
    throw std::invalid_argument("shift_test: precondition failed: L_{G-j}(i) is not contained in L_{G-i}(j)");
  if (parts.parts[i - 1] - parts.parts[j - 1] < 2)
    throw std::invalid_argument("shift_test: precondition failed: n_i - n_j < 2");

  auto moved = parts.parts;
  --moved[i - 1];
  ++moved[j - 1];
  return {evaluate_blowup(g, parts.parts, Evaluator::quotient_solver, solver),
          evaluate_blowup(g, moved, Evaluator::quotient_solver, solver)};
}

}  // namespace hyperspec

#include <sstream>

#include "hyperspec/sampling.hpp"

namespace hyperspec {

namespace {

std::string beta_label(double beta) {
  std::ostringstream s;
  s << beta;
  return s.str();
}

}  // namespace

VerificationReport verify_lemma7(long theta_max, long l, double beta) {
  VerificationReport rep;
  rep.name = "lemma7(l=" + std::to_string(l) + ",beta=" + beta_label(beta) + ")";
  for (long theta = l; theta <= theta_max; ++theta) {
    try {
      minimize_R(theta, l, beta, true);
    } catch (const std::logic_error& e) {
      rep.failures.push_back("theta=" + std::to_string(theta) + ": " + e.what());
    }
  }
  rep.notes.push_back("theta " + std::to_string(l) + ".." + std::to_string(theta_max));
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_lemma8(long theta_max, long m, long q, double beta) {
  VerificationReport rep;
  rep.name = "lemma8(m=" + std::to_string(m) + ",q=" + std::to_string(q) + ",beta=" + beta_label(beta) + ")";
  for (long theta = m * q; theta <= theta_max; ++theta) {
    try {
      if (beta > 1.0) {
        maximize_f(theta, m, q, beta, true);
      } else {
        std::vector<long> s(static_cast<std::size_t>(m), q);
        s.back() = theta - (m - 1) * q;
        auto ex = exhaustive_max_f(theta, m, q, beta);
        if (std::ranges::find(ex.arguments, s) == ex.arguments.end())
          throw std::logic_error("characterized vector is not an exhaustive maximizer");
      }
    } catch (const std::logic_error& e) {
      rep.failures.push_back("theta=" + std::to_string(theta) + ": " + e.what());
    }
  }
  rep.notes.push_back("theta " + std::to_string(m * q) + ".." + std::to_string(theta_max));
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_shift_batch(int count, unsigned long seed, const SpectralOptions& solver) {
  VerificationReport rep;
  rep.name = "lemma4(count=" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
  std::mt19937_64 rng(seed);
  double smallest = 1e300;
  for (int k = 0; k < count; ++k) {
    auto inst = random_shift_instance(rng);
    auto [before, after] = shift_test(inst.base, inst.parts, inst.i, inst.j, solver);
    smallest = std::min(smallest, (after - before) / before);
    if (!(after - before > 1e-9 * before))
      rep.failures.push_back(family_name(inst.base) + " " + inst.parts.to_string() + " i=" + std::to_string(inst.i) +
                             " j=" + std::to_string(inst.j) + ": rho " + std::to_string(before) + " -> " +
                             std::to_string(after));
  }
  rep.notes.push_back("smallest relative gain " + beta_label(smallest));
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_scaling(int k, int count, unsigned long seed, const SpectralOptions& solver) {
  VerificationReport rep;
  rep.name = "scaling(k=" + std::to_string(k) + ",count=" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int c = 0; c < count; ++c) {
    const int t = std::uniform_int_distribution<int>(3, 6)(rng);
    auto g = random_connected_hypergraph(rng, t, 3);
    const double base = require_converged(spectral_radius(g, solver), "scaling base").rho;
    auto blown = blow_up(BlowupSpec(g, std::vector<int>(static_cast<std::size_t>(t), k))).first;
    const double full = require_converged(spectral_radius(blown, solver), "scaling blow-up").rho;
    const double expect = scaling_rho(base, k, 3);
    const double rel = std::fabs(full - expect) / expect;
    worst = std::max(worst, rel);
    if (rel > 1e-8)
      rep.failures.push_back(describe(g) + ": blow-up rho " + std::to_string(full) + " vs " + std::to_string(expect));
  }
  rep.notes.push_back("worst relative error " + beta_label(worst));
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace hyperspec
