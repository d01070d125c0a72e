#include "hyperspec/sampling.hpp"

#include <algorithm>

namespace hyperspec {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

UniformHypergraph random_connected_hypergraph(std::mt19937_64& rng, int t, int r) {
  const auto all = complete_hypergraph(t, r).edges();
  std::bernoulli_distribution keep(0.5);
  while (true) {
    std::vector<Edge> picked;
    for (const auto& e : all)
      if (keep(rng)) picked.push_back(e);
    UniformHypergraph g(r, t, std::move(picked));
    if (is_connected(g)) return g;
  }
}

ShiftInstance random_shift_instance(std::mt19937_64& rng) {
  while (true) {
    std::optional<UniformHypergraph> base;
    if (uniform(rng, 0, 1) == 0) {
      const int t = uniform(rng, 3, 5);
      base = complete_hypergraph(t, uniform(rng, 2, std::min(t, 4)));
    } else {
      const int r = uniform(rng, 3, 4);
      base = sunflower(uniform(rng, 1, 3), uniform(rng, 1, r - 1), r);
    }
    const int t = base->order();
    const auto i = static_cast<Vertex>(uniform(rng, 1, t));
    const auto j = static_cast<Vertex>(uniform(rng, 1, t));
    if (i == j || !adjacent(*base, i, j)) continue;
    if (!std::ranges::includes(link_set(*base, j, {i}), link_set(*base, i, {j}))) continue;

    Composition parts{std::vector<int>(static_cast<std::size_t>(t))};
    for (int& p : parts.parts) p = uniform(rng, 1, 4);
    parts.parts[j - 1] = uniform(rng, 1, 3);
    parts.parts[i - 1] = parts.parts[j - 1] + uniform(rng, 2, 4);
    return {std::move(*base), std::move(parts), i, j};
  }
}

}  // namespace hyperspec
