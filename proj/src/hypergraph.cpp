#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperspec {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_vertex(const UniformHypergraph& g, Vertex v) {
  if (v < 1 || v > static_cast<Vertex>(g.order()))
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
}

}  // namespace

UniformHypergraph::UniformHypergraph(int rank, int order, std::vector<Edge> edges)
    : rank_(rank), order_(order) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  if (order < rank) throw std::invalid_argument("order must be at least the rank");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != rank)
      throw std::invalid_argument("edge of size " + std::to_string(e.size()) + " in a " +
                                  std::to_string(rank) + "-uniform hypergraph");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge with a repeated vertex");
    if (e.front() < 1 || e.back() > static_cast<Vertex>(order))
      throw std::invalid_argument("edge vertex outside 1.." + std::to_string(order));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  flat_.reserve(edges.size() * static_cast<std::size_t>(rank));
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

std::vector<Edge> UniformHypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool UniformHypergraph::contains_edge(std::span<const Vertex> e) const {
  Edge key(e.begin(), e.end());
  std::sort(key.begin(), key.end());
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto m = edge(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < edge_count() && std::ranges::equal(edge(lo), key);
}

std::size_t UniformHypergraph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count(flat_.begin(), flat_.end(), v));
}

UniformHypergraph UniformHypergraph::without_edge(std::size_t index) const {
  if (index >= edge_count()) throw std::out_of_range("edge index");
  auto all = edges();
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(index));
  return UniformHypergraph(rank_, order_, std::move(all));
}

std::vector<Vertex> VertexClassMap::members(int base_vertex) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < class_of_.size(); ++v)
    if (class_of_[v] == base_vertex) out.push_back(static_cast<Vertex>(v + 1));
  return out;
}

BlowupSpec::BlowupSpec(UniformHypergraph base_graph, std::vector<int> part_sizes)
    : base(std::move(base_graph)), parts(std::move(part_sizes)) {
  if (static_cast<int>(parts.size()) != base.order())
    throw std::invalid_argument("blow-up needs one part size per base vertex");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("blow-up part sizes must be positive");
}

int BlowupSpec::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

SunflowerParams::SunflowerParams(int petals, int petal_size, int rank) : m(petals), q(petal_size), r(rank) {
  if (m < 1) throw std::invalid_argument("sunflower needs at least one petal");
  if (q <= 0 || q >= r) throw std::invalid_argument("sunflower petal size must satisfy 0 < q < r");
}

VertexSet SunflowerParams::kernel() const {
  VertexSet x(static_cast<std::size_t>(r - q));
  std::iota(x.begin(), x.end(), Vertex{1});
  return x;
}

VertexSet SunflowerParams::petal(int l) const {
  if (l < 1 || l > m) throw std::out_of_range("petal index");
  VertexSet y(static_cast<std::size_t>(q));
  std::iota(y.begin(), y.end(), petal_begin(l));
  return y;
}

UniformHypergraph complete_hypergraph(int t, int r) {
  if (r < 2) throw std::invalid_argument("complete hypergraph needs r >= 2");
  if (r > t) throw std::invalid_argument("complete hypergraph needs r <= t");
  std::vector<Edge> edges;
  std::vector<bool> pick(static_cast<std::size_t>(t), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    Edge e;
    for (int v = 0; v < t; ++v)
      if (pick[static_cast<std::size_t>(v)]) e.push_back(static_cast<Vertex>(v + 1));
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return UniformHypergraph(r, t, std::move(edges));
}

UniformHypergraph sunflower(const SunflowerParams& p) {
  std::vector<Edge> edges;
  const auto x = p.kernel();
  for (int l = 1; l <= p.m; ++l) {
    Edge e = x;
    auto y = p.petal(l);
    e.insert(e.end(), y.begin(), y.end());
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(p.r, p.order(), std::move(edges));
}

UniformHypergraph sunflower(int m, int q, int r) { return sunflower(SunflowerParams(m, q, r)); }

std::vector<int> balanced_parts(int n, int t) {
  if (t < 1 || n < t) throw std::invalid_argument("balanced split needs n >= t >= 1");
  std::vector<int> parts(static_cast<std::size_t>(t), n / t);
  for (int i = 0; i < n % t; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

UniformHypergraph turan_hypergraph(int t, int r, int n) {
  if (n < t) throw std::invalid_argument("Turan hypergraph needs n >= t");
  return blow_up(BlowupSpec(complete_hypergraph(t, r), balanced_parts(n, t))).first;
}

std::pair<UniformHypergraph, VertexClassMap> blow_up(const BlowupSpec& spec) {
  const auto& base = spec.base;
  const int r = base.rank();
  std::vector<Vertex> first(spec.parts.size() + 1, 1);
  std::vector<int> class_of;
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    first[j + 1] = first[j] + static_cast<Vertex>(spec.parts[j]);
    class_of.insert(class_of.end(), static_cast<std::size_t>(spec.parts[j]), static_cast<int>(j + 1));
  }

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < base.edge_count(); ++k) {
    auto be = base.edge(k);
    // Odometer over the transversals V_{j_1} x ... x V_{j_r}.
    std::vector<int> offset(static_cast<std::size_t>(r), 0);
    while (true) {
      Edge e(static_cast<std::size_t>(r));
      for (int s = 0; s < r; ++s) e[s] = first[be[s] - 1] + static_cast<Vertex>(offset[s]);
      edges.push_back(std::move(e));
      int s = r - 1;
      while (s >= 0 && ++offset[s] == spec.parts[be[s] - 1]) offset[s--] = 0;
      if (s < 0) break;
    }
  }
  return {UniformHypergraph(r, spec.total(), std::move(edges)), VertexClassMap(std::move(class_of))};
}

std::set<Edge> link_set(const UniformHypergraph& g, Vertex i, const VertexSet& s) {
  check_vertex(g, i);
  for (Vertex v : s) {
    check_vertex(g, v);
    if (v == i) throw std::invalid_argument("link set: S must not contain i");
  }
  std::set<Edge> out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto e = g.edge(k);
    if (std::ranges::find(e, i) == e.end()) continue;
    bool hits_s = std::ranges::any_of(s, [&](Vertex v) { return std::ranges::find(e, v) != e.end(); });
    if (hits_s) continue;
    Edge residue;
    std::ranges::copy_if(e, std::back_inserter(residue), [i](Vertex v) { return v != i; });
    out.insert(std::move(residue));
  }
  return out;
}

std::vector<VertexSet> edge_components(const UniformHypergraph& g) {
  DisjointSets sets(static_cast<std::size_t>(g.order()) + 1);
  std::vector<bool> touched(static_cast<std::size_t>(g.order()) + 1, false);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto e = g.edge(k);
    for (Vertex v : e) {
      touched[v] = true;
      sets.unite(e[0], v);
    }
  }
  std::vector<VertexSet> components;
  std::vector<long> slot(static_cast<std::size_t>(g.order()) + 1, -1);
  for (Vertex v = 1; v <= static_cast<Vertex>(g.order()); ++v) {
    if (!touched[v]) continue;
    auto root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot[root])].push_back(v);
  }
  return components;
}

bool is_connected(const UniformHypergraph& g) {
  auto comps = edge_components(g);
  return comps.size() == 1 && static_cast<int>(comps.front().size()) == g.order();
}

bool adjacent(const UniformHypergraph& g, Vertex i, Vertex j) {
  check_vertex(g, i);
  check_vertex(g, j);
  if (i == j) return false;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto e = g.edge(k);
    if (std::ranges::find(e, i) != e.end() && std::ranges::find(e, j) != e.end()) return true;
  }
  return false;
}

std::optional<SunflowerParams> recognize_sunflower(const UniformHypergraph& g) {
  const int m = static_cast<int>(g.edge_count());
  const int r = g.rank();
  if (m == 0) return std::nullopt;
  int q = 1;
  if (m > 1) {
    // Kernel = common part of all edges.
    auto e0 = g.edge(0);
    VertexSet common(e0.begin(), e0.end());
    for (int k = 1; k < m; ++k) {
      VertexSet next;
      auto e = g.edge(static_cast<std::size_t>(k));
      std::ranges::set_intersection(common, e, std::back_inserter(next));
      common = std::move(next);
    }
    q = r - static_cast<int>(common.size());
    if (q <= 0 || q >= r) return std::nullopt;
  }
  SunflowerParams p(m, q, r);
  if (p.order() != g.order() || sunflower(p) != g) return std::nullopt;
  return p;
}

std::string describe(const UniformHypergraph& g) {
  return std::to_string(g.rank()) + "-uniform, " + std::to_string(g.order()) + " vertices, " +
         std::to_string(g.edge_count()) + " edges";
}

}  // namespace hyperspec
