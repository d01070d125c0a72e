#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

/// 1-based vertex id.
using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;

/// An r-uniform hypergraph on vertices {1,...,n}.
///
/// Edges are stored flat, each sorted ascending, and the edge list is kept in
/// lexicographic order so that equal hypergraphs compare and serialize
/// identically. Construction validates and canonicalizes the input; the object
/// is immutable afterwards.
class UniformHypergraph {
 public:
  UniformHypergraph(int rank, int order, std::vector<Edge> edges);

  int rank() const { return rank_; }
  int order() const { return order_; }
  std::size_t edge_count() const { return flat_.size() / static_cast<std::size_t>(rank_); }

  std::span<const Vertex> edge(std::size_t index) const {
    return {flat_.data() + index * static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_)};
  }
  /// All edges back to back, `rank()` ids per edge.
  std::span<const Vertex> flat_edges() const { return flat_; }
  std::vector<Edge> edges() const;

  bool contains_edge(std::span<const Vertex> e) const;
  std::size_t degree(Vertex v) const;

  /// Same vertex set, one edge fewer.
  UniformHypergraph without_edge(std::size_t index) const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  int rank_;
  int order_;
  std::vector<Vertex> flat_;
};

/// Records which base class V_j every blow-up vertex belongs to.
class VertexClassMap {
 public:
  explicit VertexClassMap(std::vector<int> class_of) : class_of_(std::move(class_of)) {}

  /// Base vertex (1-based) that blow-up vertex `v` was cloned from.
  int class_of(Vertex v) const { return class_of_.at(v - 1); }
  std::size_t size() const { return class_of_.size(); }
  std::vector<Vertex> members(int base_vertex) const;

 private:
  std::vector<int> class_of_;
};

struct BlowupSpec {
  BlowupSpec(UniformHypergraph base, std::vector<int> parts);

  UniformHypergraph base;
  std::vector<int> parts;
  int total() const;
};

/// Sunflower SH(m,q,r): kernel X = {1..r-q}, petal Y_l = the l-th block of q
/// consecutive ids after the kernel.
struct SunflowerParams {
  SunflowerParams(int petals, int petal_size, int rank);

  int m;
  int q;
  int r;

  int order() const { return r + (m - 1) * q; }
  int kernel_size() const { return r - q; }
  VertexSet kernel() const;
  /// Petal l in 1..m.
  VertexSet petal(int l) const;
  /// First vertex id of petal l.
  Vertex petal_begin(int l) const { return static_cast<Vertex>(r - q + (l - 1) * q + 1); }
};

UniformHypergraph complete_hypergraph(int t, int r);
UniformHypergraph sunflower(int m, int q, int r);
UniformHypergraph sunflower(const SunflowerParams& params);
UniformHypergraph turan_hypergraph(int t, int r, int n);

/// Near-equal split of n into t parts, larger parts first.
std::vector<int> balanced_parts(int n, int t);

std::pair<UniformHypergraph, VertexClassMap> blow_up(const BlowupSpec& spec);

/// L_{G-S}(i): residues e \ {i} over edges containing i and avoiding S.
std::set<Edge> link_set(const UniformHypergraph& g, Vertex i, const VertexSet& s = {});

bool is_connected(const UniformHypergraph& g);

/// Vertex sets of the connected components that carry at least one edge.
std::vector<VertexSet> edge_components(const UniformHypergraph& g);

/// True when some edge contains both vertices.
bool adjacent(const UniformHypergraph& g, Vertex i, Vertex j);

/// Recovers (m,q,r) when g is literally sunflower(m,q,r) under the standard
/// labeling. A single edge on {1..r} is reported as m = 1, q = 1.
std::optional<SunflowerParams> recognize_sunflower(const UniformHypergraph& g);

std::string describe(const UniformHypergraph& g);

}  // namespace hyperspec
