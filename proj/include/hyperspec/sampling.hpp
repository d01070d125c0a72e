#pragma once

#include <random>

#include "hyperspec/compositions.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Uniformly random edge subsets of K_t^r, redrawn until connected.
UniformHypergraph random_connected_hypergraph(std::mt19937_64& rng, int t, int r);

/// A base, part sizes and an ordered pair (i, j) meeting the shift-test
/// preconditions. Bases are complete hypergraphs or sunflowers.
struct ShiftInstance {
  UniformHypergraph base;
  Composition parts;
  Vertex i;
  Vertex j;
};

ShiftInstance random_shift_instance(std::mt19937_64& rng);

}  // namespace hyperspec
