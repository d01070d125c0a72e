#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format:
//   r n m
//   v_1 ... v_r      (m lines, 1-based ids)
// Anything after '#' on a line is ignored; blank lines are skipped.
UniformHypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const UniformHypergraph& g);

UniformHypergraph load_hypergraph(const std::filesystem::path& path);
void save_hypergraph(const std::filesystem::path& path, const UniformHypergraph& g);

}  // namespace hyperspec
