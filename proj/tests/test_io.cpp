#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "hyperspec/hypergraph_io.hpp"
#include "hyperspec/sampling.hpp"

using namespace hyperspec;

namespace {

UniformHypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

}  // namespace

TEST_CASE("reads the text format with comments") {
  auto g = parse("# a sunflower\n3 5 2\n1 2 3  # first\n\n1 4 5\n");
  CHECK(g == sunflower(2, 2, 3));
}

TEST_CASE("rejects malformed files with a line number") {
  CHECK_THROWS_AS(parse(""), FormatError);
  CHECK_THROWS_AS(parse("3 4 2\n1 2 3\n"), FormatError);
  CHECK_THROWS_AS(parse("3 4 1\n1 2\n"), FormatError);
  CHECK_THROWS_AS(parse("3 4 1\n1 2 9\n"), FormatError);
  CHECK_THROWS_AS(parse("3 4 1\n1 2 x\n"), FormatError);
  CHECK_THROWS_AS(parse("3 4 1\n1 2 3\n1 2 4\n"), FormatError);
  try {
    parse("3 4 2\n1 2 3\n1 2 2\n");
    FAIL("expected an error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("round trip through streams and files") {
  std::mt19937_64 rng(5);
  std::vector<UniformHypergraph> graphs{complete_hypergraph(5, 3), sunflower(3, 2, 5), turan_hypergraph(3, 3, 7)};
  for (int k = 0; k < 50; ++k) {
    const int t = 3 + static_cast<int>(rng() % 5);
    graphs.push_back(random_connected_hypergraph(rng, t, 2 + static_cast<int>(rng() % (t - 1))));
  }
  for (const auto& g : graphs) {
    std::stringstream s;
    write_hypergraph(s, g);
    CHECK(read_hypergraph(s) == g);
  }
  const auto path = std::filesystem::temp_directory_path() / "hyperspec_io_roundtrip.hg";
  save_hypergraph(path, graphs[1]);
  CHECK(load_hypergraph(path) == graphs[1]);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_hypergraph("/nonexistent/none.hg"), std::runtime_error);
}
