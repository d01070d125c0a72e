#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hyperspec/closed_form.hpp"
#include "hyperspec/compositions.hpp"
#include "hyperspec/spectral.hpp"
#include "oracle.hpp"

using namespace hyperspec;

TEST_CASE("sunflower closed form at known points") {
  CHECK(sunflower_rho(SunflowerBlowup({4, 2, 3}, std::vector<int>(9, 1))) ==
        doctest::Approx(std::cbrt(4.0)).epsilon(1e-14));
  CHECK(sunflower_rho(SunflowerBlowup({1, 2, 3}, {2, 2, 2})) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sunflower_rho(SunflowerBlowup({2, 2, 3}, {1, 1, 3, 1, 4})) == doctest::Approx(std::cbrt(25.0)).epsilon(1e-14));
  CHECK(sunflower_rho(SunflowerBlowup({2, 2, 3}, {1, 1, 1, 3, 4})) ==
        doctest::Approx(std::cbrt(145.0)).epsilon(1e-14));
  CHECK(sunflower_rho(SunflowerBlowup({2, 1, 3}, {1, 1, 1, 1})) ==
        doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(sunflower_rho(SunflowerBlowup({3, 2, 5}, std::vector<int>(9, 1))) ==
        doctest::Approx(std::pow(3.0, 0.6)).epsilon(1e-14));
  CHECK_THROWS(SunflowerBlowup({2, 2, 3}, {1, 1, 1}));
  CHECK_THROWS(SunflowerBlowup({2, 2, 3}, {1, 1, 1, 0, 1}));
  SunflowerBlowup sb({2, 2, 4}, {2, 3, 4, 5, 6, 7});
  CHECK(sb.kernel_product() == 6);
  CHECK(sb.petal_product(1) == 20);
  CHECK(sb.petal_product(2) == 42);
}

TEST_CASE("closed form matches the oracle and the quotient solver on a sweep") {
  for (int r = 3; r <= 4; ++r)
    for (int q = 1; q < r; ++q)
      for (int m = 1; m <= 3; ++m) {
        SunflowerParams p(m, q, r);
        const int t = p.order();
        for (int n = t; n <= std::min(t + 3, 12); ++n)
          for (const auto& c : enumerate_compositions(n, t)) {
            const double cf = sunflower_rho(SunflowerBlowup(p, c.parts));
            CHECK(std::abs(cf - static_cast<double>(oracle::sunflower_rho(m, q, r, c.parts))) <= 1e-13 * cf);
            const double qs = quotient_spectral_radius(QuotientSystem(sunflower(p), c.parts)).rho;
            CHECK(std::abs(cf - qs) <= 1e-8 * cf);
          }
      }
}

TEST_CASE("closed form is exactly invariant under petal and within-block permutations") {
  SunflowerParams p(3, 2, 4);
  std::vector<int> parts{2, 3, 1, 4, 5, 2, 3, 1};
  const double base = sunflower_rho(SunflowerBlowup(p, parts));
  auto perm = parts;
  std::swap(perm[0], perm[1]);
  CHECK(sunflower_rho(SunflowerBlowup(p, perm)) == base);
  perm = parts;
  std::swap(perm[2], perm[3]);
  CHECK(sunflower_rho(SunflowerBlowup(p, perm)) == base);
  // Rotate the petal blocks.
  perm = {2, 3, 5, 2, 3, 1, 1, 4};
  CHECK(sunflower_rho(SunflowerBlowup(p, perm)) == base);
  perm = {2, 3, 3, 1, 1, 4, 5, 2};
  CHECK(sunflower_rho(SunflowerBlowup(p, perm)) == base);
}

TEST_CASE("closed form strictly increases in every part") {
  for (int r = 3; r <= 4; ++r)
    for (int q = 1; q < r; ++q)
      for (int m = 1; m <= 3; ++m) {
        SunflowerParams p(m, q, r);
        for (const auto& c : enumerate_compositions(p.order() + 2, p.order())) {
          const double v = sunflower_rho(SunflowerBlowup(p, c.parts));
          for (std::size_t k = 0; k < c.parts.size(); ++k) {
            auto up = c.parts;
            ++up[k];
            CHECK(sunflower_rho(SunflowerBlowup(p, up)) > v);
          }
        }
      }
}

TEST_CASE("balanced products") {
  CHECK(balanced_product(5, 2) == 6);
  CHECK(balanced_product(7, 3) == 12);
  CHECK(balanced_product(6, 2) == 9);
  CHECK(balanced_product(9, 1) == 9);
  BalancedSplit b(7, 3);
  CHECK(b.a == 2);
  CHECK(b.l == 1);
  CHECK_THROWS(balanced_product(2, 3));
  for (int p = 1; p <= 5; ++p)
    for (int s = p; s <= 20; ++s) CHECK(balanced_product(s, p) == oracle::max_product(s, p));
}

TEST_CASE("petal exponent and scaling") {
  auto e = petal_exponent({2, 2, 3});
  CHECK(e.num == 2);
  CHECK(e.den == 1);
  CHECK(e.is_integer());
  CHECK(petal_exponent({2, 1, 4}).value() == doctest::Approx(1.0));
  CHECK_FALSE(petal_exponent({2, 2, 5}).is_integer());
  CHECK(scaling_rho(1.0, 2, 3) == 4.0);
  CHECK(scaling_rho(2.5, 1, 4) == 2.5);
  CHECK(scaling_rho(3.0, 2, 3) == 12.0);
  CHECK(quotient_spectral_radius(QuotientSystem(complete_hypergraph(4, 3), {2, 2, 2, 2})).rho ==
        doctest::Approx(12.0).epsilon(1e-10));
}
