#include <doctest.h>

#include <cmath>
#include <vector>

#include "augloop/growth.hpp"

using namespace augloop;

TEST_CASE("seed-only growth is linear in the summed wrong rates") {
  auto sizes = seed_only_sizes(100.0, {0.3, 0.3});
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[0] == doctest::Approx(100.0));
  CHECK(sizes[1] == doctest::Approx(130.0));
  CHECK(sizes[2] == doctest::Approx(160.0));

  // Closed form: s[T] = n * (1 + sum p), independent of rate order.
  auto mixed = seed_only_sizes(50.0, {0.5, 0.1, 0.4});
  CHECK(mixed.back() == doctest::Approx(50.0 * (1.0 + 1.0)));
  auto permuted = seed_only_sizes(50.0, {0.4, 0.5, 0.1});
  CHECK(permuted.back() == doctest::Approx(mixed.back()));
}

TEST_CASE("compounding growth multiplies per-step factors") {
  auto sizes = compounding_sizes(100.0, {0.3, 0.3});
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[1] == doctest::Approx(130.0));
  CHECK(sizes[2] == doctest::Approx(169.0));

  // Constant rate p over T steps gives n * (1 + p)^T.
  auto ten = compounding_sizes(100.0, std::vector<double>(10, 0.3));
  CHECK(ten.back() == doctest::Approx(100.0 * std::pow(1.3, 10.0)));
}

TEST_CASE("compounding dominates seed-only for the same rates") {
  std::vector<double> rates = {0.4, 0.25, 0.1, 0.3};
  auto comp = compounding_sizes(64.0, rates);
  auto seed = seed_only_sizes(64.0, rates);
  REQUIRE(comp.size() == seed.size());
  for (size_t t = 0; t < comp.size(); ++t) {
    CHECK(comp[t] >= seed[t] - 1e-9);
  }
  CHECK(comp.back() > seed.back());
}

TEST_CASE("bounds bracket the exact trajectories") {
  std::vector<double> rates = {0.5, 0.2, 0.35};
  double n = 128.0;
  CHECK(compounding_lower_bound(n, rates) ==
        doctest::Approx(n * std::pow(1.2, 3.0)));
  CHECK(compounding_sizes(n, rates).back() >=
        compounding_lower_bound(n, rates) - 1e-9);
  CHECK(seed_only_upper_bound(n, rates) == doctest::Approx(n * 2.5));
  CHECK(seed_only_sizes(n, rates).back() <=
        seed_only_upper_bound(n, rates) + 1e-9);

  // No steps: both bounds collapse to the seed size.
  CHECK(compounding_lower_bound(n, {}) == doctest::Approx(n));
  CHECK(seed_only_upper_bound(n, {}) == doctest::Approx(n));
}
