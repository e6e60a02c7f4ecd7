#include "doctest.h"

#include <numeric>

#include "subgrowth/catalog.hpp"
#include "subgrowth/groups.hpp"

using namespace subgrowth;
using namespace subgrowth::groups;

TEST_CASE("builtin catalog loads and validates") {
  auto cat = Catalog::builtin();
  CHECK(cat.version() == 1);
  CHECK(cat.contains("Z2"));
  CHECK(cat.contains("heis"));
  CHECK_THROWS_AS(cat.get("nosuchgroup"), std::invalid_argument);

  const auto& heis = cat.get("heis");
  CHECK(heis.alpha == 2);
  CHECK(heis.pole_order == 2);
  CHECK(heis.hirsch_ab == 2);
}

TEST_CASE("catalog rejects linear growth with alpha < 2") {
  GroupSpec bad;
  bad.name = "bad";
  bad.alpha = 1;
  bad.linear_growth = true;
  bad.presentation = Presentation::InfiniteCyclic;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("coeffs spot values") {
  auto cat = Catalog::builtin();

  auto z1 = coeffs(cat.get("Z1"), 5);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(z1[i] == 1);

  auto z2 = coeffs(cat.get("Z2"), 6);
  const int sigma[] = {1, 3, 4, 7, 6, 12};
  for (std::size_t i = 1; i <= 6; ++i) CHECK(z2[i] == sigma[i - 1]);

  auto heis = coeffs(cat.get("heis"), 4);
  const int expect[] = {1, 3, 4, 19};
  for (std::size_t i = 1; i <= 4; ++i) CHECK(heis[i] == expect[i - 1]);
}

TEST_CASE("hermite_eisenstein spot values") {
  CHECK(hermite_eisenstein(2, 4)[4] == 7);
  CHECK(hermite_eisenstein(3, 2)[2] == 7);  // (2,1,1),(1,2,1),(1,1,2) -> 4+2+1
  auto flat = hermite_eisenstein(1, 10);
  for (std::size_t i = 1; i <= 10; ++i) CHECK(flat[i] == 1);
}

TEST_CASE("coeffs agrees with hermite_eisenstein") {
  auto cat = Catalog::builtin();
  for (int ell = 1; ell <= 4; ++ell) {
    auto a = coeffs(cat.get("Z" + std::to_string(ell)), 300);
    auto b = hermite_eisenstein(ell, 300);
    for (std::size_t i = 1; i <= 300; ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("coeffs is multiplicative on coprime arguments") {
  auto cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    auto a = coeffs(cat.get(name), 400);
    for (std::size_t m = 2; m <= 19; ++m)
      for (std::size_t n = 2; n <= 19; ++n) {
        if (std::gcd(m, n) != 1 || m * n > 400) continue;
        CHECK(a[m * n] == a[m] * a[n]);
      }
  }
}

TEST_CASE("linear growth bound a_n >= n") {
  auto cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    const auto& spec = cat.get(name);
    if (!spec.linear_growth) continue;
    auto a = coeffs(spec, 500);
    for (std::size_t n = 1; n <= 500; ++n) CHECK(a[n] >= n);
  }
}

TEST_CASE("census: Z^2 at n=2") {
  auto cat = Catalog::builtin();
  auto census = brute_force_census(cat.get("Z2"), 2);
  CHECK(census.total == 4);
  CHECK(census.transitive == 3);
  CHECK(census.orbit_histogram.at(1) == 3);
  CHECK(census.orbit_histogram.at(2) == 1);
}

TEST_CASE("census: Z at n=4 gives the cycle-count histogram") {
  auto cat = Catalog::builtin();
  auto census = brute_force_census(cat.get("Z1"), 4);
  CHECK(census.total == 24);
  CHECK(census.orbit_histogram.at(1) == 6);
  CHECK(census.orbit_histogram.at(2) == 11);
  CHECK(census.orbit_histogram.at(3) == 6);
  CHECK(census.orbit_histogram.at(4) == 1);
}

TEST_CASE("census: n=1 is trivial and orbit_histogram(n) = 1") {
  auto cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    auto census = brute_force_census(cat.get(name), 1);
    CHECK(census.total == 1);
    CHECK(census.transitive == 1);
  }
  auto census = brute_force_census(cat.get("heis"), 3);
  CHECK(census.orbit_histogram.at(3) == 1);  // only the trivial action
  mpz_class sum = 0;
  for (const auto& [k, c] : census.orbit_histogram) sum += c;
  CHECK(sum == census.total);
}

TEST_CASE("census_to_a_n matches the coefficient tables") {
  auto cat = Catalog::builtin();
  for (const std::string& name : {"Z2", "Z3", "heis"}) {
    const auto& spec = cat.get(name);
    auto a = coeffs(spec, 4);
    for (int n = 1; n <= 4; ++n) {
      auto census = brute_force_census(spec, n);
      CHECK(census_to_a_n(census) == a[n]);
    }
  }
}

TEST_CASE("census guard rejects oversized n") {
  auto cat = Catalog::builtin();
  CHECK_THROWS_AS(brute_force_census(cat.get("Z2"), 12), std::invalid_argument);
}
