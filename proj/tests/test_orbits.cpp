#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "subgrowth/catalog.hpp"
#include "subgrowth/orbits.hpp"

using namespace subgrowth;
using namespace subgrowth::orbits;

namespace {

groups::CoeffTable table_for(const std::string& name, std::size_t n) {
  return groups::coeffs(groups::Catalog::builtin().get(name), n);
}

}  // namespace

TEST_CASE("orbit table spot rows") {
  auto rows = orbit_tables(table_for("Z2", 4), 4);
  CHECK(rows[0].A == std::vector<mpz_class>{1});
  CHECK(rows[2].A == std::vector<mpz_class>{0, 3, 1});

  auto z = orbit_tables(table_for("Z1", 4), 4);
  CHECK(z[4].A == std::vector<mpz_class>{0, 6, 11, 6, 1});
}

TEST_CASE("row invariants") {
  for (const std::string& name : {"Z2", "Z3", "heis"}) {
    auto coeff = table_for(name, 12);
    auto rows = orbit_tables(coeff, 12);
    for (int n = 1; n <= 12; ++n) {
      const auto& row = rows[n];
      CHECK(row.A[0] == 0);
      CHECK(row.A[n] == 1);
      CHECK(row.A[1] == groups::factorial(n - 1) * coeff[n]);
      for (int k = 0; k <= n; ++k) CHECK(row.A[k] >= 0);
    }
  }
}

TEST_CASE("polymer oracle spot values") {
  auto z2 = table_for("Z2", 4);
  CHECK(polymer_oracle(z2, 2, 1) == 3);
  CHECK(polymer_oracle(z2, 2, 2) == 1);
  CHECK(polymer_oracle(table_for("Z1", 4), 4, 2) == 11);
}

TEST_CASE("polymer oracle equals the recurrence for n <= 8") {
  for (const std::string& name : {"Z2", "Z3", "heis"}) {
    auto coeff = table_for(name, 8);
    auto rows = orbit_tables(coeff, 8);
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(polymer_oracle(coeff, n, k) == rows[n].A[k]);
  }
}

TEST_CASE("row sums match the census totals") {
  auto cat = groups::Catalog::builtin();
  for (const std::string& name : {"Z2", "heis"}) {
    auto rows = orbit_tables(table_for(name, 4), 4);
    for (int n = 1; n <= 4; ++n) {
      auto census = groups::brute_force_census(cat.get(name), n);
      CHECK(rows[n].hom_count() == census.total);
      for (int k = 1; k <= n; ++k) {
        mpz_class expect = 0;
        if (auto it = census.orbit_histogram.find(k); it != census.orbit_histogram.end())
          expect = it->second;
        CHECK(rows[n].A[k] == expect);
      }
    }
  }
}

TEST_CASE("hom_count and h_eval spot values") {
  auto rows = orbit_tables(table_for("Z2", 2), 2);
  CHECK(rows[2].hom_count() == 4);
  CHECK(rows[2].h_eval(1) == 2);
  CHECK(rows[2].h_eval(0) == 0);

  auto z = orbit_tables(table_for("Z1", 4), 4);
  CHECK(z[4].h_eval(1) == 1);  // Hom(Z,S_4) = S_4
}

TEST_CASE("insufficient coefficient table is rejected") {
  auto coeff = table_for("Z2", 3);
  CHECK_THROWS_AS(orbit_tables(coeff, 5), std::invalid_argument);
}

TEST_CASE("row cache roundtrip, extension, and corruption") {
  auto dir = std::filesystem::temp_directory_path() / "subgrowth-cache-test";
  std::filesystem::remove_all(dir);
  RowCache cache(dir.string());
  auto coeff = table_for("Z2", 20);

  auto rows = orbit_tables(coeff, 10, &cache);
  auto reloaded = cache.load("Z2", coeff.checksum());
  REQUIRE(reloaded.size() == 11);
  for (int n = 0; n <= 10; ++n) CHECK(reloaded[n].A == rows[n].A);

  // extending reuses the cached prefix and stores the longer table
  auto longer = orbit_tables(coeff, 15, &cache);
  CHECK(longer.size() == 16);
  CHECK(cache.load("Z2", coeff.checksum()).size() == 16);
  auto fresh = orbit_tables(coeff, 15);
  for (int n = 0; n <= 15; ++n) CHECK(longer[n].A == fresh[n].A);

  // corrupt the file: checksum mismatch must be detected and recomputed
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream f(entry.path(), std::ios::app);
    f << "garbage";
  }
  auto recovered = orbit_tables(coeff, 10, &cache);
  CHECK(cache.last_load_rejected());
  for (int n = 0; n <= 10; ++n) CHECK(recovered[n].A == rows[n].A);
  std::filesystem::remove_all(dir);
}
