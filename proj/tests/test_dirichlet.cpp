#include "doctest.h"

#include <numeric>
#include <random>

#include "subgrowth/dirichlet.hpp"

using namespace subgrowth::dirichlet;

namespace {

IntSeq random_seq(std::size_t n, std::mt19937_64& rng, bool unit_lead) {
  std::uniform_int_distribution<int> dist(-9, 9);
  IntSeq u(n);
  for (std::size_t i = 1; i <= n; ++i) u[i] = dist(rng);
  if (unit_lead) u[1] = 1;
  return u;
}

}  // namespace

TEST_CASE("factor_coeffs spot values") {
  IntSeq plain = factor_coeffs({1, 0}, 5);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(plain[i] == 1);

  IntSeq squares = factor_coeffs({2, 3}, 9);
  CHECK(squares[1] == 1);
  CHECK(squares[4] == 8);
  CHECK(squares[9] == 27);
  CHECK(squares[2] == 0);
  CHECK(squares[8] == 0);

  IntSeq shifted = factor_coeffs({1, 1}, 4);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(shifted[i] == i);
}

TEST_CASE("factor_coeffs is multiplicative on coprime arguments") {
  for (ZetaFactor f : {ZetaFactor{1, 2}, ZetaFactor{2, 3}, ZetaFactor{3, 1}}) {
    IntSeq v = factor_coeffs(f, 200);
    for (std::size_t m = 2; m <= 14; ++m)
      for (std::size_t n = 2; n <= 14; ++n) {
        if (std::gcd(m, n) != 1 || m * n > 200) continue;
        CHECK(v[m * n] == v[m] * v[n]);
      }
  }
}

TEST_CASE("convolution spot values") {
  IntSeq ones = IntSeq::ones(6);
  IntSeq d = dirichlet_mul(ones, ones);
  const int divisor_count[] = {1, 2, 2, 3, 2, 4};
  for (std::size_t i = 1; i <= 6; ++i) CHECK(d[i] == divisor_count[i - 1]);

  IntSeq sigma = dirichlet_mul(ones, factor_coeffs({1, 1}, 6));
  const int sigma_expect[] = {1, 3, 4, 7, 6, 12};
  for (std::size_t i = 1; i <= 6; ++i) CHECK(sigma[i] == sigma_expect[i - 1]);
}

TEST_CASE("unit is the identity") {
  std::mt19937_64 rng(7);
  IntSeq v = random_seq(50, rng, false);
  CHECK(dirichlet_mul(IntSeq::unit(50), v) == v);
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(dirichlet_mul(IntSeq::ones(4), IntSeq::ones(5)),
                  std::invalid_argument);
}

TEST_CASE("inverse of all-ones is the Moebius function") {
  IntSeq mu = dirichlet_inverse(IntSeq::ones(10));
  const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (std::size_t i = 1; i <= 10; ++i) CHECK(mu[i] == expect[i - 1]);
}

TEST_CASE("inverse of the unit is the unit") {
  CHECK(dirichlet_inverse(IntSeq::unit(8)) == IntSeq::unit(8));
}

TEST_CASE("inverse of zeta(3s-3) carries mu(m) m^3 at cubes") {
  IntSeq inv = dirichlet_inverse(factor_coeffs({3, 3}, 64));
  CHECK(inv[8] == -8);
  CHECK(inv[27] == -27);
  CHECK(inv[64] == 0);  // mu(4) = 0
  CHECK(inv[2] == 0);
}

TEST_CASE("inverse requires unit leading coefficient") {
  IntSeq u = IntSeq::ones(4);
  u[1] = 2;
  CHECK_THROWS_AS(dirichlet_inverse(u), std::invalid_argument);
}

TEST_CASE("mul/inverse roundtrip across lengths") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {1u, 7u, 64u, 1000u, 10000u}) {
    IntSeq u = random_seq(n, rng, true);
    CHECK(dirichlet_mul(u, dirichlet_inverse(u)) == IntSeq::unit(n));
  }
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 16 + (rng() % 241);  // up to 256
    IntSeq a = random_seq(n, rng, false);
    IntSeq b = random_seq(n, rng, false);
    IntSeq c = random_seq(n, rng, false);
    CHECK(dirichlet_mul(a, b) == dirichlet_mul(b, a));
    CHECK(dirichlet_mul(dirichlet_mul(a, b), c) ==
          dirichlet_mul(a, dirichlet_mul(b, c)));
  }
}
