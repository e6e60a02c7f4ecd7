#include "doctest.h"

#include <cmath>

#include "subgrowth/catalog.hpp"
#include "subgrowth/measure.hpp"

using namespace subgrowth;
using namespace subgrowth::measure;

namespace {

std::vector<orbits::OrbitTable> rows_for(const std::string& name, int n) {
  auto coeff = groups::coeffs(groups::Catalog::builtin().get(name), n);
  return orbits::orbit_tables(coeff, n);
}

}  // namespace

TEST_CASE("pmf spot values in exact mode") {
  auto z2 = rows_for("Z2", 2);
  auto p = pmf(z2[2], mpq_class(2));
  CHECK(p.pq[1] == mpq_class(3, 5));
  CHECK(p.pq[2] == mpq_class(2, 5));

  auto z = rows_for("Z1", 2);
  auto q = pmf(z[2], mpq_class(1));
  CHECK(q.pq[1] == mpq_class(1, 2));
  CHECK(q.pq[2] == mpq_class(1, 2));
}

TEST_CASE("pmf mass sums to one exactly and p_n > 0") {
  for (const std::string& name : {"Z2", "heis"}) {
    auto rows = rows_for(name, 8);
    for (const mpq_class& x : {mpq_class(1), mpq_class(3, 7), mpq_class(5)}) {
      auto p = pmf(rows[8], x);
      mpq_class total = 0;
      for (int k = 1; k <= 8; ++k) total += p.pq[k];
      CHECK(total == 1);
      CHECK(p.pq[8] > 0);
    }
  }
}

TEST_CASE("pmf rejects nonpositive x and n = 0") {
  auto rows = rows_for("Z2", 2);
  CHECK_THROWS_AS(pmf(rows[2], mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(pmf(rows[2], -1.0), std::invalid_argument);
  CHECK_THROWS_AS(pmf(rows[0], mpq_class(1)), std::invalid_argument);
}

TEST_CASE("float mode agrees with exact mode") {
  auto rows = rows_for("heis", 10);
  auto pe = pmf(rows[10], mpq_class(3, 2));
  auto pf = pmf(rows[10], 1.5);
  for (int k = 1; k <= 10; ++k)
    CHECK(pf.pd[k] == doctest::Approx(pe.pd[k]).epsilon(1e-12));
}

TEST_CASE("exact moments spot values") {
  auto z = rows_for("Z1", 4);
  auto mom = exact_moments(pmf(z[4], mpq_class(1)));
  CHECK(mom.mean_q == mpq_class(25, 12));

  auto z2 = rows_for("Z2", 2);
  auto mom2 = exact_moments(pmf(z2[2], mpq_class(2)));
  CHECK(mom2.mean_q == mpq_class(7, 5));

  auto point = exact_moments(pmf(rows_for("Z2", 1)[1], mpq_class(1)));
  CHECK(point.var_q == 0);
}

TEST_CASE("mean equals x H'(x)/H(x) by independent differentiation") {
  for (const std::string& name : {"Z2", "heis"}) {
    auto rows = rows_for(name, 9);
    for (const mpq_class& x : {mpq_class(1), mpq_class(2, 3)}) {
      const auto& row = rows[9];
      // P(x) = sum A_k x^k, P'(x) = sum k A_k x^{k-1}
      mpq_class p = 0, dp = 0, xk = 1;
      for (int k = 0; k <= row.n; ++k) {
        p += row.A[k] * xk;
        if (k + 1 <= row.n) dp += (k + 1) * row.A[k + 1] * xk;
        xk *= x;
      }
      auto mom = exact_moments(pmf(row, x));
      CHECK(mom.mean_q == x * dp / p);
    }
  }
}

TEST_CASE("variance is positive for n >= 2") {
  auto rows = rows_for("Z3", 6);
  for (int n = 2; n <= 6; ++n)
    CHECK(exact_moments(pmf(rows[n], mpq_class(1))).variance > 0);
}

TEST_CASE("sampling is deterministic and hits a point mass") {
  auto rows = rows_for("Z2", 3);
  auto p = pmf(rows[3], mpq_class(1));
  auto a = sample(p, 100, 12345);
  auto b = sample(p, 100, 12345);
  CHECK(a == b);
  CHECK(a != sample(p, 100, 54321));

  // point mass: n = 1 forces k = 1 always
  auto point = pmf(rows_for("Z2", 1)[1], mpq_class(1));
  for (int k : sample(point, 5, 7)) CHECK(k == 1);
}

TEST_CASE("sampled frequencies concentrate near the exact pmf") {
  auto rows = rows_for("Z2", 2);
  auto p = pmf(rows[2], mpq_class(2));
  auto draws = sample(p, 100000, 2024);
  double freq1 = 0;
  for (int k : draws) freq1 += (k == 1);
  freq1 /= draws.size();
  CHECK(std::abs(freq1 - 0.6) < 0.01);
}

TEST_CASE("chi-square of 1e5 draws below the 0.999 quantile") {
  auto rows = rows_for("heis", 8);
  auto p = pmf(rows[8], mpq_class(1));
  const std::size_t count = 100000;
  auto draws = sample(p, count, 99);
  std::vector<double> observed(p.n + 1, 0);
  for (int k : draws) observed[k] += 1;
  double chi2 = 0;
  int dof = 0;
  for (int k = 1; k <= p.n; ++k) {
    double expect = p.pd[k] * count;
    if (expect < 1e-3) continue;  // skip negligible cells
    chi2 += (observed[k] - expect) * (observed[k] - expect) / expect;
    ++dof;
  }
  --dof;
  // 0.999 quantiles of chi-square for dof 1..8
  const double q999[] = {10.83, 13.82, 16.27, 18.47, 20.52, 22.46, 24.32, 26.12};
  REQUIRE(dof >= 1);
  REQUIRE(dof <= 8);
  CHECK(chi2 < q999[dof - 1]);
}

TEST_CASE("kolmogorov distance limits") {
  auto point = pmf(rows_for("Z2", 1)[1], mpq_class(1));
  CHECK(kolmogorov_distance(point, 1.0, 1.0) >= 0.5);

  auto rows = rows_for("Z1", 4);
  auto p = pmf(rows[4], mpq_class(1));
  auto mom = exact_moments(p);
  double d = kolmogorov_distance(p, mom.mean, std::sqrt(mom.variance));
  CHECK(d > 0);
  CHECK(d < 1);
  // scale -> infinity: bounded by about 1/2
  CHECK(kolmogorov_distance(p, mom.mean, 1e12) <= 0.5 + 1e-9);
  CHECK_THROWS_AS(kolmogorov_distance(p, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("normal cdf sanity") {
  CHECK(normal_cdf(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-10));
}
