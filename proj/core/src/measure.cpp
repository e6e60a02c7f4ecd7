#include "subgrowth/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subgrowth::measure {

Pmf pmf(const orbits::OrbitTable& table, const mpq_class& x) {
  if (table.n < 1) throw std::invalid_argument("pmf: n must be >= 1");
  if (x <= 0) throw std::invalid_argument("pmf: x must be positive");
  Pmf out;
  out.group = table.group;
  out.n = table.n;
  out.exact = true;
  out.x_rational = x;
  out.x_repr = x.get_str();

  std::vector<mpq_class> w(table.n + 1, mpq_class(0));
  mpq_class total = 0, xk = 1;
  for (int k = 1; k <= table.n; ++k) {
    xk *= x;
    w[k] = xk * table.A[k];
    total += w[k];
  }
  out.pq.assign(table.n + 1, mpq_class(0));
  out.pd.assign(table.n + 1, 0.0);
  for (int k = 1; k <= table.n; ++k) {
    out.pq[k] = w[k] / total;
    out.pd[k] = out.pq[k].get_d();
  }
  return out;
}

Pmf pmf(const orbits::OrbitTable& table, double x) {
  if (table.n < 1) throw std::invalid_argument("pmf: n must be >= 1");
  if (!(x > 0)) throw std::invalid_argument("pmf: x must be positive");
  Pmf out;
  out.group = table.group;
  out.n = table.n;
  out.exact = false;
  out.x_repr = std::to_string(x);

  // log weights, shifted by the max to avoid overflow of A(n,k) x^k
  const double lx = std::log(x);
  std::vector<double> lw(table.n + 1, -HUGE_VAL);
  double lmax = -HUGE_VAL;
  for (int k = 1; k <= table.n; ++k) {
    if (table.A[k] == 0) continue;
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, table.A[k].get_mpz_t());
    lw[k] = std::log(mant) + exp2 * std::log(2.0) + k * lx;
    lmax = std::max(lmax, lw[k]);
  }
  double total = 0;
  out.pd.assign(table.n + 1, 0.0);
  for (int k = 1; k <= table.n; ++k)
    if (lw[k] > -HUGE_VAL) total += (out.pd[k] = std::exp(lw[k] - lmax));
  for (int k = 1; k <= table.n; ++k) out.pd[k] /= total;
  return out;
}

MomentReport exact_moments(const Pmf& p) {
  MomentReport r;
  r.exact = p.exact;
  if (p.exact) {
    mpq_class mean = 0;
    for (int k = 1; k <= p.n; ++k) mean += k * p.pq[k];
    mpq_class m2 = 0, m3 = 0, m4 = 0;
    for (int k = 1; k <= p.n; ++k) {
      mpq_class d = k - mean;
      mpq_class d2 = d * d;
      m2 += p.pq[k] * d2;
      m3 += p.pq[k] * d2 * d;
      m4 += p.pq[k] * d2 * d2;
    }
    r.mean_q = mean;
    r.var_q = m2;
    r.m3_q = m3;
    r.m4_q = m4;
    r.mean = mean.get_d();
    r.variance = m2.get_d();
    r.third_central = m3.get_d();
    r.fourth_central = m4.get_d();
  } else {
    double mean = 0;
    for (int k = 1; k <= p.n; ++k) mean += k * p.pd[k];
    double m2 = 0, m3 = 0, m4 = 0;
    for (int k = 1; k <= p.n; ++k) {
      double d = k - mean, d2 = d * d;
      m2 += p.pd[k] * d2;
      m3 += p.pd[k] * d2 * d;
      m4 += p.pd[k] * d2 * d2;
    }
    r.mean = mean;
    r.variance = m2;
    r.third_central = m3;
    r.fourth_central = m4;
  }
  if (r.variance > 0) {
    r.skewness = r.third_central / std::pow(r.variance, 1.5);
    r.excess_kurtosis = r.fourth_central / (r.variance * r.variance) - 3.0;
  }
  return r;
}

namespace {

// splitmix64, the output function of Steele et al.'s SplittableRandom
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

std::vector<int> sample(const Pmf& p, std::size_t count, std::uint64_t seed) {
  std::vector<double> cdf(p.n + 1, 0.0);
  for (int k = 1; k <= p.n; ++k) cdf[k] = cdf[k - 1] + p.pd[k];
  cdf[p.n] = 1.0;

  SplitMix64 rng{seed};
  std::vector<int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double u = (rng.next() >> 11) * 0x1.0p-53;  // uniform in [0,1)
    int k = static_cast<int>(std::upper_bound(cdf.begin() + 1, cdf.end(), u) -
                             cdf.begin());
    out.push_back(std::min(k, p.n));
  }
  return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double kolmogorov_distance(const Pmf& p, double center, double scale) {
  if (!(scale > 0)) throw std::invalid_argument("kolmogorov_distance: scale must be positive");
  double dist = 0, cdf = 0;
  for (int k = 1; k <= p.n; ++k) {
    double t = (k - center) / scale;
    double phi = normal_cdf(t);
    dist = std::max(dist, std::abs(cdf - phi));  // left limit at the jump
    cdf += p.pd[k];
    dist = std::max(dist, std::abs(cdf - phi));
  }
  return std::min(dist, 1.0);
}

}  // namespace subgrowth::measure
