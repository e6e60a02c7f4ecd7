#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subgrowth/orbits.hpp"

namespace subgrowth::measure {

/// Distribution of the orbit count K under the biased measure:
///   p_k = A(n,k) x^k / (n! H_{G,n}(x)),  k = 1..n.
/// Exact mode keeps rational probabilities; float mode works in log space.
struct Pmf {
  std::string group;
  int n = 0;
  std::string x_repr;           // as given on input
  bool exact = false;
  mpq_class x_rational;         // valid in exact mode
  std::vector<mpq_class> pq;    // index k (0 unused), exact mode only
  std::vector<double> pd;       // index k (0 unused), always populated
};

Pmf pmf(const orbits::OrbitTable& table, const mpq_class& x);
Pmf pmf(const orbits::OrbitTable& table, double x);

struct MomentReport {
  bool exact = false;
  mpq_class mean_q, var_q, m3_q, m4_q;  // exact mode only
  double mean = 0, variance = 0, third_central = 0, fourth_central = 0;
  double skewness = 0, excess_kurtosis = 0;
};

/// Mean and central moments 2..4; standardized moments are converted to
/// doubles only at the last step.
MomentReport exact_moments(const Pmf& pmf);

inline constexpr const char* kRngId = "splitmix64";

/// Inverse-CDF draws; identical (seed, count) gives identical output.
std::vector<int> sample(const Pmf& pmf, std::size_t count, std::uint64_t seed);

/// sup_t |P((K-center)/scale <= t) - Phi(t)|, attained at the jump points.
double kolmogorov_distance(const Pmf& pmf, double center, double scale);

/// Standard normal CDF via erfc.
double normal_cdf(double z);

}  // namespace subgrowth::measure
