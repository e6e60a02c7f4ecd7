#pragma once

#include <stdexcept>
#include <vector>

#include "subgrowth/groups.hpp"
#include "subgrowth/orbits.hpp"

namespace subgrowth::asymptotics {

/// A numeric tail or bracket certificate could not be established with the
/// data at hand (usually: coefficient table too short for this u).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Riemann zeta for real s > 1 by Euler-Maclaurin; absolute error <= tol,
/// bounded by the first omitted correction term.
double zeta_real(double s, double tol = 1e-14);

/// Evaluate gamma = rational * prod zeta(arg)^exp.
double eval_gamma(const groups::GammaExpr& g);

/// Singular data (alpha, m, gamma) of the zeta expression plus the derived
/// constant K = Gamma(alpha) gamma / (m-1)!.
struct SingularData {
  double alpha = 0;
  int m = 1;
  double gamma = 0;
  double K = 0;

  static SingularData from_spec(const groups::GroupSpec& spec);
};

/// The weighted exponential sums W_beta(u) = sum_d d^beta a_d e^{-du},
/// evaluated from an exact coefficient table with a certified relative
/// tail bound. The tail envelope a_d <= C d^(alpha+1) is fitted over the
/// computed prefix with a x2 safety margin.
class WFunctions {
 public:
  WFunctions(const groups::CoeffTable& coeffs, double alpha);

  double eval(double beta, double u, double rel_tol = 1e-9) const;

  /// Smallest index D at which the tail past D is certified below
  /// rel_tol times the partial sum. Throws CertificationError if the
  /// table ends first.
  std::size_t cutoff(double beta, double u, double rel_tol) const;

  /// u with |W_0(u) - w| <= tol * w, by bracketing plus bisection.
  double w0_inverse(double w, double tol = 1e-10) const;

  std::size_t size() const { return a_.size() - 1; }
  double coeff(std::size_t d) const { return a_[d]; }
  double alpha() const { return alpha_; }

 private:
  std::vector<double> a_;  // index 1..N
  double alpha_;
  double envelope_;        // max a_d / d^(alpha+1)
};

/// Leading-term mean and variance of K_{G,n} under the biased measure.
double predicted_mean(const SingularData& sing, double n, double x);
double predicted_variance(const SingularData& sing, double n, double x);

/// Refined centering a_n = x W_{-1}(W_0^{-1}(n/x)) and the closed-form
/// scale b_n (b_n^2 equals predicted_variance).
std::pair<double, double> refined_center_scale(const WFunctions& w,
                                               const SingularData& sing,
                                               double n, double x);

/// W_beta(u) over its Tauberian leading term; tends to 1 as u -> 0+.
double tauberian_ratio(const WFunctions& w, const SingularData& sing,
                       double beta, double u, double rel_tol = 1e-6);

/// Exact partial sum sum_{d<=N} d^beta a_d over its leading term.
double partial_sum_ratio(const groups::CoeffTable& coeffs,
                         const SingularData& sing, double beta, std::size_t n);

struct SaddleParams {
  int n = 0;
  double x = 1;
  double t_n = 0;       // solves W_0(t_n) = n/x
  double x_n = 1;       // equals x at s = 0
  double lambda_n = 0;  // (x_n W_1(t_n))^{-1/2}
  double logP = 0;      // n t_n + x W_{-1}(t_n)
  double J = 0;         // oscillatory integral, periodic trapezoid
};

SaddleParams saddle_params(const WFunctions& w, int n, double x,
                           double quad_tol = 1e-10);

struct SaddleReport {
  SaddleParams params;
  double logH_exact = 0;
  double logP = 0;
  double logJ = 0;
  double rel_error = 0;  // |P J / H - 1|
};

/// Checks the exact split H = P_n(x,t_n) J_n(x,t_n) against the exact
/// rational H_{G,n}(x); the comparison is done in log space.
SaddleReport saddle_factorization_check(const WFunctions& w,
                                        const orbits::OrbitTable& table,
                                        double x, double quad_tol);

/// r_n = J_n sqrt(2 pi) / lambda_n per grid point; approaches 1.
std::vector<double> major_arc_ratios(const WFunctions& w,
                                     const std::vector<int>& grid, double x,
                                     double quad_tol = 1e-10);

/// log of a positive big rational with controlled rounding.
double log_mpq(const mpq_class& q);

}  // namespace subgrowth::asymptotics
