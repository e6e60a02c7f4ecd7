#include "subgrowth/asymptotics.hpp"

#include <cmath>
#include <complex>

namespace subgrowth::asymptotics {

namespace {

// B_2, B_4, ..., B_16
constexpr double kBernoulli[] = {1.0 / 6,   -1.0 / 30,       1.0 / 42,
                                 -1.0 / 30, 5.0 / 66,        -691.0 / 2730,
                                 7.0 / 6,   -3617.0 / 510};

}  // namespace

double zeta_real(double s, double tol) {
  if (!(s > 1)) throw std::invalid_argument("zeta_real: s must be > 1");
  for (unsigned m = 16; m <= 4096; m *= 2) {
    double sum = 0;
    for (unsigned k = 1; k < m; ++k) sum += std::pow(k, -s);
    sum += 0.5 * std::pow(m, -s);
    sum += std::pow(m, 1 - s) / (s - 1);
    // Euler-Maclaurin corrections; remainder bounded by the first
    // omitted term for real s > 1
    double rising = s;              // s (s+1) ... (s+2j-2)
    double fact = 2;                // (2j)!
    double power = std::pow(m, -s - 1);
    double term = 0;
    bool converged = false;
    for (std::size_t j = 0; j < std::size(kBernoulli); ++j) {
      term = kBernoulli[j] / fact * rising * power;
      if (std::abs(term) <= tol) {
        converged = true;
        break;
      }
      sum += term;
      rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
      fact *= (2 * j + 3) * (2 * j + 4);
      power /= m * m;
    }
    if (converged) return sum;
  }
  throw std::runtime_error("zeta_real: no convergence within remainder budget");
}

double eval_gamma(const groups::GammaExpr& g) {
  double v = g.rational_factor.get_d();
  for (auto [arg, exp] : g.zeta_factors) v *= std::pow(zeta_real(arg), exp);
  if (!(v > 0)) throw std::logic_error("eval_gamma: gamma must be positive");
  return v;
}

SingularData SingularData::from_spec(const groups::GroupSpec& spec) {
  SingularData s;
  s.alpha = spec.alpha.get_d();
  s.m = spec.pole_order;
  s.gamma = eval_gamma(spec.gamma);
  s.K = std::tgamma(s.alpha) * s.gamma / std::tgamma(s.m);  // (m-1)! = Gamma(m)
  return s;
}

WFunctions::WFunctions(const groups::CoeffTable& coeffs, double alpha)
    : a_(coeffs.size() + 1, 0.0), alpha_(alpha) {
  envelope_ = 0;
  for (std::size_t d = 1; d <= coeffs.size(); ++d) {
    a_[d] = coeffs[d].get_d();
    envelope_ = std::max(envelope_, a_[d] / std::pow(d, alpha_ + 1));
  }
}

// Tail bound past D for sum_d C d^p e^{-du}, valid when uD > p:
//   integral_D^inf t^p e^{-ut} dt <= D^p e^{-uD} / (u (1 - p/(uD))).
static double tail_bound(double c, double p, double u, double d) {
  if (u * d <= p) return HUGE_VAL;
  return c * std::pow(d, p) * std::exp(-u * d) / (u * (1 - p / (u * d)));
}

std::size_t WFunctions::cutoff(double beta, double u, double rel_tol) const {
  if (!(u > 0)) throw std::invalid_argument("WFunctions: u must be positive");
  const double p = alpha_ + 1 + beta;
  const double c = 2 * envelope_;  // x2 safety margin on the fitted envelope
  double sum = 0;
  for (std::size_t d = 1; d < a_.size(); ++d) {
    if (a_[d] != 0)
      sum += std::pow(d, beta) * a_[d] * std::exp(-static_cast<double>(d) * u);
    if ((d & 31u) == 0 || d + 1 == a_.size()) {
      if (tail_bound(c, p, u, static_cast<double>(d)) <= rel_tol * sum) return d;
    }
  }
  throw CertificationError(
      "W tail not certified at u=" + std::to_string(u) +
      ": extend the coefficient table beyond N=" + std::to_string(a_.size() - 1));
}

double WFunctions::eval(double beta, double u, double rel_tol) const {
  const std::size_t d_max = cutoff(beta, u, rel_tol);
  double sum = 0;
  for (std::size_t d = 1; d <= d_max; ++d)
    if (a_[d] != 0)
      sum += std::pow(d, beta) * a_[d] * std::exp(-static_cast<double>(d) * u);
  return sum;
}

double WFunctions::w0_inverse(double w, double tol) const {
  if (!(w > 0)) throw std::invalid_argument("w0_inverse: w must be positive");
  const double eval_tol = tol / 8;
  double lo = 1.0, hi = 1.0;  // W_0 is decreasing: W_0(lo) >= w >= W_0(hi)
  while (eval(0, lo, eval_tol) < w) {
    lo /= 2;
    if (lo < 1e-12) throw CertificationError("w0_inverse: bracket not found (u too small)");
  }
  while (eval(0, hi, eval_tol) > w) {
    hi *= 2;
    if (hi > 1e4) throw CertificationError("w0_inverse: bracket not found (u too large)");
  }
  double mid = std::sqrt(lo * hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    double v = eval(0, mid, eval_tol);
    if (std::abs(v - w) <= tol * w) return mid;
    (v > w ? lo : hi) = mid;
  }
  return mid;
}

double predicted_mean(const SingularData& sing, double n, double x) {
  const double a = sing.alpha;
  if (!(a > 1)) throw std::invalid_argument("predicted_mean: needs alpha > 1");
  if (!(n >= 2)) throw std::invalid_argument("predicted_mean: needs n >= 2");
  return 1 / (a - 1) * std::pow(a, -(sing.m - 1) / a) *
         std::pow(x * sing.K, 1 / a) * std::pow(n, (a - 1) / a) *
         std::pow(std::log(n), (sing.m - 1) / a);
}

double predicted_variance(const SingularData& sing, double n, double x) {
  return predicted_mean(sing, n, x) / sing.alpha;
}

std::pair<double, double> refined_center_scale(const WFunctions& w,
                                               const SingularData& sing,
                                               double n, double x) {
  if (!(n >= 2)) throw std::invalid_argument("refined_center_scale: needs n >= 2");
  double t = w.w0_inverse(n / x);
  double a_n = x * w.eval(-1, t);
  double b_n = std::sqrt(predicted_variance(sing, n, x));
  return {a_n, b_n};
}

double tauberian_ratio(const WFunctions& w, const SingularData& sing,
                       double beta, double u, double rel_tol) {
  if (!(u > 0 && u < 1)) throw std::invalid_argument("tauberian_ratio: need 0 < u < 1");
  if (!(beta > -sing.alpha))
    throw std::invalid_argument("tauberian_ratio: need beta > -alpha");
  double lead = std::tgamma(sing.alpha + beta) * sing.gamma / std::tgamma(sing.m) *
                std::pow(u, -(sing.alpha + beta)) *
                std::pow(-std::log(u), sing.m - 1);
  return w.eval(beta, u, rel_tol) / lead;
}

double partial_sum_ratio(const groups::CoeffTable& coeffs,
                         const SingularData& sing, double beta, std::size_t n) {
  if (n < 1 || n > coeffs.size())
    throw std::invalid_argument("partial_sum_ratio: need 1 <= N <= coeffs.N");
  double sum;
  if (beta >= 0 && beta == std::floor(beta)) {
    // exact integer accumulation, rounded once at the end
    mpz_class total = 0, pw;
    for (std::size_t d = 1; d <= n; ++d) {
      if (coeffs[d] == 0) continue;
      mpz_ui_pow_ui(pw.get_mpz_t(), d, static_cast<unsigned>(beta));
      total += coeffs[d] * pw;
    }
    sum = total.get_d();
  } else {
    sum = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (coeffs[d] != 0) sum += std::pow(d, beta) * coeffs[d].get_d();
  }
  double lead = sing.gamma / (std::tgamma(sing.m) * (sing.alpha + beta)) *
                std::pow(n, sing.alpha + beta) *
                std::pow(std::log(static_cast<double>(n)), sing.m - 1);
  return sum / lead;
}

namespace {

// J_n(x,t) = int_{-pi}^{pi} e^{-q_n(x,t,theta)} dtheta/2pi by uniform
// trapezoid on the periodic integrand, with node doubling.
double saddle_integral(const WFunctions& w, int n, double x, double t,
                       double quad_tol) {
  const std::size_t d_max = w.cutoff(-1, t, 1e-13);
  std::vector<double> b(d_max + 1, 0.0);  // a_d e^{-td} / d
  double s0 = 0;
  for (std::size_t d = 1; d <= d_max; ++d) {
    b[d] = w.coeff(d) * std::exp(-t * static_cast<double>(d)) / d;
    s0 += b[d];
  }
  auto integrand = [&](double theta) {
    std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> zp = 1.0, s = 0.0;
    for (std::size_t d = 1; d <= d_max; ++d) {
      zp *= z;
      if (b[d] != 0) s += b[d] * zp;
    }
    // e^{-q} = exp(x (S(theta) - S(0))) e^{-i n theta}
    return std::exp(x * (s - s0) -
                    std::complex<double>(0.0, n * theta));
  };
  double prev = HUGE_VAL;
  for (std::size_t m = 64; m <= (1u << 22); m *= 2) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      acc += integrand(-M_PI + 2 * M_PI * j / m);
    double val = acc.real() / static_cast<double>(m);
    if (std::isfinite(prev) && std::abs(val - prev) <= quad_tol * std::abs(val))
      return val;
    prev = val;
  }
  throw CertificationError("saddle_integral: quadrature did not converge");
}

}  // namespace

SaddleParams saddle_params(const WFunctions& w, int n, double x,
                           double quad_tol) {
  if (n < 1) throw std::invalid_argument("saddle_params: n must be >= 1");
  SaddleParams p;
  p.n = n;
  p.x = x;
  p.x_n = x;
  p.t_n = w.w0_inverse(n / x, 1e-12);
  p.lambda_n = 1.0 / std::sqrt(p.x_n * w.eval(1, p.t_n, 1e-12));
  p.logP = n * p.t_n + x * w.eval(-1, p.t_n, 1e-12);
  p.J = saddle_integral(w, n, x, p.t_n, quad_tol);
  return p;
}

double log_mpq(const mpq_class& q) {
  if (q <= 0) throw std::invalid_argument("log_mpq: argument must be positive");
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) + (en - ed) * std::log(2.0);
}

SaddleReport saddle_factorization_check(const WFunctions& w,
                                        const orbits::OrbitTable& table,
                                        double x, double quad_tol) {
  SaddleReport r;
  r.params = saddle_params(w, table.n, x, quad_tol);
  mpq_class xq(x);  // doubles are exact rationals
  xq.canonicalize();
  r.logH_exact = log_mpq(table.h_eval(xq));
  r.logP = r.params.logP;
  r.logJ = std::log(r.params.J);
  r.rel_error = std::abs(std::expm1(r.logP + r.logJ - r.logH_exact));
  return r;
}

std::vector<double> major_arc_ratios(const WFunctions& w,
                                     const std::vector<int>& grid, double x,
                                     double quad_tol) {
  std::vector<double> out;
  for (int n : grid) {
    SaddleParams p = saddle_params(w, n, x, quad_tol);
    out.push_back(p.J * std::sqrt(2 * M_PI) / p.lambda_n);
  }
  return out;
}

}  // namespace subgrowth::asymptotics
