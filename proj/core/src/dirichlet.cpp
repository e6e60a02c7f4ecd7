#include "subgrowth/dirichlet.hpp"

#include <stdexcept>

namespace subgrowth::dirichlet {

IntSeq::IntSeq(std::size_t n) : v_(n + 1, Int(0)) {
  if (n < 1) throw std::invalid_argument("IntSeq: length must be >= 1");
}

IntSeq IntSeq::unit(std::size_t n) {
  IntSeq e(n);
  e[1] = 1;
  return e;
}

IntSeq IntSeq::ones(std::size_t n) {
  IntSeq u(n);
  for (std::size_t i = 1; i <= n; ++i) u[i] = 1;
  return u;
}

IntSeq factor_coeffs(const ZetaFactor& f, std::size_t n) {
  if (f.scale < 1) throw std::invalid_argument("ZetaFactor: scale must be >= 1");
  IntSeq out(n);
  Int md;
  for (std::size_t m = 1;; ++m) {
    // position m^c, value m^d
    Int pos;
    mpz_ui_pow_ui(pos.get_mpz_t(), m, f.scale);
    if (pos > n) break;
    mpz_ui_pow_ui(md.get_mpz_t(), m, f.shift);
    out[pos.get_ui()] = md;
  }
  return out;
}

IntSeq dirichlet_mul(const IntSeq& u, const IntSeq& v) {
  const std::size_t n = u.length();
  if (v.length() != n)
    throw std::invalid_argument("dirichlet_mul: length mismatch");
  IntSeq out(n);
  // divisor-loop schedule: cost sum_d n/d ~ n ln n
  for (std::size_t d = 1; d <= n; ++d) {
    if (u[d] == 0) continue;
    for (std::size_t m = 1; m * d <= n; ++m) {
      if (v[m] == 0) continue;
      out[d * m] += u[d] * v[m];
    }
  }
  return out;
}

IntSeq dirichlet_inverse(const IntSeq& u) {
  const std::size_t n = u.length();
  if (u[1] != 1)
    throw std::invalid_argument("dirichlet_inverse: leading coefficient must be 1");
  IntSeq inv(n);
  // acc[j] accumulates sum_{d|j, d<j} inv(d) u(j/d); once every d < j has
  // been processed, inv(j) = -acc[j].
  std::vector<Int> acc(n + 1, Int(0));
  inv[1] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    if (d > 1) inv[d] = -acc[d];
    if (inv[d] == 0) continue;
    for (std::size_t k = 2; k * d <= n; ++k) {
      if (u[k] == 0) continue;
      acc[d * k] += u[k] * inv[d];
    }
  }
  return inv;
}

IntSeq factor_product(const std::vector<ZetaFactor>& factors, std::size_t n) {
  IntSeq out = IntSeq::unit(n);
  for (const ZetaFactor& f : factors) out = dirichlet_mul(out, factor_coeffs(f, n));
  return out;
}

}  // namespace subgrowth::dirichlet
