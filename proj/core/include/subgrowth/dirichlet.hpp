#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <vector>

namespace subgrowth::dirichlet {

using Int = mpz_class;

/// Coefficient sequence of a Dirichlet series, truncated at index N.
/// Entries are exact integers, indexed 1..N.
class IntSeq {
 public:
  explicit IntSeq(std::size_t n);

  /// The convolution identity e = (1, 0, 0, ...).
  static IntSeq unit(std::size_t n);
  /// All-ones sequence, i.e. the coefficients of zeta(s).
  static IntSeq ones(std::size_t n);

  std::size_t length() const { return v_.size() - 1; }

  Int& operator[](std::size_t i) { return v_[i]; }
  const Int& operator[](std::size_t i) const { return v_[i]; }

  bool operator==(const IntSeq& other) const { return v_ == other.v_; }

 private:
  std::vector<Int> v_;  // v_[0] unused
};

/// One factor zeta(c*s - d) of a subgroup-growth zeta expression.
struct ZetaFactor {
  unsigned scale = 1;   // c >= 1
  unsigned shift = 0;   // d >= 0

  /// Abscissa of convergence of this single factor.
  double abscissa() const { return (shift + 1.0) / scale; }
};

/// Coefficients of zeta(c*s - d): entry m^d at n = m^c, zero elsewhere.
IntSeq factor_coeffs(const ZetaFactor& f, std::size_t n);

/// Dirichlet convolution, result(n) = sum_{d|n} u(d) v(n/d).
IntSeq dirichlet_mul(const IntSeq& u, const IntSeq& v);

/// Convolution inverse by triangular back-substitution; requires u(1) = 1.
IntSeq dirichlet_inverse(const IntSeq& u);

/// Convolution product of a list of factors, truncated at n.
IntSeq factor_product(const std::vector<ZetaFactor>& factors, std::size_t n);

}  // namespace subgrowth::dirichlet
