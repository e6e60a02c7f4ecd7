#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subgrowth/dirichlet.hpp"

namespace subgrowth::groups {

/// rational_factor * prod zeta(arg)^exp, the leading Laurent coefficient
/// of the zeta expression at its rightmost pole.
struct GammaExpr {
  mpq_class rational_factor = 1;
  std::vector<std::pair<int, int>> zeta_factors;  // (argument >= 2, exponent)
};

enum class Presentation { FreeAbelian, Heisenberg, InfiniteCyclic };

/// Declarative record for one group: zeta expression as numerator and
/// denominator factor lists, singular data, and presentation metadata.
struct GroupSpec {
  std::string name;
  std::vector<dirichlet::ZetaFactor> zeta_numer;
  std::vector<dirichlet::ZetaFactor> zeta_denom;
  mpq_class alpha;          // abscissa of convergence
  int pole_order = 1;       // order of the pole at alpha
  GammaExpr gamma;
  Presentation presentation = Presentation::FreeAbelian;
  int rank = 0;             // ell for FreeAbelian, unused otherwise
  bool linear_growth = false;
  int hirsch_ab = 0;

  void validate() const;  // throws std::invalid_argument on bad records
};

/// Subgroup counts a_1(G)..a_N(G), exact.
struct CoeffTable {
  std::string group;
  dirichlet::IntSeq values;

  std::size_t size() const { return values.length(); }
  const mpz_class& operator[](std::size_t n) const { return values[n]; }

  /// FNV-1a over the decimal rendering, used as cache key.
  std::uint64_t checksum() const;
};

/// Exhaustive count of Hom(G, S_n) split by orbit count.
struct HomCensus {
  int n = 0;
  mpz_class total;
  mpz_class transitive;
  std::map<int, mpz_class> orbit_histogram;
};

/// Coefficients from the zeta expression: numerator product convolved with
/// the inverse of the denominator product, truncated at N.
CoeffTable coeffs(const GroupSpec& spec, std::size_t n);

/// a_n(Z^ell) by direct factorization enumeration, independent of the
/// dirichlet module: sum over d1*...*dell = n of d1^(ell-1)...dell^0.
CoeffTable hermite_eisenstein(int ell, std::size_t n);

/// Enumerates generator images in S_n satisfying the group relations.
/// Supported presentations: FreeAbelian (commuting tuples), Heisenberg
/// (pairs whose commutator is central among them), InfiniteCyclic.
HomCensus brute_force_census(const GroupSpec& spec, int n);

/// a_n = |T_n(G)| / (n-1)!; non-divisibility signals an enumeration bug.
mpz_class census_to_a_n(const HomCensus& census);

mpz_class factorial(unsigned n);

}  // namespace subgrowth::groups
