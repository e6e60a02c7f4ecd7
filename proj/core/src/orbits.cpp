#include "subgrowth/orbits.hpp"

#include <stdexcept>

namespace subgrowth::orbits {

mpz_class OrbitTable::hom_count() const {
  mpz_class s = 0;
  for (const auto& a : A) s += a;
  return s;
}

mpq_class OrbitTable::h_eval(const mpq_class& x) const {
  mpq_class p = 0;
  for (int k = n; k >= 0; --k) p = p * x + A[k];  // Horner
  return p / groups::factorial(static_cast<unsigned>(n));
}

std::vector<OrbitTable> orbit_tables(const groups::CoeffTable& coeffs, int n_max,
                                     RowCache* cache) {
  if (n_max < 0) throw std::invalid_argument("orbit_tables: n_max must be >= 0");
  if (static_cast<std::size_t>(n_max) > coeffs.size())
    throw std::invalid_argument("orbit_tables: coefficient table too short");

  std::vector<OrbitTable> rows;
  std::uint64_t key = 0;
  if (cache) {
    key = coeffs.checksum();
    rows = cache->load(coeffs.group, key);
  }
  if (rows.size() > static_cast<std::size_t>(n_max) + 1)
    rows.resize(n_max + 1);
  if (rows.empty()) rows.push_back(OrbitTable{coeffs.group, 0, {mpz_class(1)}});

  const int start = static_cast<int>(rows.size());
  for (int n = start; n <= n_max; ++n) {
    OrbitTable row{coeffs.group, n, std::vector<mpz_class>(n + 1, mpz_class(0))};
    // c_d = a_d * (n-1)!/(n-d)!, built incrementally
    mpz_class falling = 1;
    for (int d = 1; d <= n; ++d) {
      if (d > 1) falling *= (n - d + 1);
      if (coeffs[d] == 0) continue;
      mpz_class c = coeffs[d] * falling;
      const OrbitTable& prev = rows[n - d];
      for (int k = 0; k <= n - d; ++k) {
        if (prev.A[k] == 0) continue;
        row.A[k + 1] += c * prev.A[k];  // the outer x shifts degree by one
      }
    }
    rows.push_back(std::move(row));
  }

  if (cache && start <= n_max) cache->store(coeffs.group, key, rows);
  return rows;
}

namespace {

mpq_class frac(const mpz_class& num, int den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void compositions(const groups::CoeffTable& coeffs, int rest, int parts,
                  const mpq_class& acc, mpq_class& total) {
  if (parts == 1) {
    total += acc * frac(coeffs[rest], rest);
    return;
  }
  for (int first = 1; first <= rest - (parts - 1); ++first) {
    if (coeffs[first] == 0) continue;
    compositions(coeffs, rest - first, parts - 1,
                 acc * frac(coeffs[first], first), total);
  }
}

}  // namespace

mpz_class polymer_oracle(const groups::CoeffTable& coeffs, int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("polymer_oracle: need 1 <= k <= n");
  if (n > 14) throw std::invalid_argument("polymer_oracle: n too large (guard at 14)");
  if (static_cast<std::size_t>(n) > coeffs.size())
    throw std::invalid_argument("polymer_oracle: coefficient table too short");

  mpq_class total = 0;
  compositions(coeffs, n, k, mpq_class(1), total);
  mpq_class scale(groups::factorial(n), groups::factorial(k));
  scale.canonicalize();
  total *= scale;
  total.canonicalize();
  if (total.get_den() != 1)
    throw std::logic_error("polymer_oracle: non-integer result");
  return total.get_num();
}

}  // namespace subgrowth::orbits
