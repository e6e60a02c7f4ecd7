#pragma once

#include <string>
#include <vector>

#include "subgrowth/groups.hpp"

namespace subgrowth::orbits {

/// One exact row A(G,n,0..n): counts of homomorphisms G -> S_n by number
/// of orbits. P_n(x) = sum_k A(n,k) x^k = n! H_{G,n}(x).
struct OrbitTable {
  std::string group;
  int n = 0;
  std::vector<mpz_class> A;  // index k, size n+1

  /// |Hom(G,S_n)| = sum_k A(n,k).
  mpz_class hom_count() const;
  /// H_{G,n}(x) = P_n(x)/n!, exact for rational x.
  mpq_class h_eval(const mpq_class& x) const;
};

class RowCache;

/// Rows 0..n_max by the integer recurrence
///   P_n(x) = x * sum_{d=1..n} a_d (n-1)!/(n-d)! P_{n-d}(x),  P_0 = 1.
/// An optional cache reuses previously computed rows keyed by the
/// coefficient-table checksum.
std::vector<OrbitTable> orbit_tables(const groups::CoeffTable& coeffs, int n_max,
                                     RowCache* cache = nullptr);

/// Independent composition-enumeration oracle:
///   A(n,k) = (n!/k!) sum_{n_1+..+n_k=n} prod a_{n_i}/n_i.
/// Exponential cost; guarded at n <= 14.
mpz_class polymer_oracle(const groups::CoeffTable& coeffs, int n, int k);

/// Versioned on-disk row store. Files carry the group name, the
/// coefficient-table checksum, and a content checksum; any mismatch or
/// parse failure discards the file and forces recomputation.
class RowCache {
 public:
  explicit RowCache(std::string dir) : dir_(std::move(dir)) {}

  /// Rows 0..stored-1 if a valid file matches (group, coeff checksum).
  std::vector<OrbitTable> load(const std::string& group, std::uint64_t coeff_checksum) const;
  void store(const std::string& group, std::uint64_t coeff_checksum,
             const std::vector<OrbitTable>& rows) const;

  /// True when the last load found a file but rejected it.
  bool last_load_rejected() const { return last_load_rejected_; }

 private:
  std::string path_for(const std::string& group, std::uint64_t coeff_checksum) const;
  std::string dir_;
  mutable bool last_load_rejected_ = false;
};

}  // namespace subgrowth::orbits
