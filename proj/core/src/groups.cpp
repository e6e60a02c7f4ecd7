#include "subgrowth/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subgrowth::groups {

namespace {

using Perm = std::vector<int>;

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

bool commute(const Perm& p, const Perm& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[q[i]] != q[p[i]]) return false;
  return true;
}

// [p,q] = p^-1 q^-1 p q
Perm commutator(const Perm& p, const Perm& q) {
  return compose(inverse(p), compose(inverse(q), compose(p, q)));
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int orbit_count(const std::vector<const Perm*>& gens, int n) {
  Dsu dsu(n);
  for (const Perm* g : gens)
    for (int i = 0; i < n; ++i) dsu.unite(i, (*g)[i]);
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (dsu.find(i) == i) ++c;
  return c;
}

void record(HomCensus& census, int k) {
  census.total += 1;
  census.orbit_histogram[k] += 1;
  if (k == 1) census.transitive += 1;
}

// Enumerates commuting ell-tuples, pruning each level to the permutations
// commuting with all previously chosen generators.
void commuting_tuples(const std::vector<Perm>& perms, int level, int ell, int n,
                      std::vector<const Perm*>& chosen, HomCensus& census) {
  if (level == ell) {
    record(census, orbit_count(chosen, n));
    return;
  }
  for (const Perm& p : perms) {
    bool ok = true;
    for (const Perm* q : chosen)
      if (!commute(p, *q)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(&p);
    commuting_tuples(perms, level + 1, ell, n, chosen, census);
    chosen.pop_back();
  }
}

}  // namespace

void GroupSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("GroupSpec: empty name");
  if (pole_order < 1) throw std::invalid_argument("GroupSpec: pole_order must be >= 1");
  if (linear_growth && alpha < 2)
    throw std::invalid_argument("GroupSpec '" + name +
                                "': linear growth forces alpha >= 2");
  if (presentation == Presentation::FreeAbelian && rank < 1)
    throw std::invalid_argument("GroupSpec '" + name + "': FreeAbelian needs rank >= 1");
  for (const auto& f : zeta_numer)
    if (f.scale < 1) throw std::invalid_argument("GroupSpec: factor scale must be >= 1");
  for (const auto& f : zeta_denom)
    if (f.scale < 1) throw std::invalid_argument("GroupSpec: factor scale must be >= 1");
}

std::uint64_t CoeffTable::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(group);
  for (std::size_t i = 1; i <= values.length(); ++i) {
    mix(",");
    mix(values[i].get_str());
  }
  return h;
}

CoeffTable coeffs(const GroupSpec& spec, std::size_t n) {
  using namespace dirichlet;
  IntSeq numer = factor_product(spec.zeta_numer, n);
  if (!spec.zeta_denom.empty()) {
    IntSeq denom = factor_product(spec.zeta_denom, n);
    numer = dirichlet_mul(numer, dirichlet_inverse(denom));
  }
  return CoeffTable{spec.name, std::move(numer)};
}

namespace {

// weight d^(ell-level-1) for the divisor chosen at this level
void he_recurse(int ell, int level, std::size_t n, const mpz_class& acc,
                mpz_class& out) {
  if (level == ell - 1) {
    out += acc;  // last exponent is zero
    return;
  }
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class w;
    mpz_ui_pow_ui(w.get_mpz_t(), d, ell - level - 1);
    he_recurse(ell, level + 1, n / d, acc * w, out);
  }
}

}  // namespace

CoeffTable hermite_eisenstein(int ell, std::size_t n) {
  if (ell < 1) throw std::invalid_argument("hermite_eisenstein: ell must be >= 1");
  dirichlet::IntSeq values(n);
  for (std::size_t m = 1; m <= n; ++m) {
    mpz_class total = 0;
    if (ell == 1) {
      total = 1;
    } else {
      he_recurse(ell, 0, m, mpz_class(1), total);
    }
    values[m] = total;
  }
  return CoeffTable{"Z" + std::to_string(ell), std::move(values)};
}

HomCensus brute_force_census(const GroupSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("brute_force_census: n must be >= 1");
  if (n > 7) throw std::invalid_argument("brute_force_census: n too large (guard at 7)");
  HomCensus census;
  census.n = n;

  const std::vector<Perm> perms = all_perms(n);

  switch (spec.presentation) {
    case Presentation::InfiniteCyclic: {
      for (const Perm& p : perms) {
        std::vector<const Perm*> gens{&p};
        record(census, orbit_count(gens, n));
      }
      break;
    }
    case Presentation::FreeAbelian: {
      if (spec.rank > 3 && n > 4)
        throw std::invalid_argument(
            "brute_force_census: rank > 3 only supported for n <= 4");
      std::vector<const Perm*> chosen;
      commuting_tuples(perms, 0, spec.rank, n, chosen, census);
      break;
    }
    case Presentation::Heisenberg: {
      // Generators X, Y with Z = [X,Y]; relations [X,Z] = [Y,Z] = 1.
      for (const Perm& s : perms) {
        for (const Perm& t : perms) {
          Perm z = commutator(s, t);
          if (!commute(s, z) || !commute(t, z)) continue;
          std::vector<const Perm*> gens{&s, &t};  // z lies in <s,t>
          record(census, orbit_count(gens, n));
        }
      }
      break;
    }
  }
  return census;
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class census_to_a_n(const HomCensus& census) {
  mpz_class fact = factorial(static_cast<unsigned>(census.n - 1));
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), census.transitive.get_mpz_t(),
              fact.get_mpz_t());
  if (r != 0)
    throw std::logic_error("census_to_a_n: transitive count not divisible by (n-1)!");
  return q;
}

}  // namespace subgrowth::groups
