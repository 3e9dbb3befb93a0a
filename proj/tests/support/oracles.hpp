#pragma once

// Reference computations written without the library: plain integer
// arithmetic, polynomial remainders and exhaustive searches.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/topology.hpp"

namespace oracle {

using Set = std::set<std::uint32_t>;

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (auto p : prime_divisors(n)) r *= p;
  return r;
}

/// dZ/nZ as a residue set.
inline Set zn_multiples(std::int64_t n, std::int64_t d) {
  Set s;
  for (std::int64_t k = 0; k < n; ++k) s.insert(static_cast<std::uint32_t>((k * d) % n));
  return s;
}

inline Set zn_idempotents(std::int64_t n) {
  Set s;
  for (std::int64_t e = 0; e < n; ++e)
    if ((e * e) % n == e) s.insert(static_cast<std::uint32_t>(e));
  return s;
}

/// Ann(f) in Z/n is (n / gcd(n, f)).
inline Set zn_annihilator(std::int64_t n, std::int64_t f) { return zn_multiples(n, n / std::gcd(n, f)); }

/// Ker pi at (p) in Z/n: multiples of the full p-power dividing n.
inline Set zn_kernel(std::int64_t n, std::int64_t p) {
  std::int64_t q = 1;
  while (n % (q * p) == 0) q *= p;
  return zn_multiples(n, q);
}

inline std::size_t divisor_count(std::int64_t n) {
  std::size_t c = 0;
  for (std::int64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

/// Multiplication in F_p[x]/(f), elements as little-endian base-p codes.
inline std::uint32_t poly_mul(std::int64_t p, const std::vector<std::int64_t>& f, std::uint32_t a, std::uint32_t b) {
  const std::size_t d = f.size() - 1;
  auto decode = [&](std::uint32_t c) {
    std::vector<std::int64_t> v(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = c % p;
      c /= static_cast<std::uint32_t>(p);
    }
    return v;
  };
  const auto x = decode(a), y = decode(b);
  std::vector<std::int64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t k = prod.size(); k-- > d;) {
    const std::int64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] = ((prod[k - d + i] - c * f[i]) % p + p) % p;
  }
  std::uint32_t code = 0;
  for (std::size_t i = d; i-- > 0;) code = code * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[i]);
  return code;
}

/// Exhaustive check of the commutative ring axioms on a finite ring.
inline bool ring_axioms(const ringlab::FiniteRing& R) {
  const auto n = static_cast<std::uint32_t>(R.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (R.add(a, 0) != a || R.mul(a, R.one()) != a || R.add(a, R.neg(a)) != 0) return false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (R.add(a, b) != R.add(b, a) || R.mul(a, b) != R.mul(b, a)) return false;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return false;
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return false;
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return false;
      }
    }
  }
  return true;
}

/// Every open set of a finite space, by brute force over all subsets.
inline std::vector<ringlab::PointSet> opens(const ringlab::SpectralSpace& X, ringlab::Topology t) {
  std::vector<ringlab::PointSet> out;
  const std::size_t n = X.size();
  for (ringlab::PointSet s = 0; s < (ringlab::PointSet{1} << n); ++s) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!(s >> x & 1)) continue;
      for (std::size_t y = 0; y < n && ok; ++y) {
        const bool below = X.le(y, x), above = X.le(x, y);
        if (t == ringlab::Topology::zariski && below && !(s >> y & 1)) ok = false;
        if (t == ringlab::Topology::flat && above && !(s >> y & 1)) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Normality by searching all pairs of disjoint closed sets and all pairs of opens.
inline bool normal(const ringlab::SpectralSpace& X, ringlab::Topology t) {
  const auto os = opens(X, t);
  const ringlab::PointSet all = (ringlab::PointSet{1} << X.size()) - 1;
  for (auto u : os)
    for (auto v : os) {
      const auto c = all & ~u, d = all & ~v;
      if (c & d) continue;
      bool separated = false;
      for (auto a : os) {
        if ((c & ~a) != 0) continue;
        for (auto b : os)
          if ((d & ~b) == 0 && (a & b) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

inline bool hausdorff(const ringlab::SpectralSpace& X, ringlab::Topology t) {
  const auto os = opens(X, t);
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = x + 1; y < X.size(); ++y) {
      bool sep = false;
      for (auto a : os)
        for (auto b : os)
          if ((a >> x & 1) && (b >> y & 1) && (a & b) == 0) sep = true;
      if (!sep) return false;
    }
  return true;
}

}  // namespace oracle
