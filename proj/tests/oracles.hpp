#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t imod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_below(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p < n; ++p)
    if (prime(p)) out.push_back(p);
  return out;
}

inline bool squarefree(std::int64_t n) {
  n = std::llabs(n);
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return n != 0;
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  mpz_class r, base = imod(a, m), mm = m;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), mm.get_mpz_t());
  return r.get_si();
}

/// Legendre symbol by Euler's criterion, odd prime p.
inline int euler(std::int64_t a, std::int64_t p) {
  const std::int64_t r = powmod(a, (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

/// GMP's Kronecker symbol.
inline int gmp_kronecker(std::int64_t a, std::int64_t n) {
  mpz_class A = static_cast<long>(a), N = static_cast<long>(n);
  return mpz_kronecker(A.get_mpz_t(), N.get_mpz_t());
}

/// (a/p) at a prime p for a coprime to p: Euler for odd p, the mod 8 rule at 2.
inline int symbol_at(std::int64_t a, std::int64_t p) {
  if (p != 2) return euler(a, p);
  const std::int64_t r = imod(a, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

inline bool fundamental(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  if (imod(d, 4) == 1) return squarefree(d);
  if (imod(d, 4) != 0) return false;
  const std::int64_t m = d / 4;
  return (imod(m, 4) == 2 || imod(m, 4) == 3) && squarefree(m);
}

inline std::vector<std::int64_t> primes_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t q = 2; q <= n; ++q)
    if (n % q == 0 && prime(q)) out.push_back(q);
  return out;
}

inline std::vector<std::int64_t> divisors_signed(std::int64_t d) {
  std::vector<std::int64_t> out;
  const std::int64_t n = std::llabs(d);
  for (std::int64_t k = 1; k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      out.push_back(-k);
    }
  return out;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// All H8-factorizations of d as sorted triples, from divisor triples.
inline std::set<std::array<std::int64_t, 3>> h8_triples(std::int64_t d) {
  std::set<std::array<std::int64_t, 3>> out;
  for (std::int64_t d1 : divisors_signed(d)) {
    if (!fundamental(d1)) continue;
    for (std::int64_t d2 : divisors_signed(d / d1)) {
      if (!fundamental(d2)) continue;
      if ((d / d1) % d2 != 0) continue;
      const std::int64_t d3 = d / d1 / d2;
      if (!fundamental(d3)) continue;
      if (gcd(d1, d2) != 1 || gcd(d1, d3) != 1 || gcd(d2, d3) != 1) continue;
      const std::array<std::int64_t, 3> p{d1, d2, d3};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        for (std::int64_t q : primes_of(p[i]))
          if (symbol_at(p[(i + 1) % 3] * p[(i + 2) % 3], q) != 1) ok = false;
      if (!ok) continue;
      auto s = p;
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  }
  return out;
}

/// All D4-factorizations (d1 < d2, d3 possibly 1) of d.
inline std::set<std::array<std::int64_t, 3>> d4_triples(std::int64_t d) {
  std::set<std::array<std::int64_t, 3>> out;
  for (std::int64_t d1 : divisors_signed(d)) {
    if (!fundamental(d1)) continue;
    for (std::int64_t d2 : divisors_signed(d / d1)) {
      if (!fundamental(d2) || d2 <= d1) continue;
      if ((d / d1) % d2 != 0) continue;
      const std::int64_t d3 = d / d1 / d2;
      if (d3 != 1 && !fundamental(d3)) continue;
      if (gcd(d1, d2) != 1 || gcd(d1, d3) != 1 || gcd(d2, d3) != 1) continue;
      if (d1 < 0 && d2 < 0) continue;
      bool ok = true;
      for (std::int64_t q : primes_of(d1))
        if (symbol_at(d2, q) != 1) ok = false;
      for (std::int64_t q : primes_of(d2))
        if (symbol_at(d1, q) != 1) ok = false;
      if (ok) out.insert({d1, d2, d3});
    }
  }
  return out;
}

/// Nontrivial solution of c1 u^2 + c2 v^2 + c3 w^2 = 0 with |u|, |v| <= bound.
inline bool conic_box(const mpz_class& c1, const mpz_class& c2, const mpz_class& c3, long bound,
                      std::array<mpz_class, 3>* found = nullptr) {
  for (long u = 0; u <= bound; ++u)
    for (long v = 0; v <= bound; ++v) {
      if (u == 0 && v == 0) continue;
      const mpz_class rest = -(c1 * u * u + c2 * v * v);
      if (rest % c3 != 0) continue;
      const mpz_class w2 = rest / c3;
      if (w2 < 0 || !mpz_perfect_square_p(w2.get_mpz_t())) continue;
      if (found) {
        mpz_class w;
        mpz_sqrt(w.get_mpz_t(), w2.get_mpz_t());
        *found = {mpz_class(u), mpz_class(v), w};
      }
      return true;
    }
  return false;
}

/// Real value of c0 + c1 sqrt m + ... under an embedding, to 512 bits.
/// Radicands must be positive; coordinates indexed by subsets of `base`.
inline mpf_class embed_value(const std::vector<std::int64_t>& base, const std::vector<mpq_class>& coords,
                             const std::vector<int>& signs) {
  const mp_bitcnt_t prec = 512;
  mpf_class total(0, prec);
  for (std::size_t s = 0; s < coords.size(); ++s) {
    mpf_class term(coords[s], prec);
    for (std::size_t i = 0; i < base.size(); ++i)
      if (s >> i & 1) {
        mpf_class r(static_cast<double>(base[i]), prec);
        r = sqrt(r);
        term *= r * signs[i];
      }
    total += term;
  }
  return total;
}

}  // namespace oracle
