#pragma once

// Integer helpers shared by the arithmetic modules. Discriminants and symbol
// arguments are small and live in std::int64_t; anything that can grow
// (conic solutions, field coordinates) uses GMP.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace h8ext {

using Int = mpz_class;
using Rational = mpq_class;

/// Prime factors of |n| with multiplicity, ascending. n must be nonzero.
std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n);

/// Distinct primes dividing |n|, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Reduction into [0, m) for m > 0.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);

std::int64_t to_int64(const Int& value);
Int to_int(std::int64_t value);

/// Square root of a perfect-square rational, if it is one (nonnegative root).
std::optional<Rational> rational_sqrt(const Rational& q);

/// Largest s with s^2 | n, and n / s^2. n must be nonzero.
std::pair<Int, Int> split_square(const Int& n);

/// "num/den" in lowest terms, or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);
Rational parse_rational(const std::string& text);

}  // namespace h8ext
