#pragma once

// Kronecker and quartic residue symbols, and the decomposition of a
// fundamental discriminant into prime discriminants.

#include <cstdint>
#include <string>
#include <vector>

namespace h8ext {

/// A prime discriminant: -4, 8, -8, or p* = (-1)^((p-1)/2) p for an odd prime p.
class PrimeDiscriminant {
 public:
  /// Throws InvalidInput unless `value` is a prime discriminant.
  explicit PrimeDiscriminant(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  /// The rational prime dividing the discriminant.
  std::int64_t prime() const noexcept { return value_ % 2 == 0 ? 2 : (value_ < 0 ? -value_ : value_); }

  friend bool operator==(const PrimeDiscriminant&, const PrimeDiscriminant&) = default;

 private:
  std::int64_t value_;
};

bool is_prime_discriminant(std::int64_t value);

/// Canonical order for discriminant lists: ascending numeric value.
bool canonical_less(std::int64_t lhs, std::int64_t rhs);

struct DiscriminantFactorization {
  std::int64_t d = 0;
  std::vector<PrimeDiscriminant> parts;  // canonical order

  std::vector<std::int64_t> values() const;
  /// "-3 · 5 · 8"
  std::string to_string() const;
};

/// Kronecker symbol (a/n) for any integers; (a/0) = 1 iff a = +-1.
int kronecker(std::int64_t a, std::int64_t n);

/// Quartic residue symbol (a/p)_4 for p = 2 (a = 1 mod 8) or a prime p = 1 mod 4
/// (a a nonzero quadratic residue mod p). Throws Undefined / InvalidInput.
int quartic_symbol(std::int64_t a, std::int64_t p);

/// Product of quartic_symbol(a, p) over the distinct primes p of the positive
/// discriminant D; the prime 2 enters once, and only when 8 | D.
int quartic_symbol_composite(std::int64_t a, std::int64_t D);

bool is_fundamental(std::int64_t d);

/// The unique factorization of a fundamental discriminant d != 1.
/// Throws InvalidInput (with distinct messages) for d = 1 and for
/// non-fundamental d.
DiscriminantFactorization factor_discriminant(std::int64_t d);

/// Every discriminant dividing d in the sense of products of subsets of its
/// prime discriminants (including 1), ascending.
std::vector<std::int64_t> discriminant_divisors(std::int64_t d);

}  // namespace h8ext
