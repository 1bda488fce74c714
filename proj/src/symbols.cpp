#include "h8ext/symbols.hpp"

#include <algorithm>
#include <sstream>

#include "h8ext/error.hpp"
#include "h8ext/integer.hpp"

namespace h8ext {

bool is_prime_discriminant(std::int64_t value) {
  if (value == -4 || value == 8 || value == -8) return true;
  if (value % 2 == 0) return false;
  std::int64_t p = value < 0 ? -value : value;
  return is_prime(p) && mod(value, 4) == 1;
}

PrimeDiscriminant::PrimeDiscriminant(std::int64_t value) : value_(value) {
  if (!is_prime_discriminant(value))
    fail(ErrorKind::InvalidInput, std::to_string(value) + " is not a prime discriminant");
}

bool canonical_less(std::int64_t lhs, std::int64_t rhs) { return lhs < rhs; }

std::vector<std::int64_t> DiscriminantFactorization::values() const {
  std::vector<std::int64_t> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.value());
  return out;
}

std::string DiscriminantFactorization::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " · ";
    os << parts[i].value();
  }
  return os.str();
}

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    std::int64_t r = mod(a, 8);
    if ((r == 3 || r == 5) && (twos % 2 == 1)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

int quartic_symbol(std::int64_t a, std::int64_t p) {
  if (p == 2) {
    if (mod(a, 8) != 1)
      fail(ErrorKind::Undefined,
           "(" + std::to_string(a) + "/2)_4 requires a = 1 mod 8");
    // floor division so that negative a is handled
    std::int64_t q = (a - 1) / 8;
    return (q % 2 == 0) ? 1 : -1;
  }
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (p % 4 != 1)
    fail(ErrorKind::InvalidInput,
         "quartic symbol needs p = 1 mod 4, got " + std::to_string(p));
  if (kronecker(a, p) != 1)
    fail(ErrorKind::Undefined, std::to_string(a) + " is not a nonzero quadratic residue mod " +
                                   std::to_string(p));
  std::int64_t v = powmod(a, (p - 1) / 4, p);
  if (v == 1) return 1;
  if (v == p - 1) return -1;
  fail(ErrorKind::Internal, "quartic symbol evaluated to a non-sign");
}

int quartic_symbol_composite(std::int64_t a, std::int64_t D) {
  if (D <= 0) fail(ErrorKind::InvalidInput, "composite quartic symbol needs D > 0");
  int result = 1;
  if (D == 1) return result;
  for (std::int64_t p : prime_divisors(D)) {
    if (p == 2 && D % 8 != 0)
      fail(ErrorKind::InvalidInput,
           "2 | " + std::to_string(D) + " but 8 does not; quartic symbol at 2 undefined");
    result *= quartic_symbol(a, p);
  }
  return result;
}

bool is_fundamental(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t r = mod(d, 4);
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t rm = mod(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

DiscriminantFactorization factor_discriminant(std::int64_t d) {
  if (d == 1) fail(ErrorKind::InvalidInput, "d = 1 is the trivial discriminant");
  if (!is_fundamental(d))
    fail(ErrorKind::InvalidInput, std::to_string(d) + " is not a fundamental discriminant");
  DiscriminantFactorization out;
  out.d = d;
  std::int64_t odd = d;
  if (d % 2 == 0) {
    // 2-part is decided by d mod 32
    std::int64_t r = mod(d, 32);
    std::int64_t two;
    if (r % 16 == 12) {
      two = -4;  // d = 4m, m = 3 mod 4
    } else if (r == 8 || r == 24) {
      // d = 8m' with m' odd; r = 8 -> m' = 1 mod 4, r = 24 -> m' = 3 mod 4
      two = (r == 8) ? 8 : -8;
    } else {
      fail(ErrorKind::Internal, "unexpected 2-part of fundamental discriminant");
    }
    out.parts.emplace_back(two);
    odd = d / two;
  }
  for (std::int64_t p : prime_divisors(odd)) {
    std::int64_t star = (p % 4 == 1) ? p : -p;
    out.parts.emplace_back(star);
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const PrimeDiscriminant& a, const PrimeDiscriminant& b) {
              return canonical_less(a.value(), b.value());
            });
  std::int64_t product = 1;
  for (const auto& p : out.parts) product *= p.value();
  if (product != d) fail(ErrorKind::Internal, "prime discriminants do not multiply to d");
  return out;
}

std::vector<std::int64_t> discriminant_divisors(std::int64_t d) {
  auto parts = factor_discriminant(d).values();
  std::vector<std::int64_t> out;
  const std::size_t n = parts.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::int64_t v = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v *= parts[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace h8ext
