#include "h8ext/integer.hpp"

#include <cstdlib>
#include <limits>

#include "h8ext/error.hpp"

namespace h8ext {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Nonexistent: return "nonexistent";
    case ErrorKind::Undefined: return "undefined symbol";
    case ErrorKind::LocallyUnsolvable: return "locally unsolvable";
    case ErrorKind::SearchExhausted: return "search bound exhausted";
    case ErrorKind::NonNormal: return "non-normal";
    case ErrorKind::BaseMismatch: return "base mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot factor 0");
  if (n == std::numeric_limits<std::int64_t>::min())
    fail(ErrorKind::InvalidInput, "integer out of range");
  std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::vector<std::pair<std::int64_t, int>> out;
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(static_cast<std::int64_t>(p), e);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p * p <= m; p += 6) {
    take(p);
    take(p + 2);
  }
  if (m > 1) out.emplace_back(static_cast<std::int64_t>(m), 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t p = 5; p * p <= n; p += 6)
    if (n % p == 0 || n % (p + 2) == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  Int b = to_int(mod(base, m)), r;
  Int mm = to_int(m);
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp),
              mm.get_mpz_t());
  return to_int64(r);
}

std::int64_t to_int64(const Int& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t()))
    fail(ErrorKind::InvalidInput, "integer does not fit in 64 bits: " + value.get_str());
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

Int to_int(std::int64_t value) {
  Int out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(value));
  return out;
}

namespace {

std::optional<Int> int_sqrt(const Int& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto num = int_sqrt(q.get_num());
  if (!num) return std::nullopt;
  auto den = int_sqrt(q.get_den());
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

std::pair<Int, Int> split_square(const Int& n) {
  if (sgn(n) == 0) fail(ErrorKind::InvalidInput, "split_square of 0");
  Int rest = abs(n), root = 1;
  // trial division is adequate for the coefficient sizes that reach here
  for (unsigned long p = 2; Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= p * p;
      root *= p;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
  }
  Int core = n / (root * root);
  return {root, core};
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0)
    fail(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace h8ext
