#include <random>

#include "doctest.h"
#include "h8ext/error.hpp"
#include "h8ext/symbols.hpp"
#include "oracles.hpp"

using namespace h8ext;

TEST_CASE("kronecker examples") {
  CHECK(kronecker(40, 13) == oracle::euler(40, 13));
  CHECK(kronecker(40, 13) == 1);
  CHECK(kronecker(65, 2) == 1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(6, 2) == 0);
  for (std::int64_t d : {-7, 0, 1, 12, 520}) CHECK(kronecker(d, 1) == 1);
  CHECK(kronecker(-3, -1) == -1);
  CHECK(kronecker(3, -1) == 1);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
}

TEST_CASE("kronecker agrees with GMP") {
  for (std::int64_t a = -60; a <= 60; ++a)
    for (std::int64_t n = -60; n <= 60; ++n) CHECK(kronecker(a, n) == oracle::gmp_kronecker(a, n));
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
  for (std::int64_t p : oracle::primes_below(200)) {
    if (p == 2) continue;
    for (std::int64_t a = -250; a <= 250; a += 7) CHECK(kronecker(a, p) == oracle::euler(a, p));
  }
}

TEST_CASE("quadratic reciprocity (q/p) = (p*/q)") {
  const auto ps = oracle::primes_below(500);
  for (std::int64_t p : ps)
    for (std::int64_t q : ps) {
      if (p == 2 || q == 2 || p == q) continue;
      const std::int64_t pstar = p % 4 == 1 ? p : -p;
      CHECK(kronecker(q, p) == kronecker(pstar, q));
    }
}

TEST_CASE("kronecker is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng), n = dist(rng);
    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
    if (n != 0 && b != 0) CHECK(kronecker(a, n * b) == kronecker(a, n) * kronecker(a, b));
  }
}

TEST_CASE("quartic symbol") {
  CHECK(quartic_symbol(40, 13) == 1);
  CHECK(quartic_symbol(104, 5) == -1);
  CHECK(quartic_symbol(65, 2) == 1);
  CHECK(quartic_symbol(9, 2) == -1);
  CHECK_THROWS_AS(quartic_symbol(5, 2), Error);       // not 1 mod 8
  CHECK_THROWS_AS(quartic_symbol(2, 5), Error);       // non-residue
  CHECK_THROWS_AS(quartic_symbol(2, 7), Error);       // 7 = 3 mod 4
  try {
    quartic_symbol(2, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Undefined);
  }
  try {
    quartic_symbol(2, 7);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("quartic symbol against fourth powers") {
  for (std::int64_t p : oracle::primes_below(100)) {
    if (p % 4 != 1) continue;
    std::set<std::int64_t> squares, fourth;
    for (std::int64_t x = 1; x < p; ++x) {
      squares.insert(x * x % p);
      fourth.insert(x * x % p * x % p * x % p);
    }
    for (std::int64_t a : squares) {
      const int q = quartic_symbol(a, p);
      CHECK(q * q == 1);
      CHECK((q == 1) == (fourth.count(a) == 1));
      CHECK(quartic_symbol(a + 3 * p, p) == q);
    }
  }
}

TEST_CASE("composite quartic symbol") {
  CHECK(quartic_symbol_composite(40, 13) == 1);
  CHECK(quartic_symbol_composite(7, 1) == 1);
  CHECK(quartic_symbol_composite(65, 8) == 1);
  CHECK(quartic_symbol_composite(104, 5) == -1);
  CHECK(quartic_symbol_composite(4, 5 * 13) == quartic_symbol(4, 5) * quartic_symbol(4, 13));
  CHECK_THROWS_AS(quartic_symbol_composite(1, 4), Error);
}

TEST_CASE("prime discriminants") {
  for (std::int64_t v : {-4, 8, -8, -3, 5, -7, 13, 17, -19}) CHECK(is_prime_discriminant(v));
  for (std::int64_t v : {1, 4, -5, 3, 12, 21, -1, 0}) CHECK_FALSE(is_prime_discriminant(v));
  CHECK(PrimeDiscriminant(-8).prime() == 2);
  CHECK(PrimeDiscriminant(-3).prime() == 3);
  CHECK_THROWS_AS(PrimeDiscriminant(3), Error);
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental(5));
  CHECK_FALSE(is_fundamental(1));
  CHECK(is_fundamental(-120));
  for (std::int64_t d = -3000; d <= 3000; ++d) CHECK(is_fundamental(d) == oracle::fundamental(d));
}

TEST_CASE("factor_discriminant examples") {
  CHECK(factor_discriminant(520).values() == std::vector<std::int64_t>{5, 8, 13});
  CHECK(factor_discriminant(-4).values() == std::vector<std::int64_t>{-4});
  CHECK(factor_discriminant(12).values() == std::vector<std::int64_t>{-4, -3});
  CHECK(factor_discriminant(-120).to_string() == "-3 · 5 · 8");
  CHECK(factor_discriminant(-420).values() == std::vector<std::int64_t>{-7, -4, -3, 5});

  std::string trivial, nonfund;
  try {
    factor_discriminant(1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    trivial = e.what();
  }
  try {
    factor_discriminant(8 * 9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    nonfund = e.what();
  }
  CHECK_FALSE(trivial.empty());
  CHECK_FALSE(nonfund.empty());
  CHECK(trivial != nonfund);
}

TEST_CASE("factorization re-multiplies for |d| <= 10^4") {
  for (std::int64_t d = -10000; d <= 10000; ++d) {
    if (d == 1 || !oracle::fundamental(d)) continue;
    const auto f = factor_discriminant(d);
    std::int64_t product = 1;
    std::set<std::int64_t> primes;
    for (const auto& p : f.parts) {
      product *= p.value();
      CHECK(is_prime_discriminant(p.value()));
      primes.insert(p.prime());
    }
    CHECK(product == d);
    CHECK(primes.size() == f.parts.size());
    CHECK(std::is_sorted(f.parts.begin(), f.parts.end(),
                         [](auto a, auto b) { return canonical_less(a.value(), b.value()); }));
    CHECK(f.parts.size() == oracle::primes_of(d).size());
  }
}

TEST_CASE("discriminant divisors") {
  CHECK(discriminant_divisors(-120) == std::vector<std::int64_t>{-120, -24, -15, -3, 1, 5, 8, 40});
  CHECK(discriminant_divisors(5) == std::vector<std::int64_t>{1, 5});
}
