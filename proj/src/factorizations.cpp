#include "h8ext/factorizations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "h8ext/error.hpp"
#include "h8ext/integer.hpp"
#include "h8ext/symbols.hpp"

namespace h8ext {

std::string SymbolCheck::to_string() const {
  std::ostringstream os;
  os << "(" << numerator << "/" << prime << ") = " << (value > 0 ? "+1" : value < 0 ? "-1" : "0");
  return os.str();
}

std::array<std::int64_t, 3> H8Factorization::canonical() const {
  auto out = parts;
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string H8Factorization::to_string() const {
  std::ostringstream os;
  os << parts[0] << " · " << parts[1] << " · " << parts[2];
  return os.str();
}

std::string D4Factorization::to_string() const {
  std::ostringstream os;
  os << "(" << d1 << ", " << d2 << "; " << d3 << ")";
  return os.str();
}

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void require_discriminant(std::int64_t v, bool allow_one) {
  if (v == 1 && allow_one) return;
  if (v == 1)
    fail(ErrorKind::InvalidInput, "H8 parts must be nontrivial discriminants (got 1)");
  if (!is_fundamental(v))
    fail(ErrorKind::InvalidInput, std::to_string(v) + " is not a fundamental discriminant");
}

void require_coprime(const std::vector<std::int64_t>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(abs64(parts[i]), abs64(parts[j])) != 1)
        fail(ErrorKind::InvalidInput, std::to_string(parts[i]) + " and " +
                                          std::to_string(parts[j]) + " are not coprime");
}

void require_product(const std::vector<std::int64_t>& parts, std::optional<std::int64_t> target) {
  if (!target) return;
  std::int64_t p = 1;
  for (auto v : parts) p *= v;
  if (p != *target)
    fail(ErrorKind::InvalidInput, "parts multiply to " + std::to_string(p) + ", not " +
                                      std::to_string(*target));
}

}  // namespace

H8Check check_h8(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                 std::optional<std::int64_t> target_d) {
  const std::array<std::int64_t, 3> parts{d1, d2, d3};
  for (auto v : parts) require_discriminant(v, false);
  require_coprime({d1, d2, d3});
  require_product({d1, d2, d3}, target_d);

  H8Factorization f;
  f.d = d1 * d2 * d3;
  f.parts = parts;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t numerator = parts[(i + 1) % 3] * parts[(i + 2) % 3];
    for (std::int64_t p : prime_divisors(parts[i])) {
      SymbolCheck c{i, p, numerator, kronecker(numerator, p)};
      if (c.value != 1) return H8Check{std::nullopt, c};
      f.checks.push_back(c);
    }
  }
  return H8Check{std::move(f), std::nullopt};
}

H8Factorization is_h8_factorization(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                                    std::optional<std::int64_t> target_d) {
  auto c = check_h8(d1, d2, d3, target_d);
  if (!c.ok())
    fail(ErrorKind::Nonexistent, "not an H8-factorization: " + c.failure->to_string());
  return std::move(*c.factorization);
}

bool negativity_check(const H8Factorization& f) {
  return std::count_if(f.parts.begin(), f.parts.end(), [](auto v) { return v < 0; }) <= 1;
}

namespace {

// Calls visit(products) for every assignment of the prime discriminants of d
// to three buckets.
template <typename Visit>
void for_each_split(std::int64_t d, Visit&& visit) {
  const auto primes = factor_discriminant(d).values();
  const std::size_t n = primes.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::array<std::int64_t, 3> prod{1, 1, 1};
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) prod[c % 3] *= primes[i];
    visit(prod);
  }
}

}  // namespace

std::vector<H8Factorization> enumerate_h8(std::int64_t d) {
  std::map<std::array<std::int64_t, 3>, H8Factorization> found;
  for_each_split(d, [&](std::array<std::int64_t, 3> prod) {
    if (prod[0] == 1 || prod[1] == 1 || prod[2] == 1) return;
    std::sort(prod.begin(), prod.end(), canonical_less);
    if (found.count(prod)) return;
    auto c = check_h8(prod[0], prod[1], prod[2], d);
    if (c.ok()) found.emplace(prod, std::move(*c.factorization));
  });
  std::vector<H8Factorization> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

std::string h8_nonexistence_reason(std::int64_t d) {
  const auto parts = factor_discriminant(d).values();
  if (parts.size() < 3)
    return "d has " + std::to_string(parts.size()) + " prime discriminant factor" +
           (parts.size() == 1 ? "" : "s") + ", an H8-factorization needs three parts";
  std::map<std::array<std::int64_t, 3>, std::string> failures;
  for_each_split(d, [&](std::array<std::int64_t, 3> prod) {
    if (prod[0] == 1 || prod[1] == 1 || prod[2] == 1) return;
    std::sort(prod.begin(), prod.end(), canonical_less);
    if (failures.count(prod)) return;
    auto c = check_h8(prod[0], prod[1], prod[2], d);
    if (!c.ok()) failures.emplace(prod, c.failure->to_string());
  });
  std::string out;
  for (const auto& [p, why] : failures) {
    if (!out.empty()) out += "; ";
    out += "(" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + ", " + std::to_string(p[2]) + "): " + why;
  }
  return out;
}

D4Check check_d4(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                 std::optional<std::int64_t> target_d) {
  require_discriminant(d1, false);
  require_discriminant(d2, false);
  require_discriminant(d3, true);
  require_coprime({d1, d2, d3});
  require_product({d1, d2, d3}, target_d);
  if (d1 < 0 && d2 < 0)
    fail(ErrorKind::InvalidInput, "at most one of d1, d2 may be negative");

  D4Factorization f;
  f.d = d1 * d2 * d3;
  f.d1 = d1;
  f.d2 = d2;
  f.d3 = d3;
  const std::array<std::pair<int, std::int64_t>, 2> sides{{{0, d1}, {1, d2}}};
  for (const auto& [i, di] : sides) {
    const std::int64_t other = (i == 0) ? d2 : d1;
    for (std::int64_t p : prime_divisors(di)) {
      SymbolCheck c{i, p, other, kronecker(other, p)};
      if (c.value != 1) return D4Check{std::nullopt, c};
      f.checks.push_back(c);
    }
  }
  return D4Check{std::move(f), std::nullopt};
}

std::vector<D4Factorization> enumerate_d4(std::int64_t d) {
  std::map<std::array<std::int64_t, 3>, D4Factorization> found;
  for_each_split(d, [&](std::array<std::int64_t, 3> prod) {
    if (prod[0] == 1 || prod[1] == 1) return;
    if (prod[0] < 0 && prod[1] < 0) return;
    if (canonical_less(prod[1], prod[0])) std::swap(prod[0], prod[1]);
    if (found.count(prod)) return;
    auto c = check_d4(prod[0], prod[1], prod[2], d);
    if (c.ok()) found.emplace(prod, std::move(*c.factorization));
  });
  std::vector<D4Factorization> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

}  // namespace h8ext
