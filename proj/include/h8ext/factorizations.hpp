#pragma once

// H8- and D4-factorizations d = d1 d2 d3 of a fundamental discriminant.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace h8ext {

/// One evaluated condition (numerator / prime) = value.
struct SymbolCheck {
  int part = 0;              // index of the d_i whose prime is tested
  std::int64_t prime = 0;
  std::int64_t numerator = 0;
  int value = 0;

  std::string to_string() const;
  friend bool operator==(const SymbolCheck&, const SymbolCheck&) = default;
};

struct H8Factorization {
  std::int64_t d = 0;
  std::array<std::int64_t, 3> parts{};  // as supplied
  std::vector<SymbolCheck> checks;      // every (d_j d_k / p_i), all +1

  std::array<std::int64_t, 3> canonical() const;
  std::string to_string() const;
};

struct H8Check {
  std::optional<H8Factorization> factorization;
  std::optional<SymbolCheck> failure;  // first failing condition

  bool ok() const { return factorization.has_value(); }
};

/// Structural problems (non-discriminant part, part equal to 1, common prime,
/// product differing from `target_d`) throw InvalidInput; symbol failures are
/// reported in the returned value.
H8Check check_h8(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                 std::optional<std::int64_t> target_d = std::nullopt);

/// As check_h8, but a failing symbol condition throws Nonexistent.
H8Factorization is_h8_factorization(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                                    std::optional<std::int64_t> target_d = std::nullopt);

/// All H8-factorizations of d up to permutation, each in canonical order.
std::vector<H8Factorization> enumerate_h8(std::int64_t d);

/// Why d has no H8-factorization: too few prime discriminant factors, or the
/// first failing condition of each candidate split.
std::string h8_nonexistence_reason(std::int64_t d);

/// At most one part negative. Holds for every valid H8Factorization.
bool negativity_check(const H8Factorization& f);

struct D4Factorization {
  std::int64_t d = 0;
  std::int64_t d1 = 0, d2 = 0;
  std::int64_t d3 = 1;  // may be 1
  std::vector<SymbolCheck> checks;

  std::string to_string() const;  // "(8, 17; 5)"
  friend bool operator==(const D4Factorization&, const D4Factorization&) = default;
};

struct D4Check {
  std::optional<D4Factorization> factorization;
  std::optional<SymbolCheck> failure;

  bool ok() const { return factorization.has_value(); }
};

D4Check check_d4(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                 std::optional<std::int64_t> target_d = std::nullopt);

/// All D4-factorizations of d with d1 < d2, d3 possibly 1.
std::vector<D4Factorization> enumerate_d4(std::int64_t d);

}  // namespace h8ext
