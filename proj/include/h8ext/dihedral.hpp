#pragma once

// Unramified D4-extensions M = k(sqrt d1, sqrt d2, sqrt alpha) from a
// D4-factorization d = d1 d2 d3, with alpha in Q(sqrt d1) of norm d2 Z^2.

#include <optional>
#include <string>

#include "h8ext/construct.hpp"
#include "h8ext/factorizations.hpp"
#include "h8ext/field.hpp"

namespace h8ext {

/// Field over which the twisted alpha passed the 2-primarity oracle.
enum class OracleLevel { QuadraticField, Biquadratic, Triquadratic };

const char* to_string(OracleLevel level) noexcept;
OracleLevel oracle_level_from_string(const std::string& text);

struct D4Certificate {
  static constexpr const char* schema = "d4cert/1";

  D4Factorization factorization;
  std::int64_t d1 = 0, d2 = 0;  // conic roles: alpha lies in Q(sqrt d1), d2 odd
  Int X, Y, Z;                  // X^2 - d1 Y^2 - d2 Z^2 = 0
  Int content{1};               // gcd removed from X + Y sqrt d1
  int twist = 1;                // one of +1, -1, +2, -2
  OracleLevel level = OracleLevel::QuadraticField;
  MultiquadElement alpha;       // over the base (d1)
  SVector s_vector;             // over Q(sqrt d1, sqrt d2): sigma, tau, sigma*tau
  std::optional<bool> totally_positive;  // only for d1 > 0
  bool no_compositum = false;   // d3 = 1: M is the C4 field over Q(sqrt(d1 d2))

  /// "k(√8, √17, √(5 + √8))"
  std::string generators() const;

  friend bool operator==(const D4Certificate&, const D4Certificate&) = default;
};

/// Throws LocallyUnsolvable if the conic fails (invalid factorization) and
/// Internal if no twist passes the oracle.
D4Certificate d4_construct(const D4Factorization& f, const ConicOptions& options = {});

/// Every field recomputed from (factorization, X, Y, Z); the first
/// discrepancy, or empty.
std::optional<std::string> d4_check(const D4Certificate& cert);
inline bool d4_verify(const D4Certificate& cert) { return !d4_check(cert).has_value(); }

std::string to_text(const D4Certificate& cert);

}  // namespace h8ext
