#pragma once

// Ramification at the infinite places: the quartic symbol criterion for an
// unramified H8-extension of a real quadratic field to be totally real.

#include <optional>

#include "h8ext/construct.hpp"
#include "h8ext/factorizations.hpp"

namespace h8ext {

struct InfinityVerdict {
  bool applicable = false;  // all parts positive, no prime q = 3 mod 4 divides d
  int lhs = 0;              // (d1d2/d3)_4 (d2d3/d1)_4 (d3d1/d2)_4
  int rhs = 0;              // (d1/d2)(d2/d3)(d3/d1)
  /// Empty for d < 0. When a prime q = 3 mod 4 divides d a totally real
  /// extension always exists, possibly after a twist by q*.
  std::optional<bool> totally_real;
  bool twist_may_be_needed = false;
};

InfinityVerdict infinity_verdict(const H8Factorization& f);

/// The verdict for the certificate's factorization against the exact total
/// sign of its normalized mu.
bool sign_consistency_check(const ExtensionCertificate& cert);

}  // namespace h8ext
