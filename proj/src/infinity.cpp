#include "h8ext/infinity.hpp"

#include "h8ext/error.hpp"
#include "h8ext/integer.hpp"
#include "h8ext/symbols.hpp"

namespace h8ext {

InfinityVerdict infinity_verdict(const H8Factorization& f) {
  InfinityVerdict v;
  if (f.d < 0) return v;
  for (std::int64_t p : prime_divisors(f.d)) {
    if (p % 4 == 3) {
      v.totally_real = true;
      v.twist_may_be_needed = true;
      return v;
    }
  }
  const auto [d1, d2, d3] = f.parts;
  if (d1 < 0 || d2 < 0 || d3 < 0) return v;  // unreachable once no q = 3 mod 4 divides d
  v.applicable = true;
  try {
    v.lhs = quartic_symbol_composite(d1 * d2, d3) * quartic_symbol_composite(d2 * d3, d1) *
            quartic_symbol_composite(d3 * d1, d2);
  } catch (const Error& e) {
    fail(ErrorKind::Internal, std::string("quartic symbol undefined for an H8-factorization: ") + e.what());
  }
  v.rhs = kronecker(d1, d2) * kronecker(d2, d3) * kronecker(d3, d1);
  v.totally_real = v.lhs == v.rhs;
  return v;
}

bool sign_consistency_check(const ExtensionCertificate& cert) {
  H8Factorization f;
  f.d = cert.d;
  f.parts = cert.factorization;
  const InfinityVerdict v = infinity_verdict(f);
  if (!v.totally_real) return !cert.totally_real.has_value();
  const bool positive = total_sign(cert.mu) == 1;
  if (v.applicable) return *v.totally_real == positive;
  return positive;  // after the q* twist
}

}  // namespace h8ext
