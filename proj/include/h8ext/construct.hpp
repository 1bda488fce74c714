#pragma once

// Assembly, normalization and Galois certification of the Kummer generator mu
// of an unramified H8-extension M = K(sqrt mu) of k = Q(sqrt d), where
// K = Q(sqrt d1, sqrt d2, sqrt d3) and mu lies in K12 = Q(sqrt d1, sqrt d2).

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "h8ext/conic.hpp"
#include "h8ext/factorizations.hpp"
#include "h8ext/field.hpp"

namespace h8ext {

/// mu = beta * gamma * delta / r with beta = x1 sqrt d1 + x2 sqrt d2,
/// gamma = y1 + y2 sqrt d1, delta = z1 + z2 sqrt d2. After build_mu, r is
/// chosen so that mu is integral and divisible by no rational prime.
struct MuGenerator {
  BiquadElement beta, gamma, delta;
  Rational r{1};
  BiquadElement mu;

  friend bool operator==(const MuGenerator&, const MuGenerator&) = default;
};

MuGenerator build_mu(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a,
                     const std::array<Int, 3>& x, const std::array<Int, 3>& y,
                     const std::array<Int, 3>& z);

/// alpha = value * sqrt(extra)^(times_sqrt_extra) with alpha^2 = mu^(1-g), and
/// sign = alpha^(1+g).
struct KummerAlpha {
  BiquadElement value;
  bool times_sqrt_extra = false;
  int sign = 0;
};

/// g acts on sqrt d1, sqrt d2 by `signs` and on sqrt(extra) by `extra_sign`;
/// the Kummer field is K12(sqrt extra) (extra = 1: K12 itself). Throws
/// NonNormal when mu^(1-g) is not a square there.
KummerAlpha compute_alpha(const BiquadElement& mu, const std::vector<int>& signs,
                          std::int64_t extra = 1, int extra_sign = 1);

/// The element g of Gal(K/k) restricting to the given action on K12
/// (so g fixes sqrt(d1 d2 extra)).
KummerAlpha compute_alpha(const BiquadElement& mu, GaloisAction g, std::int64_t extra = 1);

struct SVector {
  int s_sigma = 0, s_tau = 0, s_sigmatau = 0;

  int minus_count() const { return (s_sigma < 0) + (s_tau < 0) + (s_sigmatau < 0); }
  friend bool operator==(const SVector&, const SVector&) = default;
};

enum class GaloisClass { Elementary222, C2xC4, D4, H8 };

const char* to_string(GaloisClass g) noexcept;
GaloisClass galois_class_from_string(const std::string& text);

/// Group from the sign pattern; invariant under permutation of the entries.
GaloisClass classify(const SVector& s);

/// True iff x = xi^2 mod 4 for some integer xi of the field of x. The base
/// radicands must be pairwise coprime fundamental discriminants; x must be
/// integral of odd norm (InvalidInput otherwise).
bool two_primary_oracle(const MultiquadElement& x);

/// An odd integral element in the square class of 2, when 2 ramifies in the
/// field (some radicand is even).
std::optional<MultiquadElement> odd_representative_of_two(const MultiquadElement::Base& base);

/// t * x with the factor 2 (if |t| = 2) replaced by its odd representative;
/// empty when that is impossible.
std::optional<MultiquadElement> odd_twist(const MultiquadElement& x, int t);

/// The twists allowed for mu: {+1, -1} if d1 d2 is odd or 0 mod 8, {+1, +2}
/// if d1 d2 = 4 mod 8.
std::vector<int> two_primary_candidates(std::int64_t d1, std::int64_t d2);

struct TwoPrimaryChoice {
  int twist = 1;
  BiquadElement mu;  // twist * input
};

/// Chooses the twist in the candidate set that passes the oracle; prefers a
/// totally positive result, then the earlier candidate. Throws Internal when
/// no candidate passes.
TwoPrimaryChoice two_primary_normalize(const BiquadElement& mu, std::int64_t d1, std::int64_t d2);

struct ExtensionCertificate {
  static constexpr const char* schema = "h8cert/1";

  std::int64_t d = 0;
  std::array<std::int64_t, 3> factorization{};  // canonical order
  std::array<std::int64_t, 3> roles{};          // (d1, d2, d3) as used by the construction
  std::int64_t a = 1;
  std::array<Int, 3> x, y, z;
  MuGenerator generator;
  int two_primary_twist = 1;        // one of +1, -1, +2, -2
  std::int64_t infinity_twist = 1;  // 1 or q* for a prime q = 3 mod 4 dividing d
  BiquadElement mu;                 // two_primary_twist * infinity_twist * generator.mu
  SVector s_vector;
  int rho_sign = 0;
  GaloisClass group = GaloisClass::H8;
  std::optional<bool> totally_real;  // only for d > 0
  bool unique = false;               // all parts are prime discriminants

  /// The triquadratic K over the role base (d1, d2, d3).
  MultiquadElement::Base k_base() const { return {roles[0], roles[1], roles[2]}; }

  friend bool operator==(const ExtensionCertificate&, const ExtensionCertificate&) = default;
};

/// Slots (d1, d2, d3) for the construction: d2 > 0, d3 odd, and a negative
/// part (if any) in d1.
std::array<std::int64_t, 3> assign_roles(const std::array<std::int64_t, 3>& parts);

struct PipelineOptions {
  std::int64_t forced_a = 0;  // 0: search
  std::int64_t max_a = 100000;
  ConicOptions conic;
};

ExtensionCertificate construct_h8(const H8Factorization& f, const PipelineOptions& options = {});

/// alpha_rho^(1+rho) for rho: sqrt d_i -> -sqrt d_i (i = 1, 2, 3).
int check_normal_over_q(const ExtensionCertificate& cert);

/// The closed forms a x3 z3 sqrt d3 / (beta^s delta^s), a x3 y3 sqrt d3 / (beta^t gamma^t),
/// a y3 z3 / (gamma^t delta^s) for sigma, tau, sigma*tau.
std::array<KummerAlpha, 3> closed_form_alphas(const ExtensionCertificate& cert);

/// Every certificate field recomputed from (roles, a, x, y, z) and compared.
/// Returns the first discrepancy.
std::optional<std::string> verify_certificate(const ExtensionCertificate& cert);

/// Squarefree part of N(mu) is supported on -1, 2 and primes of d.
bool odd_support_ok(const BiquadElement& mu, std::int64_t d);

struct TwistResult {
  std::int64_t delta = 1;
  bool delta_is_square_in_k = true;
};

/// The discriminant delta | d (ascending |delta|, positive first) with
/// y = delta * x up to squares of K = Q(sqrt d1, sqrt d2, sqrt d3); x and y
/// are embedded into `k_base` first.
std::optional<TwistResult> find_discriminant_twist(std::int64_t d,
                                                   const MultiquadElement::Base& k_base,
                                                   const MultiquadElement& x,
                                                   const MultiquadElement& y);

/// Twist relating two certificates for the same factorization. Throws
/// Internal if no discriminant works.
TwistResult uniqueness_twist(const ExtensionCertificate& m1, const ExtensionCertificate& m2);

std::string to_text(const ExtensionCertificate& cert);

}  // namespace h8ext
