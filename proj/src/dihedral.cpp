#include "h8ext/dihedral.hpp"

#include <sstream>

#include "h8ext/error.hpp"

namespace h8ext {

const char* to_string(OracleLevel level) noexcept {
  switch (level) {
    case OracleLevel::QuadraticField: return "Q(sqrt d1)";
    case OracleLevel::Biquadratic: return "Q(sqrt d1, sqrt d2)";
    case OracleLevel::Triquadratic: return "Q(sqrt d1, sqrt d2, sqrt d3)";
  }
  return "?";
}

OracleLevel oracle_level_from_string(const std::string& text) {
  for (auto l : {OracleLevel::QuadraticField, OracleLevel::Biquadratic, OracleLevel::Triquadratic})
    if (text == to_string(l)) return l;
  fail(ErrorKind::InvalidInput, "unknown oracle level '" + text + "'");
}

namespace {

constexpr int kTwists[] = {1, -1, 2, -2};

bool odd_norm(const MultiquadElement& x) {
  const Rational n = x.norm();
  return n.get_den() == 1 && mpz_odd_p(n.get_num().get_mpz_t());
}

std::optional<int> passing_twist(const MultiquadElement& x) {
  for (int t : kTwists) {
    auto y = odd_twist(x, t);
    if (!y || !integral_coordinates(*y) || !odd_norm(*y)) continue;
    if (two_primary_oracle(*y)) return t;
  }
  return std::nullopt;
}

MultiquadElement::Base base_for(OracleLevel level, std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  switch (level) {
    case OracleLevel::QuadraticField: return {d1};
    case OracleLevel::Biquadratic: return {d1, d2};
    case OracleLevel::Triquadratic: return {d1, d2, d3};
  }
  return {d1};
}

struct Normalized {
  int twist;
  OracleLevel level;
};

Normalized normalize_alpha(const MultiquadElement& alpha, std::int64_t d2, std::int64_t d3) {
  const std::int64_t d1 = alpha.base()[0];
  for (auto level : {OracleLevel::QuadraticField, OracleLevel::Biquadratic, OracleLevel::Triquadratic}) {
    if (level == OracleLevel::Triquadratic && d3 == 1) break;
    if (auto t = passing_twist(alpha.embed(base_for(level, d1, d2, d3)))) return {*t, level};
  }
  fail(ErrorKind::Internal, "no twist of " + alpha.to_string() + " is 2-primary");
}

SVector d4_signs(const MultiquadElement& alpha, std::int64_t d2) {
  const MultiquadElement a = alpha.embed({alpha.base()[0], d2});
  SVector s;
  s.s_sigma = compute_alpha(a, GaloisAction::Sigma).sign;
  s.s_tau = compute_alpha(a, GaloisAction::Tau).sign;
  s.s_sigmatau = compute_alpha(a, GaloisAction::SigmaTau).sign;
  return s;
}

// alpha lives in the quadratic field of the even part, so that its norm d2 Z^2 can be odd.
std::pair<std::int64_t, std::int64_t> conic_roles(const D4Factorization& f) {
  if (f.d2 % 2 == 0) return {f.d2, f.d1};
  return {f.d1, f.d2};
}

MultiquadElement alpha_of(std::int64_t d1, const Int& X, const Int& Y, Int& content) {
  content = gcd(X, Y);
  if (sgn(content) == 0) fail(ErrorKind::Internal, "degenerate conic solution");
  MultiquadElement::Base base{d1};
  return MultiquadElement(base, {Rational(X / content), Rational(Y / content)});
}

}  // namespace

D4Certificate d4_construct(const D4Factorization& f, const ConicOptions& options) {
  const auto check = check_d4(f.d1, f.d2, f.d3, f.d);
  if (!check.ok()) fail(ErrorKind::InvalidInput, "not a D4-factorization: " + f.to_string());
  D4Certificate c;
  c.factorization = *check.factorization;
  std::tie(c.d1, c.d2) = conic_roles(c.factorization);
  ConicOptions opts = options;
  opts.require_nonzero_last = true;
  const ConicEquation eq{Int(1), to_int(-c.d1), to_int(-c.d2)};
  ConicSolution s = solve_conic(eq, opts);
  if (auto odd = with_odd_last(s)) s = *odd;
  c.X = s.u;
  c.Y = s.v;
  c.Z = s.w;
  const MultiquadElement raw = alpha_of(c.d1, c.X, c.Y, c.content);
  const Normalized n = normalize_alpha(raw, c.d2, c.factorization.d3);
  c.twist = n.twist;
  c.level = n.level;
  c.alpha = raw * Rational(n.twist);
  c.s_vector = d4_signs(c.alpha, c.d2);
  if (c.d1 > 0) c.totally_positive = total_sign(c.alpha) == 1;
  c.no_compositum = c.factorization.d3 == 1;
  return c;
}

std::optional<std::string> d4_check(const D4Certificate& c) {
  try {
    const auto& f = c.factorization;
    const auto check = check_d4(f.d1, f.d2, f.d3, f.d);
    if (!check.ok()) return "not a D4-factorization";
    if (std::make_pair(c.d1, c.d2) != conic_roles(f)) return "conic roles do not match the factorization";
    if (sgn(c.Z) == 0) return "Z = 0";
    if (c.X * c.X - c.d1 * c.Y * c.Y - c.d2 * c.Z * c.Z != 0) return "conic equation fails";
    Int content;
    const MultiquadElement raw = alpha_of(c.d1, c.X, c.Y, content);
    if (content != c.content) return "content mismatch";
    if (c.twist != 1 && c.twist != -1 && c.twist != 2 && c.twist != -2) return "invalid twist";
    if (!(raw * Rational(c.twist) == c.alpha)) return "alpha does not match X + Y sqrt d1";
    // alpha alpha' = d2 Z^2 up to the twist and content
    const Rational expected = Rational(c.twist * c.twist) * c.d2 * c.Z * c.Z / (content * content);
    if (c.alpha.norm() != expected) return "norm relation fails";
    const Normalized n = normalize_alpha(raw, c.d2, f.d3);
    if (n.twist != c.twist || n.level != c.level) return "2-primary normalization mismatch";
    const SVector s = d4_signs(c.alpha, c.d2);
    if (!(s == c.s_vector)) return "sign vector mismatch";
    if (classify(s) != GaloisClass::D4) return "sign pattern is not the D4 pattern";
    if (s.s_sigmatau != -1) return "M is not cyclic over Q(sqrt(d1 d2))";
    std::optional<bool> pos;
    if (c.d1 > 0) pos = total_sign(c.alpha) == 1;
    if (pos != c.totally_positive) return "total positivity flag mismatch";
    if (c.no_compositum != (f.d3 == 1)) return "compositum flag mismatch";
  } catch (const Error& e) {
    return std::string("verification raised: ") + e.what();
  }
  return std::nullopt;
}

std::string D4Certificate::generators() const {
  auto root = [](std::int64_t v) {
    return v < 0 ? "√(" + std::to_string(v) + ")" : "√" + std::to_string(v);
  };
  return "k(" + root(d1) + ", " + root(d2) + ", √(" + alpha.to_string() + "))";
}

std::string to_text(const D4Certificate& c) {
  auto sign = [](int s) { return s > 0 ? std::string("+1") : std::string("-1"); };
  std::ostringstream os;
  os << "d = " << c.factorization.d << "  D4-factorization " << c.factorization.to_string() << "\n";
  os << "  conic X² - (" << c.d1 << ")Y² - (" << c.d2 << ")Z² = 0: (X, Y, Z) = (" << c.X << ", " << c.Y
     << ", " << c.Z << ")\n";
  os << "  alpha = " << c.alpha.to_string() << "  (twist " << c.twist << ", 2-primary over "
     << to_string(c.level) << ")\n";
  os << "  M = " << c.generators() << "\n";
  os << "  S = (" << sign(c.s_vector.s_sigma) << ", " << sign(c.s_vector.s_tau) << ", "
     << sign(c.s_vector.s_sigmatau) << ")  group = " << to_string(classify(c.s_vector)) << "\n";
  if (c.totally_positive) os << "  alpha totally positive: " << (*c.totally_positive ? "yes" : "no") << "\n";
  if (c.no_compositum) os << "  d3 = 1: no compositum, M is the C4 field over Q(√" << c.factorization.d << ")\n";
  return os.str();
}

}  // namespace h8ext
