#include "h8ext/construct.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>
#include <sstream>

#include "h8ext/error.hpp"
#include "h8ext/symbols.hpp"

namespace h8ext {

MuGenerator build_mu(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a,
                     const std::array<Int, 3>& x, const std::array<Int, 3>& y,
                     const std::array<Int, 3>& z) {
  (void)d3;
  (void)a;
  const MultiquadElement::Base base{d1, d2};
  MuGenerator g;
  g.beta = biquad(d1, d2, 0, Rational(x[0]), Rational(x[1]), 0);
  g.gamma = biquad(d1, d2, Rational(y[0]), Rational(y[1]), 0, 0);
  g.delta = biquad(d1, d2, Rational(z[0]), 0, Rational(z[1]), 0);
  BiquadElement raw = g.beta * g.gamma * g.delta;
  if (raw.is_zero()) fail(ErrorKind::Internal, "mu vanishes");
  // r = product of the rational primes dividing the raw product
  const Int c = content(raw);
  g.r = Rational(c);
  g.mu = raw * (Rational(1) / Rational(c));
  return g;
}

KummerAlpha compute_alpha(const BiquadElement& mu, const std::vector<int>& signs,
                          std::int64_t extra, int extra_sign) {
  if (mu.is_zero()) fail(ErrorKind::InvalidInput, "mu must be nonzero");
  const BiquadElement conj = mu.conjugate(signs);
  const BiquadElement q = mu / conj;
  KummerAlpha out;
  if (auto root = sqrt(q)) {
    out.value = *root;
  } else if (extra != 1) {
    auto root2 = sqrt(q * (Rational(1) / Rational(extra)));
    if (!root2) fail(ErrorKind::NonNormal, "mu^(1-g) is not a square in the Kummer field");
    out.value = *root2;
    out.times_sqrt_extra = true;
  } else {
    fail(ErrorKind::NonNormal, "mu^(1-g) is not a square in the Kummer field");
  }
  BiquadElement s = out.value * out.value.conjugate(signs);
  if (out.times_sqrt_extra) s *= Rational(extra * extra_sign);
  if (!s.is_rational() || (s.coord(0) != 1 && s.coord(0) != -1))
    fail(ErrorKind::Internal, "alpha^(1+g) is not a sign");
  out.sign = s.coord(0) > 0 ? 1 : -1;
  return out;
}

KummerAlpha compute_alpha(const BiquadElement& mu, GaloisAction g, std::int64_t extra) {
  const auto signs = signs_of(g);
  return compute_alpha(mu, signs, extra, signs[0] * signs[1]);
}

const char* to_string(GaloisClass g) noexcept {
  switch (g) {
    case GaloisClass::Elementary222: return "(2,2,2)";
    case GaloisClass::C2xC4: return "(2,4)";
    case GaloisClass::D4: return "D4";
    case GaloisClass::H8: return "H8";
  }
  return "?";
}

GaloisClass galois_class_from_string(const std::string& text) {
  for (auto g : {GaloisClass::Elementary222, GaloisClass::C2xC4, GaloisClass::D4, GaloisClass::H8})
    if (text == to_string(g)) return g;
  fail(ErrorKind::InvalidInput, "unknown Galois class '" + text + "'");
}

GaloisClass classify(const SVector& s) {
  for (int v : {s.s_sigma, s.s_tau, s.s_sigmatau})
    if (v != 1 && v != -1) fail(ErrorKind::InvalidInput, "S-vector entries must be +-1");
  switch (s.minus_count()) {
    case 0: return GaloisClass::Elementary222;
    case 1: return GaloisClass::D4;
    case 2: return GaloisClass::C2xC4;
    default: return GaloisClass::H8;
  }
}

namespace {

using SquareTable = std::vector<std::vector<Int>>;

// Integral coordinates of xi^2 for every xi with 0/1 coordinates.
const SquareTable& squares_mod_four(const MultiquadElement::Base& base) {
  static std::mutex lock;
  static std::map<MultiquadElement::Base, SquareTable> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(base);
  if (it != cache.end()) return it->second;
  const std::size_t n = std::size_t{1} << base.size();
  std::vector<MultiquadElement> basis;
  for (std::size_t s = 0; s < n; ++s) basis.push_back(integral_basis_element(base, s));
  SquareTable table;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    MultiquadElement xi(base);
    for (std::size_t s = 0; s < n; ++s)
      if (bits >> s & 1) xi += basis[s];
    auto e = integral_coordinates(xi * xi);
    if (!e) fail(ErrorKind::Internal, "square of an integer is not integral");
    table.push_back(std::move(*e));
  }
  return cache.emplace(base, std::move(table)).first->second;
}

}  // namespace

bool two_primary_oracle(const MultiquadElement& x) {
  auto e = integral_coordinates(x);
  if (!e) fail(ErrorKind::InvalidInput, "2-primarity needs an integral element");
  const Rational n = x.norm();
  if (n.get_den() != 1 || mpz_even_p(n.get_num().get_mpz_t()))
    fail(ErrorKind::InvalidInput, "2-primarity needs an element of odd norm");
  for (const auto& sq : squares_mod_four(x.base())) {
    bool ok = true;
    for (std::size_t i = 0; i < sq.size() && ok; ++i)
      ok = mpz_divisible_2exp_p(Int((*e)[i] - sq[i]).get_mpz_t(), 2) != 0;
    if (ok) return true;
  }
  return false;
}

std::optional<MultiquadElement> odd_representative_of_two(const MultiquadElement::Base& base) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    const std::int64_t r = base[i];
    if (r % 4 != 0) continue;
    if (r % 8 == 0) return MultiquadElement::rational(base, Rational(r / 8));
    // r = 4m, m = 3 mod 4: 2 = (1 - sqrt m)^2 / ((1 + m)/2 - sqrt m)
    const std::int64_t m = r / 4;
    MultiquadElement rep = MultiquadElement::sqrt_of(base, i) * Rational(-1, 2);
    rep.coord(0) = Rational((1 + m) / 2);
    return rep;
  }
  return std::nullopt;
}

std::optional<MultiquadElement> odd_twist(const MultiquadElement& x, int t) {
  if (t == 1 || t == -1) return x * Rational(t);
  if (t != 2 && t != -2) fail(ErrorKind::InvalidInput, "twist must be one of +-1, +-2");
  auto rep = odd_representative_of_two(x.base());
  if (!rep) return std::nullopt;
  return (*rep) * x * Rational(t / 2);
}

std::vector<int> two_primary_candidates(std::int64_t d1, std::int64_t d2) {
  if (mod(d1 * d2, 8) == 4) return {1, 2};
  return {1, -1};
}

TwoPrimaryChoice two_primary_normalize(const BiquadElement& mu, std::int64_t d1, std::int64_t d2) {
  std::vector<int> passing;
  for (int t : two_primary_candidates(d1, d2)) {
    auto odd = odd_twist(mu, t);
    if (odd && two_primary_oracle(*odd)) passing.push_back(t);
  }
  if (passing.empty())
    fail(ErrorKind::Internal, "no 2-primary twist of " + mu.to_string() + " among the candidates");
  int chosen = passing.front();
  if (d1 > 0 && d2 > 0) {
    for (int t : passing)
      if (total_sign(mu * Rational(t)) == 1) {
        chosen = t;
        break;
      }
  }
  return TwoPrimaryChoice{chosen, mu * Rational(chosen)};
}

std::array<std::int64_t, 3> assign_roles(const std::array<std::int64_t, 3>& parts) {
  auto p = parts;
  std::sort(p.begin(), p.end());
  const bool has_negative = std::any_of(p.begin(), p.end(), [](auto v) { return v < 0; });
  do {
    if (p[1] <= 0 || p[2] % 2 == 0) continue;
    if (has_negative && p[0] > 0) continue;
    return p;
  } while (std::next_permutation(p.begin(), p.end()));
  fail(ErrorKind::InvalidInput, "no admissible role assignment (more than one negative or even part?)");
}

namespace {

bool has_odd_norm(const BiquadElement& x) {
  const Rational n = x.norm();
  return n.get_den() == 1 && mpz_odd_p(n.get_num().get_mpz_t());
}

bool all_prime_discriminants(const std::array<std::int64_t, 3>& parts) {
  return std::all_of(parts.begin(), parts.end(), is_prime_discriminant);
}

// Smallest prime q = 3 mod 4 dividing d, or 0.
std::int64_t smallest_prime_three_mod_four(std::int64_t d) {
  for (std::int64_t p : prime_divisors(d))
    if (p % 4 == 3) return p;
  return 0;
}

SVector s_vector_of(const BiquadElement& mu, std::int64_t d3) {
  SVector s;
  s.s_sigma = compute_alpha(mu, GaloisAction::Sigma, d3).sign;
  s.s_tau = compute_alpha(mu, GaloisAction::Tau, d3).sign;
  s.s_sigmatau = compute_alpha(mu, GaloisAction::SigmaTau, d3).sign;
  return s;
}

}  // namespace

int check_normal_over_q(const ExtensionCertificate& cert) {
  return compute_alpha(cert.mu, {-1, -1}, cert.roles[2], -1).sign;
}

ExtensionCertificate construct_h8(const H8Factorization& f, const PipelineOptions& options) {
  ExtensionCertificate cert;
  cert.d = f.d;
  cert.factorization = f.canonical();
  cert.roles = assign_roles(f.parts);
  const auto [d1, d2, d3] = cert.roles;

  if (options.forced_a != 0) {
    if (auto why = check_parameter_a(d1, d2, options.forced_a))
      fail(ErrorKind::InvalidInput, "a = " + std::to_string(options.forced_a) + " rejected: " + *why);
    if (std::gcd(options.forced_a, f.d) != 1)
      fail(ErrorKind::InvalidInput, "a must be coprime to d");
    cert.a = options.forced_a;
  } else {
    cert.a = find_parameter_a(d1, d2, options.max_a, d3);
  }

  const ConicSystem sys = solve_system(d1, d2, d3, cert.a, options.conic);
  cert.x = sys.x.triple();
  cert.y = sys.y.triple();
  cert.z = sys.z.triple();
  cert.generator = build_mu(d1, d2, d3, cert.a, cert.x, cert.y, cert.z);
  if (!has_odd_norm(cert.generator.mu)) {
    // a prime above 2 survived the cleanup; odd last coordinates avoid it
    auto retry = [](ConicSolution s) {
      auto odd = with_odd_last(s);
      return odd ? odd->triple() : s.triple();
    };
    cert.x = retry(sys.x);
    cert.y = retry(sys.y);
    cert.z = retry(sys.z);
    cert.generator = build_mu(d1, d2, d3, cert.a, cert.x, cert.y, cert.z);
  }

  const TwoPrimaryChoice choice = two_primary_normalize(cert.generator.mu, d1, d2);
  cert.two_primary_twist = choice.twist;
  cert.mu = choice.mu;
  if (cert.d > 0) {
    const std::int64_t q = smallest_prime_three_mod_four(cert.d);
    if (q != 0 && total_sign(cert.mu) == -1) {
      cert.infinity_twist = -q;
      cert.mu *= Rational(-q);
    }
    cert.totally_real = total_sign(cert.mu) == 1;
  }

  cert.s_vector = s_vector_of(cert.mu, d3);
  cert.group = classify(cert.s_vector);
  cert.rho_sign = check_normal_over_q(cert);
  cert.unique = all_prime_discriminants(cert.factorization);

  if (cert.group != GaloisClass::H8 || cert.rho_sign != -1)
    fail(ErrorKind::Internal, "constructed extension is not an H8-extension normal over Q");
  return cert;
}

std::array<KummerAlpha, 3> closed_form_alphas(const ExtensionCertificate& cert) {
  const auto& g = cert.generator;
  const Rational a(to_int(cert.a));
  const Rational x3(cert.x[2]), y3(cert.y[2]), z3(cert.z[2]);
  const auto sigma = signs_of(GaloisAction::Sigma);
  const auto tau = signs_of(GaloisAction::Tau);
  std::array<KummerAlpha, 3> out;
  out[0].value = (g.beta.conjugate(sigma) * g.delta.conjugate(sigma)).inverse() * (a * x3 * z3);
  out[0].times_sqrt_extra = true;
  out[1].value = (g.beta.conjugate(tau) * g.gamma.conjugate(tau)).inverse() * (a * x3 * y3);
  out[1].times_sqrt_extra = true;
  out[2].value = (g.gamma.conjugate(tau) * g.delta.conjugate(sigma)).inverse() * (a * y3 * z3);
  const std::int64_t d3 = cert.roles[2];
  const std::array<GaloisAction, 3> actions{GaloisAction::Sigma, GaloisAction::Tau, GaloisAction::SigmaTau};
  for (int i = 0; i < 3; ++i) {
    const auto s = signs_of(actions[i]);
    BiquadElement v = out[i].value * out[i].value.conjugate(s);
    if (out[i].times_sqrt_extra) v *= Rational(d3 * s[0] * s[1]);
    out[i].sign = v.is_rational() ? sgn(v.coord(0)) : 0;
  }
  return out;
}

bool odd_support_ok(const BiquadElement& mu, std::int64_t d) {
  Rational n = mu.norm();
  Int num = abs(n.get_num()) * n.get_den();  // same square class as |N|
  if (sgn(num) == 0) return false;
  std::vector<std::int64_t> allowed = prime_divisors(d);
  allowed.push_back(2);
  for (std::int64_t p : allowed)
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)))
      num /= static_cast<unsigned long>(p);
  return mpz_perfect_square_p(num.get_mpz_t()) != 0;
}

std::optional<std::string> verify_certificate(const ExtensionCertificate& c) {
  try {
    const auto [d1, d2, d3] = c.roles;
    if (d1 * d2 * d3 != c.d) return "roles do not multiply to d";
    auto sorted = c.roles;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.factorization) return "roles are not a permutation of the factorization";
    if (!check_h8(d1, d2, d3, c.d).ok()) return "not an H8-factorization";
    if (c.roles != assign_roles(c.roles)) return "role assignment is not canonical";
    if (auto why = check_parameter_a(d1, d2, c.a)) return "a: " + *why;
    const ConicSolution sx{c.x[0], c.x[1], c.x[2], equation_one(d1, d2, d3, c.a)};
    const ConicSolution sy{c.y[0], c.y[1], c.y[2], equation_two(d1, c.a)};
    const ConicSolution sz{c.z[0], c.z[1], c.z[2], equation_three(d2, c.a)};
    if (!sx.verify() || !sy.verify() || !sz.verify()) return "a solution triple fails its equation";
    if (sgn(c.x[2]) == 0 || sgn(c.y[2]) == 0 || sgn(c.z[2]) == 0) return "a last coordinate is zero";
    const MuGenerator g = build_mu(d1, d2, d3, c.a, c.x, c.y, c.z);
    if (!(g.beta == c.generator.beta && g.gamma == c.generator.gamma &&
          g.delta == c.generator.delta && g.r == c.generator.r && g.mu == c.generator.mu))
      return "generator does not match the solutions";
    const auto cand = two_primary_candidates(d1, d2);
    if (std::find(cand.begin(), cand.end(), c.two_primary_twist) == cand.end())
      return "2-primary twist outside the candidate set";
    if (c.infinity_twist != 1) {
      if (c.infinity_twist >= 0 || c.d < 0 || c.d % c.infinity_twist != 0 ||
          mod(-c.infinity_twist, 4) != 3 || !is_prime(-c.infinity_twist))
        return "invalid infinity twist";
    }
    const BiquadElement expected =
        g.mu * Rational(c.two_primary_twist) * Rational(to_int(c.infinity_twist));
    if (!(expected == c.mu)) return "mu does not match generator and twists";
    auto odd = odd_twist(g.mu, c.two_primary_twist);
    if (!odd || !two_primary_oracle(*odd)) return "mu is not 2-primary";
    if (!(s_vector_of(c.mu, d3) == c.s_vector)) return "S-vector mismatch";
    if (classify(c.s_vector) != c.group) return "Galois class mismatch";
    if (c.group != GaloisClass::H8) return "Galois group is not H8";
    if (check_normal_over_q(c) != c.rho_sign || c.rho_sign != -1) return "rho sign mismatch";
    std::optional<bool> real;
    if (c.d > 0) real = total_sign(c.mu) == 1;
    if (real != c.totally_real) return "total reality flag mismatch";
    if (c.unique != all_prime_discriminants(c.factorization)) return "uniqueness flag mismatch";
    if (!odd_support_ok(c.mu, c.d)) return "norm of mu has odd support outside d";
  } catch (const Error& e) {
    return std::string("verification raised: ") + e.what();
  }
  return std::nullopt;
}

std::optional<TwistResult> find_discriminant_twist(std::int64_t d,
                                                   const MultiquadElement::Base& k_base,
                                                   const MultiquadElement& x,
                                                   const MultiquadElement& y) {
  const MultiquadElement ratio = y.embed(k_base) / x.embed(k_base);
  auto deltas = discriminant_divisors(d);
  std::stable_sort(deltas.begin(), deltas.end(), [](std::int64_t a, std::int64_t b) {
    const std::int64_t aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
    return aa != bb ? aa < bb : a > b;
  });
  for (std::int64_t delta : deltas) {
    if (is_square(ratio * Rational(delta))) {
      TwistResult r;
      r.delta = delta;
      r.delta_is_square_in_k = is_square(MultiquadElement::rational(k_base, Rational(delta)));
      return r;
    }
  }
  return std::nullopt;
}

TwistResult uniqueness_twist(const ExtensionCertificate& m1, const ExtensionCertificate& m2) {
  if (m1.factorization != m2.factorization)
    fail(ErrorKind::InvalidInput, "certificates belong to different factorizations");
  auto r = find_discriminant_twist(m1.d, m1.k_base(), m1.mu, m2.mu);
  if (!r) fail(ErrorKind::Internal, "no discriminant twist relates the two generators");
  return *r;
}

std::string to_text(const ExtensionCertificate& c) {
  auto triple = [](const std::array<Int, 3>& t) {
    return "(" + t[0].get_str() + ", " + t[1].get_str() + ", " + t[2].get_str() + ")";
  };
  auto sign = [](int s) { return s > 0 ? std::string("+1") : std::string("-1"); };
  std::ostringstream os;
  os << "d = " << c.d << " = " << c.factorization[0] << " · " << c.factorization[1] << " · "
     << c.factorization[2] << "\n";
  os << "  roles (d1, d2, d3) = (" << c.roles[0] << ", " << c.roles[1] << ", " << c.roles[2] << ")\n";
  os << "  a = " << c.a << "\n";
  os << "  x = " << triple(c.x) << "  y = " << triple(c.y) << "  z = " << triple(c.z) << "\n";
  os << "  r = " << to_string(c.generator.r) << "\n";
  os << "  mu = " << c.mu.to_string() << "\n";
  os << "  2-primary twist = " << c.two_primary_twist;
  if (c.infinity_twist != 1) os << ", infinity twist = " << c.infinity_twist;
  os << "\n";
  os << "  S = (" << sign(c.s_vector.s_sigma) << ", " << sign(c.s_vector.s_tau) << ", "
     << sign(c.s_vector.s_sigmatau) << ")  group = " << to_string(c.group)
     << "  rho sign = " << sign(c.rho_sign) << "\n";
  if (c.totally_real) os << "  totally real: " << (*c.totally_real ? "yes" : "no") << "\n";
  if (c.unique) os << "  note: all parts are prime discriminants; this extension is unique\n";
  return os.str();
}

}  // namespace h8ext
