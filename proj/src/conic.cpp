#include "h8ext/conic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "h8ext/error.hpp"
#include "h8ext/symbols.hpp"

namespace h8ext {

std::string ConicEquation::to_string() const {
  std::ostringstream os;
  os << c1.get_str() << "·U² " << (sgn(c2) < 0 ? "- " : "+ ") << Int(abs(c2)).get_str() << "·V² "
     << (sgn(c3) < 0 ? "- " : "+ ") << Int(abs(c3)).get_str() << "·W² = 0";
  return os.str();
}

bool ConicSolution::verify() const {
  if (sgn(u) == 0 && sgn(v) == 0 && sgn(w) == 0) return false;
  Int g = gcd(gcd(u, v), w);
  if (g != 1) return false;
  return sgn(equation.evaluate(u, v, w)) == 0;
}

namespace {

void require_nonzero(const ConicEquation& eq) {
  if (sgn(eq.c1) == 0 || sgn(eq.c2) == 0 || sgn(eq.c3) == 0)
    fail(ErrorKind::InvalidInput, "conic coefficients must be nonzero: " + eq.to_string());
}

ConicSolution make_primitive(Int u, Int v, Int w, const ConicEquation& eq) {
  Int g = gcd(gcd(u, v), w);
  if (sgn(g) == 0) fail(ErrorKind::Internal, "trivial conic solution");
  u /= g;
  v /= g;
  w /= g;
  // all coordinates nonnegative (the form is diagonal)
  if (sgn(u) < 0) u = -u;
  if (sgn(v) < 0) v = -v;
  if (sgn(w) < 0) w = -w;
  return ConicSolution{u, v, w, eq};
}

// Solution of the normalized equation mapped back to `eq`.
ConicSolution lift(const std::array<Rational, 3>& xyz, const NormalizedConic& norm,
                   const ConicEquation& eq) {
  std::array<Rational, 3> q;
  for (int i = 0; i < 3; ++i) q[i] = xyz[i] * norm.scale[i];
  Int den = 1;
  for (auto& v : q) {
    v.canonicalize();
    den = lcm(den, v.get_den());
  }
  std::array<Int, 3> out;
  for (int i = 0; i < 3; ++i) {
    Rational t = q[i] * den;
    t.canonicalize();
    out[i] = t.get_num();
  }
  ConicSolution s = make_primitive(out[0], out[1], out[2], eq);
  if (!s.verify()) fail(ErrorKind::Internal, "lifted conic solution does not verify");
  return s;
}

// t with t^2 = a mod p, p prime.
Int sqrt_mod_prime(const Int& a, const Int& p) {
  Int r = a % p;
  if (sgn(r) < 0) r += p;
  if (p == 2 || sgn(r) == 0) return r;
  if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != 1)
    fail(ErrorKind::LocallyUnsolvable, "no square root of " + a.get_str() + " mod " + p.get_str());
  // Tonelli-Shanks
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Int c, x, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

// t with t^2 = a mod |b|, b squarefree, |t| <= |b|/2.
Int sqrt_mod_squarefree(std::int64_t a, std::int64_t b) {
  Int modulus = 1, t = 0;
  for (std::int64_t p64 : prime_divisors(b)) {
    Int p = to_int(p64);
    Int tp = sqrt_mod_prime(to_int(a), p);
    // CRT: t = t mod modulus, t = tp mod p
    Int inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    Int k = ((tp - t) % p) * inv % p;
    if (sgn(k) < 0) k += p;
    t += modulus * k;
    modulus *= p;
  }
  t %= modulus;
  if (2 * t > modulus) t -= modulus;
  return t;
}

// Nontrivial (x, y, z) with x^2 = a y^2 + b z^2; a, b squarefree, nonzero.
std::array<Int, 3> descend(std::int64_t a, std::int64_t b, int depth = 0) {
  if (depth > 200) fail(ErrorKind::Internal, "Legendre descent did not terminate");
  if (a == 1) return {Int(1), Int(1), Int(0)};
  if (b == 1) return {Int(1), Int(0), Int(1)};
  if ((a < 0 ? -a : a) > (b < 0 ? -b : b)) {
    auto [x, y, z] = descend(b, a, depth + 1);
    return {x, z, y};
  }
  if (b == -1) fail(ErrorKind::LocallyUnsolvable, "no real solution");
  const Int t = sqrt_mod_squarefree(a, b);
  const Int k_full = (t * t - to_int(a)) / to_int(b);
  if (sgn(k_full) == 0) fail(ErrorKind::Internal, "square coefficient in descent");
  auto [m, k] = split_square(k_full);
  auto [x1, y1, z1] = descend(a, to_int64(k), depth + 1);
  // (t + sqrt a)(x1 + y1 sqrt a) has norm b (k m z1)^2
  Int x = t * x1 + to_int(a) * y1;
  Int y = x1 + t * y1;
  Int z = k * m * z1;
  Int g = gcd(gcd(x, y), z);
  if (sgn(g) == 0) fail(ErrorKind::Internal, "descent produced the zero vector");
  return {x / g, y / g, z / g};
}

}  // namespace

NormalizedConic normalize(const ConicEquation& eq) {
  require_nonzero(eq);
  std::array<Int, 3> c{eq.c1, eq.c2, eq.c3};
  std::array<Rational, 3> scale{Rational(1), Rational(1), Rational(1)};
  for (int i = 0; i < 3; ++i) {
    auto [root, core] = split_square(c[i]);
    c[i] = core;
    scale[i] /= Rational(root);
  }
  Int g = gcd(gcd(c[0], c[1]), c[2]);
  for (auto& v : c) v /= g;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      Int h = gcd(c[i], c[j]);
      if (h == 1) continue;
      // h | c_i, c_j forces h | W_k: substitute W_k = h W_k'
      c[i] /= h;
      c[j] /= h;
      c[k] *= h;
      scale[k] *= Rational(h);
      changed = true;
    }
  }
  for (auto& s : scale) s.canonicalize();
  return NormalizedConic{ConicEquation{c[0], c[1], c[2]}, scale};
}

std::optional<std::string> local_obstruction(const ConicEquation& eq) {
  const ConicEquation n = normalize(eq).equation;
  const std::array<Int, 3> c{n.c1, n.c2, n.c3};
  if (sgn(c[0]) == sgn(c[1]) && sgn(c[1]) == sgn(c[2])) return std::string("infinity");
  for (int i = 0; i < 3; ++i) {
    const std::int64_t ci = to_int64(c[i]);
    const std::int64_t other = to_int64(-c[(i + 1) % 3] * c[(i + 2) % 3]);
    for (std::int64_t p : prime_divisors(ci)) {
      if (p == 2) continue;
      if (kronecker(other, p) != 1) return "p=" + std::to_string(p);
    }
  }
  return std::nullopt;
}

std::optional<ConicSolution> box_search(const ConicEquation& eq, std::int64_t bound,
                                        bool require_nonzero_last) {
  require_nonzero(eq);
  std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> best;
  for (std::int64_t u = 0; u <= bound; ++u) {
    for (std::int64_t v = 0; v <= bound; ++v) {
      if (u == 0 && v == 0) continue;
      Int rest = -(eq.c1 * u * u + eq.c2 * v * v);
      if (!mpz_divisible_p(rest.get_mpz_t(), eq.c3.get_mpz_t())) continue;
      Int w2 = rest / eq.c3;
      if (sgn(w2) < 0 || !mpz_perfect_square_p(w2.get_mpz_t())) continue;
      Int w;
      mpz_sqrt(w.get_mpz_t(), w2.get_mpz_t());
      if (w > bound) continue;
      const std::int64_t wi = to_int64(w);
      if (require_nonzero_last && wi == 0) continue;
      if (std::gcd(std::gcd(u, v), wi) != 1) continue;
      auto key = std::make_tuple(std::max({u, v, wi}), u, v, wi);
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  auto [m, u, v, w] = *best;
  return ConicSolution{to_int(u), to_int(v), to_int(w), eq};
}

ConicSolution solve_conic_descent(const ConicEquation& eq) {
  if (auto place = local_obstruction(eq))
    fail(ErrorKind::LocallyUnsolvable, eq.to_string() + " has no solution at " + *place);
  const NormalizedConic norm = normalize(eq);
  const ConicEquation& n = norm.equation;
  // (c1 U)^2 = (-c1 c2) V^2 + (-c1 c3) W^2
  const std::int64_t a = to_int64(-n.c1 * n.c2);
  const std::int64_t b = to_int64(-n.c1 * n.c3);
  auto [x, y, z] = descend(a, b);
  std::array<Rational, 3> xyz{Rational(x) / Rational(n.c1), Rational(y), Rational(z)};
  xyz[0].canonicalize();
  return lift(xyz, norm, eq);
}

ConicSolution with_nonzero_last(const ConicSolution& s) {
  if (sgn(s.w) != 0) return s;
  const ConicEquation& eq = s.equation;
  const std::array<std::array<int, 3>, 7> directions{{
      {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 0, 2}, {0, 1, 2}, {1, 2, 1}}};
  for (const auto& d : directions) {
    // P' = Q(D) P - 2 B(P, D) D is the second intersection of the line PD
    Int qd = eq.evaluate(d[0], d[1], d[2]);
    if (sgn(qd) == 0) continue;
    Int bpd = eq.c1 * s.u * d[0] + eq.c2 * s.v * d[1] + eq.c3 * s.w * d[2];
    Int u = qd * s.u - 2 * bpd * d[0];
    Int v = qd * s.v - 2 * bpd * d[1];
    Int w = qd * s.w - 2 * bpd * d[2];
    if (sgn(w) == 0) continue;
    ConicSolution out = make_primitive(u, v, w, eq);
    if (out.verify()) return out;
  }
  fail(ErrorKind::Internal, "could not move the solution off W = 0");
}

std::optional<ConicSolution> with_odd_last(const ConicSolution& s, int radius) {
  if (mpz_odd_p(s.w.get_mpz_t())) return s;
  const ConicEquation& eq = s.equation;
  std::optional<ConicSolution> best;
  auto size = [](const ConicSolution& t) { return std::max({abs(t.u), abs(t.v), abs(t.w)}); };
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      for (int c = -radius; c <= radius; ++c) {
        Int qd = eq.evaluate(a, b, c);
        if (sgn(qd) == 0) continue;
        Int bpd = eq.c1 * s.u * a + eq.c2 * s.v * b + eq.c3 * s.w * c;
        Int u = qd * s.u - 2 * bpd * a;
        Int v = qd * s.v - 2 * bpd * b;
        Int w = qd * s.w - 2 * bpd * c;
        if (sgn(w) == 0) continue;
        ConicSolution out = make_primitive(u, v, w, eq);
        if (!mpz_odd_p(out.w.get_mpz_t()) || !out.verify()) continue;
        if (!best || size(out) < size(*best)) best = out;
      }
  return best;
}

ConicSolution solve_conic(const ConicEquation& eq, const ConicOptions& options) {
  require_nonzero(eq);
  if (options.small_box > 0) {
    if (auto s = box_search(eq, options.small_box, options.require_nonzero_last)) return *s;
  }
  ConicSolution s = solve_conic_descent(eq);
  if (options.require_nonzero_last) s = with_nonzero_last(s);
  return s;
}

std::optional<std::string> check_parameter_a(std::int64_t d1, std::int64_t d2, std::int64_t a) {
  if (d2 <= 0) fail(ErrorKind::InvalidInput, "parameter search needs d2 > 0");
  if (a == 0) return "a must be nonzero";
  if (a != 1 && (a % 2 == 0 || !is_squarefree(a))) return "a must be odd and squarefree";
  if (d1 < 0 && a < 0) return "condition (1): a > 0 is required when d1 < 0";
  for (std::int64_t part : factor_discriminant(d1).values())
    if (kronecker(part, a) != 1)
      return "condition (3): (" + std::to_string(part) + "/" + std::to_string(a) + ") = -1";
  for (std::int64_t part : factor_discriminant(d2).values()) {
    const int want = part < 0 ? -1 : 1;
    if (kronecker(part, a) != want)
      return "condition (4): (" + std::to_string(part) + "/" + std::to_string(a) +
             ") != sign(" + std::to_string(part) + ")";
  }
  // implied by (3) and (4) for d2 > 0
  if (kronecker(d1, a) != 1 || kronecker(d2, a) != 1)
    return "condition (2): (d1/a) = (d2/a) = +1 fails";
  return std::nullopt;
}

std::int64_t find_parameter_a(std::int64_t d1, std::int64_t d2, std::int64_t max_a,
                              std::int64_t avoid) {
  if (d2 <= 0) fail(ErrorKind::InvalidInput, "parameter search needs d2 > 0");
  if (!check_parameter_a(d1, d2, 1)) return 1;
  const std::int64_t blocked = d1 * d2 * (avoid == 0 ? 1 : avoid);
  for (std::int64_t a = 3; a <= max_a; a += 2) {
    if (!is_prime(a) || blocked % a == 0) continue;
    if (!check_parameter_a(d1, d2, a)) return a;
  }
  fail(ErrorKind::SearchExhausted, "no admissible a <= " + std::to_string(max_a) + " for (" +
                                       std::to_string(d1) + ", " + std::to_string(d2) + ")");
}

ConicEquation equation_one(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a) {
  return ConicEquation{to_int(d1), to_int(-d2), to_int(a) * d3};
}

ConicEquation equation_two(std::int64_t d1, std::int64_t a) {
  return ConicEquation{Int(1), to_int(-d1), to_int(-a)};
}

ConicEquation equation_three(std::int64_t d2, std::int64_t a) {
  return ConicEquation{Int(1), to_int(-d2), to_int(a)};
}

ConicSystem solve_system(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a,
                         const ConicOptions& options) {
  ConicOptions opts = options;
  opts.require_nonzero_last = true;
  ConicSystem sys;
  sys.d1 = d1;
  sys.d2 = d2;
  sys.d3 = d3;
  sys.a = a;
  sys.x = solve_conic(equation_one(d1, d2, d3, a), opts);
  sys.y = solve_conic(equation_two(d1, a), opts);
  sys.z = solve_conic(equation_three(d2, a), opts);
  for (const ConicSolution* s : {&sys.x, &sys.y, &sys.z})
    if (!s->verify() || sgn(s->w) == 0)
      fail(ErrorKind::Internal, "system solution failed verification");
  return sys;
}

}  // namespace h8ext
