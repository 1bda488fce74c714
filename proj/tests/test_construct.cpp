#include "doctest.h"
#include "h8ext/construct.hpp"
#include "h8ext/error.hpp"
#include "h8ext/symbols.hpp"
#include "oracles.hpp"

using namespace h8ext;

namespace {

std::vector<ExtensionCertificate> all_certificates(std::int64_t bound) {
  std::vector<ExtensionCertificate> out;
  for (std::int64_t d = -bound; d <= bound; ++d) {
    if (!oracle::fundamental(d)) continue;
    for (const auto& f : enumerate_h8(d)) out.push_back(construct_h8(f));
  }
  return out;
}

const std::vector<ExtensionCertificate>& certificates() {
  static const auto certs = all_certificates(2000);
  return certs;
}

ExtensionCertificate cert_520() { return construct_h8(is_h8_factorization(5, 8, 13)); }

// squarefree kernel of a discriminant
std::int64_t kernel(std::int64_t m) { return m % 4 == 0 ? m / 4 : m; }

std::vector<std::int64_t> admissible_a(std::int64_t d1, std::int64_t d2, std::int64_t d, int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < 10000 && static_cast<int>(out.size()) < count; a += 2) {
    if (a > 1 && (!oracle::prime(a) || d % a == 0)) continue;
    if (!check_parameter_a(d1, d2, a)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("build_mu for d = 520") {
  const std::array<Int, 3> x{2, 3, 2}, y{1, 0, 1}, z{2, 1, 2};
  const auto g = build_mu(5, 8, 13, 1, x, y, z);
  CHECK(g.r == 4);
  // (3 sqrt 2 + sqrt 5)(1 + sqrt 2) = 6 + 3 sqrt 2 + sqrt 5 + sqrt 10
  CHECK(g.mu == biquad(5, 8, 6, 1, Rational(3, 2), Rational(1, 2)));
  CHECK(g.gamma == MultiquadElement::rational({5, 8}, 1));
  CHECK(g.beta * g.gamma * g.delta == g.mu * g.r);
  CHECK(content(g.mu) == 1);
}

TEST_CASE("compute_alpha") {
  const auto rational = MultiquadElement::rational({5, 8}, 7);
  const auto a = compute_alpha(rational, GaloisAction::Sigma);
  CHECK(a.value == MultiquadElement::rational({5, 8}, 1));
  CHECK(a.sign == 1);
  const auto mu = cert_520().mu;
  for (auto g : {GaloisAction::Sigma, GaloisAction::Tau, GaloisAction::SigmaTau}) {
    const auto al = compute_alpha(mu, g, 13);
    CHECK(al.sign == -1);
    auto sq = al.value * al.value;
    if (al.times_sqrt_extra) sq *= Rational(13);
    CHECK(sq == mu / apply(g, mu));
    // -alpha gives the same sign
    CHECK(compute_alpha(mu * Rational(9), g, 13).sign == -1);
  }
  // without sqrt 13 in the Kummer field mu^(1 - sigma) is not a square
  try {
    compute_alpha(mu, GaloisAction::Sigma, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonNormal);
  }
}

TEST_CASE("classify") {
  CHECK(classify({-1, -1, -1}) == GaloisClass::H8);
  CHECK(classify({1, 1, 1}) == GaloisClass::Elementary222);
  CHECK(classify({-1, 1, 1}) == GaloisClass::D4);
  CHECK(classify({1, -1, 1}) == GaloisClass::D4);
  CHECK(classify({1, 1, -1}) == GaloisClass::D4);
  CHECK(classify({-1, -1, 1}) == GaloisClass::C2xC4);
  CHECK(classify({1, -1, -1}) == GaloisClass::C2xC4);
  CHECK_THROWS_AS(classify({0, 1, 1}), Error);
  for (auto g : {GaloisClass::Elementary222, GaloisClass::C2xC4, GaloisClass::D4, GaloisClass::H8})
    CHECK(galois_class_from_string(to_string(g)) == g);
}

TEST_CASE("two-primary oracle: small cases") {
  CHECK(two_primary_oracle(MultiquadElement::rational({17, 41}, 1)));
  CHECK_FALSE(two_primary_oracle(MultiquadElement::rational({17, 41}, 3)));
  CHECK(two_primary_oracle(cert_520().mu));
  CHECK_THROWS_AS(two_primary_oracle(MultiquadElement::rational({5, 8}, 2)), Error);
  CHECK_THROWS_AS(two_primary_oracle(MultiquadElement::rational({5, 8}, Rational(1, 3))), Error);
}

TEST_CASE("two-primary oracle on rationals matches ramification in Q(sqrt m, sqrt x)") {
  // for odd rational x, Q(sqrt m)(sqrt x) is unramified above 2 iff x or m x is 1 mod 4 up to squares
  for (std::int64_t m : {5, 13, 17, -3, -7, -15, 21, -4, 8, -8, 12, -24, 28}) {
    for (std::int64_t x = -41; x <= 41; x += 2) {
      const bool expected = oracle::imod(x, 4) == 1 || oracle::imod(kernel(m) * x, 4) == 1;
      CHECK_MESSAGE(two_primary_oracle(MultiquadElement::rational({m}, x)) == expected, m, " ", x);
    }
  }
}

TEST_CASE("odd representative of 2") {
  for (const MultiquadElement::Base& base :
       {MultiquadElement::Base{8, 5}, {5, -8}, {-4, 5}, {12, 5}, {-3, 28}, {5, 13, 24}}) {
    const auto rep = odd_representative_of_two(base);
    REQUIRE(rep.has_value());
    CHECK(square_class_equal(*rep, MultiquadElement::rational(base, 2)));
    CHECK(integral_coordinates(*rep).has_value());
    CHECK(mpz_odd_p(rep->norm().get_num().get_mpz_t()));
  }
  CHECK_FALSE(odd_representative_of_two({5, 13}).has_value());
  CHECK(two_primary_candidates(5, 8) == std::vector<int>{1, -1});
  CHECK(two_primary_candidates(5, 13) == std::vector<int>{1, -1});
  CHECK(two_primary_candidates(-4, 5) == std::vector<int>{1, 2});
}

TEST_CASE("role assignment") {
  CHECK(assign_roles({5, 8, 13}) == std::array<std::int64_t, 3>{5, 8, 13});
  CHECK(assign_roles({-3, 5, 8}) == std::array<std::int64_t, 3>{-3, 8, 5});
  CHECK(assign_roles({-4, 5, 21}) == std::array<std::int64_t, 3>{-4, 5, 21});
  const auto r = assign_roles({28, 5, 13});
  CHECK(r[1] > 0);
  CHECK(r[2] % 2 != 0);
}

TEST_CASE("d = 520 certificate") {
  const auto c = cert_520();
  CHECK(c.a == 1);
  CHECK(c.s_vector == SVector{-1, -1, -1});
  CHECK(c.group == GaloisClass::H8);
  CHECK(c.rho_sign == -1);
  CHECK(c.two_primary_twist == 1);
  CHECK(c.totally_real == std::optional<bool>(true));
  CHECK(c.unique);
  CHECK(c.mu == biquad(5, 8, 6, 1, Rational(3, 2), Rational(1, 2)));
  CHECK_FALSE(verify_certificate(c).has_value());
  CHECK(to_text(c).find("H8") != std::string::npos);
}

TEST_CASE("rho of a rational mu is +1") {
  auto c = cert_520();
  c.mu = MultiquadElement::rational({5, 8}, 3);
  CHECK(check_normal_over_q(c) == 1);
}

TEST_CASE("forced a") {
  const auto f = is_h8_factorization(5, 8, 13);
  PipelineOptions o;
  o.forced_a = 3;
  CHECK_THROWS_AS(construct_h8(f, o), Error);
  const auto as = admissible_a(5, 8, 520, 2);
  REQUIRE(as.size() == 2);
  o.forced_a = as[1];
  const auto c = construct_h8(f, o);
  CHECK(c.a == as[1]);
  CHECK_FALSE(verify_certificate(c).has_value());
}

TEST_CASE("tampered certificates are rejected") {
  const auto good = cert_520();
  auto c = good;
  c.mu.coord(0) += 1;
  CHECK(verify_certificate(c).has_value());
  c = good;
  c.s_vector.s_tau = 1;
  CHECK(verify_certificate(c).has_value());
  c = good;
  c.x[0] += 1;
  CHECK(verify_certificate(c).has_value());
  c = good;
  c.two_primary_twist = -1;
  CHECK(verify_certificate(c).has_value());
  c = good;
  c.unique = false;
  CHECK(verify_certificate(c).has_value());
  c = good;
  c.roles = {8, 5, 13};
  CHECK(verify_certificate(c).has_value());
}

TEST_CASE("every certificate with |d| <= 2000") {
  REQUIRE(certificates().size() > 20);
  for (const auto& c : certificates()) {
    INFO(c.d);
    const auto [d1, d2, d3] = c.roles;
    CHECK_FALSE(verify_certificate(c).has_value());
    CHECK(c.s_vector == SVector{-1, -1, -1});
    CHECK(c.group == GaloisClass::H8);
    CHECK(c.rho_sign == -1);
    CHECK(odd_support_ok(c.mu, c.d));
    CHECK(content(c.generator.mu) == 1);
    CHECK(c.mu == c.generator.mu * Rational(c.two_primary_twist * c.infinity_twist));
    // norm relations in the (d1, d2) coordinates
    const auto& mu = c.mu;
    const MultiquadElement d3e = MultiquadElement::rational(mu.base(), d3);
    CHECK(square_class_equal(mu * apply(GaloisAction::Sigma, mu), d3e));
    CHECK(square_class_equal(mu * apply(GaloisAction::Tau, mu), d3e));
    CHECK(is_square(mu * apply(GaloisAction::SigmaTau, mu)));
    // closed forms built from the unscaled generator
    const auto closed = closed_form_alphas(c);
    const std::array<GaloisAction, 3> actions{GaloisAction::Sigma, GaloisAction::Tau, GaloisAction::SigmaTau};
    for (int i = 0; i < 3; ++i) {
      auto sq = closed[i].value * closed[i].value;
      if (closed[i].times_sqrt_extra) sq *= Rational(d3);
      CHECK(sq == c.generator.mu / apply(actions[i], c.generator.mu));
      CHECK(closed[i].sign == -1);
    }
    CHECK(c.unique == (is_prime_discriminant(d1) && is_prime_discriminant(d2) && is_prime_discriminant(d3)));
    if (c.d > 0) {
      REQUIRE(c.totally_real.has_value());
    } else {
      CHECK_FALSE(c.totally_real.has_value());
    }
  }
}

TEST_CASE("uniqueness twists") {
  const auto c = cert_520();
  const auto same = uniqueness_twist(c, c);
  CHECK(same.delta == 1);
  const auto as = admissible_a(5, 8, 520, 3);
  REQUIRE(as.size() >= 2);
  PipelineOptions o;
  o.forced_a = as[1];
  const auto other = construct_h8(is_h8_factorization(5, 8, 13), o);
  const auto t = uniqueness_twist(c, other);
  CHECK(520 % t.delta == 0);
  CHECK(t.delta_is_square_in_k);
  CHECK(square_class_equal(other.mu.embed(c.k_base()) * Rational(t.delta), c.mu.embed(c.k_base())));
  // -255 = (-3) 5 17: the extension is unique
  const auto u = construct_h8(is_h8_factorization(-3, 5, 17));
  CHECK(u.unique);
  const auto as2 = admissible_a(-3, 5, -255, 2);
  REQUIRE(as2.size() == 2);
  o.forced_a = as2[1];
  const auto u2 = construct_h8(is_h8_factorization(-3, 5, 17), o);
  CHECK(uniqueness_twist(u, u2).delta_is_square_in_k);
  auto mismatch = u2;
  mismatch.factorization = {-3, 5, 8};
  CHECK_THROWS_AS(uniqueness_twist(u, mismatch), Error);
}

TEST_CASE("discriminant twist search") {
  const auto c = cert_520();
  // 5 is a square in K, so the trivial twist already matches
  const auto r = find_discriminant_twist(520, c.k_base(), c.mu, c.mu * Rational(5));
  REQUIRE(r.has_value());
  CHECK(r->delta == 1);
  CHECK(r->delta_is_square_in_k);
  // over Q(sqrt 5, sqrt 8) alone, 13 is the twist
  const MultiquadElement::Base b12{5, 8};
  const auto r2 = find_discriminant_twist(520, b12, c.mu, c.mu * Rational(13));
  REQUIRE(r2.has_value());
  CHECK(r2->delta == 13);
  CHECK_FALSE(r2->delta_is_square_in_k);
  // 3 is no discriminant twist
  CHECK_FALSE(find_discriminant_twist(520, c.k_base(), c.mu, c.mu * Rational(3)).has_value());
}
