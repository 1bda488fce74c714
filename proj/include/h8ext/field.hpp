#pragma once

// Exact arithmetic in multiquadratic fields Q(sqrt r_1, ..., sqrt r_k).
//
// An element is stored as 2^k rational coordinates; coordinate S (a bitmask)
// multiplies sqrt(prod_{i in S} r_i). The radicands must be multiplicatively
// independent modulo squares; in this library they are always pairwise
// coprime fundamental discriminants. Biquadratic fields (k = 2) carry the
// H8 generator; the triquadratic K = Q(sqrt d1, sqrt d2, sqrt d3) is used for
// Kummer comparisons.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h8ext/integer.hpp"

namespace h8ext {

class MultiquadElement {
 public:
  using Base = std::vector<std::int64_t>;

  MultiquadElement() = default;
  explicit MultiquadElement(Base base);  // zero
  MultiquadElement(Base base, std::vector<Rational> coords);

  static MultiquadElement rational(Base base, const Rational& q);
  /// sqrt(base[index])
  static MultiquadElement sqrt_of(Base base, std::size_t index);

  const Base& base() const noexcept { return base_; }
  std::size_t degree() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& coord(std::size_t mask) const { return coords_.at(mask); }
  Rational& coord(std::size_t mask) { return coords_.at(mask); }
  /// Product of the radicands in `mask`.
  std::int64_t radicand(std::size_t mask) const;

  bool is_zero() const;
  bool is_rational() const;

  MultiquadElement operator-() const;
  MultiquadElement& operator+=(const MultiquadElement& rhs);
  MultiquadElement& operator-=(const MultiquadElement& rhs);
  MultiquadElement& operator*=(const MultiquadElement& rhs);
  MultiquadElement& operator*=(const Rational& rhs);
  MultiquadElement& operator/=(const MultiquadElement& rhs);

  friend MultiquadElement operator+(MultiquadElement a, const MultiquadElement& b) { return a += b; }
  friend MultiquadElement operator-(MultiquadElement a, const MultiquadElement& b) { return a -= b; }
  friend MultiquadElement operator*(MultiquadElement a, const MultiquadElement& b) { return a *= b; }
  friend MultiquadElement operator*(MultiquadElement a, const Rational& q) { return a *= q; }
  friend MultiquadElement operator*(const Rational& q, MultiquadElement a) { return a *= q; }
  friend MultiquadElement operator/(MultiquadElement a, const MultiquadElement& b) { return a /= b; }
  friend bool operator==(const MultiquadElement& a, const MultiquadElement& b);

  /// Throws DivisionByZero for 0.
  MultiquadElement inverse() const;

  /// The automorphism sqrt r_i -> signs[i] sqrt r_i.
  MultiquadElement conjugate(const std::vector<int>& signs) const;

  /// Norm down to Q.
  Rational norm() const;

  /// The same element over a larger base; every radicand of base() must
  /// appear in `wider`.
  MultiquadElement embed(const Base& wider) const;

  /// x = A + B sqrt(r_last) with A, B over the first k-1 radicands.
  std::pair<MultiquadElement, MultiquadElement> split_top() const;
  static MultiquadElement join_top(const MultiquadElement& a, const MultiquadElement& b,
                                   std::int64_t top);

  /// "6 + (3/2)√8 + √5 + (1/2)√40"
  std::string to_string() const;

 private:
  void require_same_base(const MultiquadElement& other) const;

  Base base_;
  std::vector<Rational> coords_{Rational(0)};
};

/// Elements of Q(sqrt m, sqrt n) with coordinates (c0, c1, c2, c3) on
/// 1, sqrt m, sqrt n, sqrt(mn).
using BiquadElement = MultiquadElement;

BiquadElement biquad(std::int64_t m, std::int64_t n, const Rational& c0, const Rational& c1,
                     const Rational& c2, const Rational& c3);

/// The three nontrivial automorphisms of Q(sqrt m, sqrt n):
/// sigma flips sqrt n, tau flips sqrt m, sigma*tau flips both.
enum class GaloisAction { Sigma, Tau, SigmaTau };

const char* to_string(GaloisAction g) noexcept;
std::vector<int> signs_of(GaloisAction g);
BiquadElement apply(GaloisAction g, const BiquadElement& x);

/// A square root in the same field, if one exists. Exact.
std::optional<MultiquadElement> sqrt(const MultiquadElement& x);
inline bool is_square(const MultiquadElement& x) { return sqrt(x).has_value(); }

/// x / y is a nonzero square.
bool square_class_equal(const MultiquadElement& x, const MultiquadElement& y);

/// Sign of x under the real embedding sqrt r_i -> signs[i] * |sqrt r_i|.
/// All radicands must be positive.
int real_sign(const MultiquadElement& x, const std::vector<int>& signs);

/// +1 if positive under every real embedding, -1 if negative under all, 0 if mixed.
int total_sign(const MultiquadElement& x);

/// Coordinates on the integral basis prod_{i in S} w_i, w_i = (u_i + sqrt r_i)/2
/// with u_i = r_i mod 2, of the ring of integers (radicands: pairwise coprime
/// fundamental discriminants). Empty when x is not integral.
std::optional<std::vector<Int>> integral_coordinates(const MultiquadElement& x);

/// Integral basis element prod_{i in mask} w_i.
MultiquadElement integral_basis_element(const MultiquadElement::Base& base, std::size_t mask);

/// Largest positive integer dividing x in the ring of integers.
Int content(const MultiquadElement& x);

}  // namespace h8ext
