#include "h8ext/field.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "h8ext/error.hpp"

namespace h8ext {

namespace {

std::size_t dimension(std::size_t generators) { return std::size_t{1} << generators; }

std::string radical_text(std::int64_t r) {
  if (r < 0) return "√(" + std::to_string(r) + ")";
  return "√" + std::to_string(r);
}

}  // namespace

MultiquadElement::MultiquadElement(Base base)
    : base_(std::move(base)), coords_(dimension(base_.size()), Rational(0)) {}

MultiquadElement::MultiquadElement(Base base, std::vector<Rational> coords)
    : base_(std::move(base)), coords_(std::move(coords)) {
  if (coords_.size() != dimension(base_.size()))
    fail(ErrorKind::InvalidInput, "coordinate count does not match the base");
  for (auto& c : coords_) c.canonicalize();
}

MultiquadElement MultiquadElement::rational(Base base, const Rational& q) {
  MultiquadElement x(std::move(base));
  x.coords_[0] = q;
  return x;
}

MultiquadElement MultiquadElement::sqrt_of(Base base, std::size_t index) {
  if (index >= base.size()) fail(ErrorKind::InvalidInput, "radicand index out of range");
  MultiquadElement x(std::move(base));
  x.coords_[std::size_t{1} << index] = 1;
  return x;
}

std::int64_t MultiquadElement::radicand(std::size_t mask) const {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (mask >> i & 1) r *= base_[i];
  return r;
}

bool MultiquadElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool MultiquadElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

void MultiquadElement::require_same_base(const MultiquadElement& other) const {
  if (base_ != other.base_) fail(ErrorKind::BaseMismatch, "elements live over different bases");
}

MultiquadElement MultiquadElement::operator-() const {
  MultiquadElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

MultiquadElement& MultiquadElement::operator+=(const MultiquadElement& rhs) {
  require_same_base(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

MultiquadElement& MultiquadElement::operator-=(const MultiquadElement& rhs) {
  require_same_base(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

MultiquadElement& MultiquadElement::operator*=(const MultiquadElement& rhs) {
  require_same_base(rhs);
  const std::size_t n = coords_.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    if (sgn(coords_[s]) == 0) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(rhs.coords_[t]) == 0) continue;
      // sqrt(r_S) sqrt(r_T) = r_{S&T} sqrt(r_{S^T})
      out[s ^ t] += coords_[s] * rhs.coords_[t] * radicand(s & t);
    }
  }
  coords_ = std::move(out);
  return *this;
}

MultiquadElement& MultiquadElement::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

MultiquadElement& MultiquadElement::operator/=(const MultiquadElement& rhs) {
  require_same_base(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const MultiquadElement& a, const MultiquadElement& b) {
  return a.base_ == b.base_ && a.coords_ == b.coords_;
}

std::pair<MultiquadElement, MultiquadElement> MultiquadElement::split_top() const {
  if (base_.empty()) fail(ErrorKind::InvalidInput, "split_top on a rational");
  Base sub(base_.begin(), base_.end() - 1);
  const std::size_t half = coords_.size() / 2;
  MultiquadElement a(sub), b(sub);
  for (std::size_t i = 0; i < half; ++i) {
    a.coords_[i] = coords_[i];
    b.coords_[i] = coords_[i + half];
  }
  return {std::move(a), std::move(b)};
}

MultiquadElement MultiquadElement::join_top(const MultiquadElement& a, const MultiquadElement& b,
                                            std::int64_t top) {
  a.require_same_base(b);
  Base base = a.base_;
  base.push_back(top);
  MultiquadElement out(base);
  const std::size_t half = a.coords_.size();
  for (std::size_t i = 0; i < half; ++i) {
    out.coords_[i] = a.coords_[i];
    out.coords_[i + half] = b.coords_[i];
  }
  return out;
}

MultiquadElement MultiquadElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (base_.empty()) return rational(base_, 1 / coords_[0]);
  // (A + B sqrt n)^-1 = (A - B sqrt n) / (A^2 - n B^2)
  auto [a, b] = split_top();
  const std::int64_t n = base_.back();
  MultiquadElement norm = a * a - b * b * Rational(n);
  MultiquadElement inv = norm.inverse();
  return join_top(a * inv, -(b * inv), n);
}

MultiquadElement MultiquadElement::conjugate(const std::vector<int>& signs) const {
  if (signs.size() != base_.size())
    fail(ErrorKind::InvalidInput, "automorphism sign vector has the wrong length");
  MultiquadElement out = *this;
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    int sign = 1;
    for (std::size_t i = 0; i < base_.size(); ++i)
      if (s >> i & 1) sign *= signs[i];
    if (sign < 0) out.coords_[s] = -out.coords_[s];
  }
  return out;
}

Rational MultiquadElement::norm() const {
  if (base_.empty()) return coords_[0];
  auto [a, b] = split_top();
  return (a * a - b * b * Rational(base_.back())).norm();
}

MultiquadElement MultiquadElement::embed(const Base& wider) const {
  std::vector<std::size_t> where(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    auto it = std::find(wider.begin(), wider.end(), base_[i]);
    if (it == wider.end())
      fail(ErrorKind::BaseMismatch, "radicand " + std::to_string(base_[i]) + " missing from target base");
    where[i] = static_cast<std::size_t>(it - wider.begin());
  }
  MultiquadElement out(wider);
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < base_.size(); ++i)
      if (s >> i & 1) t |= std::size_t{1} << where[i];
    out.coords_[t] = coords_[s];
  }
  return out;
}

std::string MultiquadElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    Rational c = coords_[s];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (s == 0) {
      os << h8ext::to_string(c);
      continue;
    }
    if (c.get_den() != 1)
      os << "(" << h8ext::to_string(c) << ")";
    else if (c != 1)
      os << h8ext::to_string(c);
    os << radical_text(radicand(s));
  }
  if (first) os << "0";
  return os.str();
}

BiquadElement biquad(std::int64_t m, std::int64_t n, const Rational& c0, const Rational& c1,
                     const Rational& c2, const Rational& c3) {
  return BiquadElement({m, n}, {c0, c1, c2, c3});
}

const char* to_string(GaloisAction g) noexcept {
  switch (g) {
    case GaloisAction::Sigma: return "sigma";
    case GaloisAction::Tau: return "tau";
    case GaloisAction::SigmaTau: return "sigma*tau";
  }
  return "?";
}

std::vector<int> signs_of(GaloisAction g) {
  switch (g) {
    case GaloisAction::Sigma: return {1, -1};
    case GaloisAction::Tau: return {-1, 1};
    case GaloisAction::SigmaTau: return {-1, -1};
  }
  return {1, 1};
}

BiquadElement apply(GaloisAction g, const BiquadElement& x) {
  if (x.base().size() != 2) fail(ErrorKind::InvalidInput, "Galois action expects a biquadratic element");
  return x.conjugate(signs_of(g));
}

std::optional<MultiquadElement> sqrt(const MultiquadElement& x) {
  const auto& base = x.base();
  if (base.empty()) {
    auto r = rational_sqrt(x.coord(0));
    if (!r) return std::nullopt;
    return MultiquadElement::rational(base, *r);
  }
  if (x.is_zero()) return x;
  const std::int64_t n = base.back();
  auto [a, b] = x.split_top();
  if (b.is_zero()) {
    if (auto p = sqrt(a)) return MultiquadElement::join_top(*p, MultiquadElement(p->base()), n);
    // A = n Q^2 gives (Q sqrt n)^2
    if (auto q = sqrt(a * (Rational(1) / Rational(n)))) return MultiquadElement::join_top(MultiquadElement(q->base()), *q, n);
    return std::nullopt;
  }
  // (P + Q sqrt n)^2 = (P^2 + n Q^2) + 2PQ sqrt n, and A^2 - n B^2 = (P^2 - n Q^2)^2
  auto s = sqrt(a * a - b * b * Rational(n));
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    MultiquadElement half = (a + (*s) * Rational(sign)) * Rational(1, 2);
    if (half.is_zero()) continue;
    auto p = sqrt(half);
    if (!p) continue;
    MultiquadElement q = b / ((*p) * Rational(2));
    MultiquadElement root = MultiquadElement::join_top(*p, q, n);
    if (root * root == x) return root;
  }
  return std::nullopt;
}

bool square_class_equal(const MultiquadElement& x, const MultiquadElement& y) {
  if (x.is_zero() || y.is_zero()) fail(ErrorKind::InvalidInput, "square classes of 0 are undefined");
  return is_square(x / y);
}

int real_sign(const MultiquadElement& x, const std::vector<int>& signs) {
  const auto& base = x.base();
  if (signs.size() != base.size()) fail(ErrorKind::InvalidInput, "embedding sign vector has the wrong length");
  if (base.empty()) return sgn(x.coord(0));
  const std::int64_t n = base.back();
  if (n <= 0) fail(ErrorKind::InvalidInput, "real embedding needs positive radicands");
  auto [a, b] = x.split_top();
  std::vector<int> sub(signs.begin(), signs.end() - 1);
  const int sa = real_sign(a, sub);
  const int sb = real_sign(b, sub) * signs.back();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare A^2 with n B^2
  const int cmp = real_sign(a * a - b * b * Rational(n), sub);
  return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

int total_sign(const MultiquadElement& x) {
  const std::size_t k = x.base().size();
  int seen = 0;
  for (std::size_t e = 0; e < dimension(k); ++e) {
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i) signs[i] = (e >> i & 1) ? -1 : 1;
    const int s = real_sign(x, signs);
    if (s == 0) return 0;
    if (seen == 0) seen = s;
    else if (seen != s) return 0;
  }
  return seen;
}

namespace {

Int offset_of(std::int64_t r) { return Int(r % 2 == 0 ? 0 : 1); }

}  // namespace

std::optional<std::vector<Int>> integral_coordinates(const MultiquadElement& x) {
  const auto& base = x.base();
  const std::size_t n = x.degree();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // supersets first
  std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<Rational> e(n, Rational(0));
  for (std::size_t t : order) {
    // c_T = sum_{S >= T} e_S 2^-|S| prod_{i in S\T} u_i
    Rational rest = x.coord(t);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == t || (s & t) != t) continue;
      Rational term = e[s];
      for (std::size_t i = 0; i < base.size(); ++i)
        if ((s & ~t) >> i & 1) term *= offset_of(base[i]);
      term /= Rational(Int(1) << std::popcount(s));
      rest -= term;
    }
    e[t] = rest * Rational(Int(1) << std::popcount(t));
  }
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i].canonicalize();
    if (e[i].get_den() != 1) return std::nullopt;
    out[i] = e[i].get_num();
  }
  return out;
}

MultiquadElement integral_basis_element(const MultiquadElement::Base& base, std::size_t mask) {
  MultiquadElement out = MultiquadElement::rational(base, 1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    MultiquadElement w = MultiquadElement::sqrt_of(base, i);
    w.coord(0) = offset_of(base[i]);
    out *= w * Rational(1, 2);
  }
  return out;
}

Int content(const MultiquadElement& x) {
  auto e = integral_coordinates(x);
  if (!e) fail(ErrorKind::InvalidInput, "content of a non-integral element");
  Int g = 0;
  for (const auto& v : *e) g = gcd(g, v);
  return g;
}

}  // namespace h8ext
