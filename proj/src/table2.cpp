#include "h8ext/table2.hpp"

#include <algorithm>

#include "h8ext/error.hpp"
#include "h8ext/symbols.hpp"

namespace h8ext {

const std::vector<Table2Row>& table2_rows() {
  using F = std::vector<Table2Term>;
  static const std::vector<Table2Row> rows{
      {3848, {8, 13, 37}, {F{{12, 2}, {5, 13}}, F{{18, 1}, {-5, 13}}}, "(12√2+5√13)(18−5√13)"},
      {2120, {5, 8, 53}, {F{{3, 5}, {7, 2}}, F{{1, 1}, {1, 2}}}, "(3√5+7√2)(1+√2)"},
      {1480, {5, 8, 37}, {F{{3, 5}, {2, 2}}, F{{2, 1}, {-1, 5}}}, "(3√5+2√2)(2−√5)"},
      {520, {5, 8, 13}, {F{{3, 2}, {1, 5}}, F{{1, 1}, {1, 2}}}, "(3√2+√5)(1+√2)"},
      {-120, {-3, 5, 8}, {F{{2, 2}, {1, 5}}, F{{2, 1}, {1, 5}}}, "(2√2+√5)(2+√5)"},
      {-255, {-3, 5, 17}, {F{{1, 5}, {2, -3}}, F{{2, 1}, {1, 5}}}, "(√5+2√−3)(2+√5)"},
      {-420, {-4, 5, 21}, {F{{4, -1}, {-1, 5}}, F{{2, 1}, {1, 5}}}, "(4i−√5)(2+√5)"},
      {-455, {-7, 5, 13}, {F{{2, 13}, {-3, 5}}, F{{2, 1}, {1, 5}}}, "(2√13−3√5)(2+√5)"},
      {-520, {-8, 5, 13}, {F{{2, -2}, {1, 5}}, F{{2, 1}, {1, 5}}}, "(2√−2+√5)(2+√5)"},
  };
  return rows;
}

namespace {

// sqrt(s) as an element over `base`, through a radicand in the square class of s.
MultiquadElement root_in(const MultiquadElement::Base& base, std::int64_t s) {
  if (s == 1) return MultiquadElement::rational(base, 1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Rational ratio = Rational(base[i]) / Rational(s);
    if (auto q = rational_sqrt(ratio)) return MultiquadElement::sqrt_of(base, i) * (Rational(1) / *q);
  }
  fail(ErrorKind::BaseMismatch, "sqrt(" + std::to_string(s) + ") is not a basis radical");
}

}  // namespace

MultiquadElement table2_mu(const Table2Row& row) {
  const MultiquadElement::Base base(row.parts.begin(), row.parts.end());
  MultiquadElement mu = MultiquadElement::rational(base, 1);
  for (const auto& factor : row.factors) {
    MultiquadElement sum(base);
    for (const auto& t : factor) sum += root_in(base, t.radicand) * Rational(t.coef);
    mu *= sum;
  }
  return mu;
}

Table2Result check_table2_row(const Table2Row& row, const PipelineOptions& options) {
  Table2Result r;
  r.row = &row;
  const auto [d1, d2, d3] = row.parts;
  const H8Check check = check_h8(d1, d2, d3, row.d);
  r.factorization_ok = check.ok();
  if (!check.ok()) {
    r.detail = "not an H8-factorization: " + check.failure->to_string();
    return r;
  }
  r.unique_required = std::all_of(row.parts.begin(), row.parts.end(), is_prime_discriminant);
  r.certificate = construct_h8(*check.factorization, options);
  const MultiquadElement::Base base(row.parts.begin(), row.parts.end());
  r.twist = find_discriminant_twist(row.d, base, table2_mu(row), r.certificate->mu);
  if (!r.twist) {
    r.detail = "no discriminant twist relates the printed and computed mu";
    return r;
  }
  if (r.unique_required && !r.twist->delta_is_square_in_k) {
    r.detail = "twist " + std::to_string(r.twist->delta) + " is not a square in K";
    return r;
  }
  r.pass = true;
  r.detail = r.twist->delta == 1 ? "same square class"
                                 : "square class up to delta = " + std::to_string(r.twist->delta);
  return r;
}

}  // namespace h8ext
