#pragma once

// The nine worked examples of unramified H8-extensions: d, an
// H8-factorization and a generator mu, as printed.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h8ext/construct.hpp"

namespace h8ext {

/// coef * sqrt(radicand); radicand 1 is a rational term, -1 is i.
struct Table2Term {
  std::int64_t coef = 1;
  std::int64_t radicand = 1;
};

struct Table2Row {
  std::int64_t d = 0;
  std::array<std::int64_t, 3> parts{};       // (d1, d2, d3) as printed
  std::vector<std::vector<Table2Term>> factors;  // mu is the product of the sums
  std::string text;                              // e.g. "(3√2+√5)(1+√2)"
};

const std::vector<Table2Row>& table2_rows();

/// The printed mu over the base `parts`.
MultiquadElement table2_mu(const Table2Row& row);

struct Table2Result {
  const Table2Row* row = nullptr;
  bool factorization_ok = false;
  std::optional<ExtensionCertificate> certificate;
  std::optional<TwistResult> twist;  // pipeline mu = delta * printed mu up to K-squares
  bool unique_required = false;      // all parts are prime discriminants
  bool pass = false;
  std::string detail;
};

Table2Result check_table2_row(const Table2Row& row, const PipelineOptions& options = {});

}  // namespace h8ext
