#include "doctest.h"
#include "h8ext/table2.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace h8ext;

TEST_CASE("nine rows") {
  const auto& rows = table2_rows();
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    INFO(r.d);
    CHECK(oracle::fundamental(r.d));
    CHECK(r.parts[0] * r.parts[1] * r.parts[2] == r.d);
    CHECK(oracle::h8_triples(r.d).size() >= 1);
  }
}

TEST_CASE("the row for 520") {
  const auto& rows = table2_rows();
  const auto it = std::find_if(rows.begin(), rows.end(), [](const Table2Row& r) { return r.d == 520; });
  REQUIRE(it != rows.end());
  // (3 sqrt 2 + sqrt 5)(1 + sqrt 2) = 6 + sqrt 5 + 3 sqrt 2 + sqrt 10, written over sqrt 8
  const MultiquadElement expected({5, 8}, {Rational(6), Rational(1), Rational(3, 2), Rational(1, 2)});
  CHECK(table2_mu(*it).embed({5, 8, 13}) == expected.embed({5, 8, 13}));
}

TEST_CASE("every row matches the pipeline up to a discriminant twist") {
  for (const auto& r : table2_rows()) {
    INFO(r.d, " ", r.text);
    const auto res = check_table2_row(r);
    CHECK(res.factorization_ok);
    REQUIRE(res.certificate.has_value());
    REQUIRE(res.twist.has_value());
    CHECK(r.d % res.twist->delta == 0);
    if (res.unique_required) CHECK(res.twist->delta_is_square_in_k);
    CHECK(res.pass);
    // the printed mu is itself 2-primary up to the twist and normal over Q
    CHECK(is_square(table2_mu(r).embed(res.certificate->k_base()) * Rational(res.twist->delta) *
                    res.certificate->mu.embed(res.certificate->k_base())));
  }
}
