#pragma once

// Ternary quadratic equations c1 U^2 + c2 V^2 + c3 W^2 = 0, the auxiliary
// parameter a, and the system
//   (I)   d1 X1^2 - d2 X2^2 = -a d3 X3^2
//   (II)  Y1^2 - d1 Y2^2    =  a Y3^2
//   (III) Z1^2 - d2 Z2^2    = -a Z3^2

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "h8ext/integer.hpp"

namespace h8ext {

struct ConicEquation {
  Int c1, c2, c3;

  Int evaluate(const Int& u, const Int& v, const Int& w) const {
    return c1 * u * u + c2 * v * v + c3 * w * w;
  }
  std::string to_string() const;
  friend bool operator==(const ConicEquation&, const ConicEquation&) = default;
};

struct ConicSolution {
  Int u, v, w;
  ConicEquation equation;

  /// Exact check: nontrivial, primitive and on the conic.
  bool verify() const;
  std::array<Int, 3> triple() const { return {u, v, w}; }
};

/// Equivalent equation with squarefree, pairwise coprime coefficients and the
/// rational substitution back: (U, V, W) = (scale[0] U', scale[1] V', scale[2] W').
struct NormalizedConic {
  ConicEquation equation;
  std::array<Rational, 3> scale;
};
NormalizedConic normalize(const ConicEquation& eq);

/// The place where the equation has no nontrivial local solution ("infinity"
/// or an odd prime), if any. The prime 2 follows from the product formula.
std::optional<std::string> local_obstruction(const ConicEquation& eq);

struct ConicOptions {
  /// Half-width of the small deterministic search tried before descent;
  /// 0 goes straight to descent.
  std::int64_t small_box = 24;
  bool require_nonzero_last = false;
};

/// Smallest nonnegative solution in the box |u|,|v|,|w| <= bound, ordered by
/// max-norm then lexicographically.
std::optional<ConicSolution> box_search(const ConicEquation& eq, std::int64_t bound,
                                        bool require_nonzero_last = false);

/// Legendre descent. Throws LocallyUnsolvable with the obstructing place.
ConicSolution solve_conic_descent(const ConicEquation& eq);

/// Another solution with w != 0, obtained by reflecting through a line.
ConicSolution with_nonzero_last(const ConicSolution& s);

/// A solution with odd last coordinate reached by reflecting s through the
/// points of a small box, if any.
std::optional<ConicSolution> with_odd_last(const ConicSolution& s, int radius = 3);

/// Deterministic primitive solution. Throws LocallyUnsolvable or
/// InvalidInput (zero coefficient).
ConicSolution solve_conic(const ConicEquation& eq, const ConicOptions& options = {});

/// Reason the candidate fails conditions (1)-(4) of the parameter search, if it
/// does. Requires d2 > 0.
std::optional<std::string> check_parameter_a(std::int64_t d1, std::int64_t d2, std::int64_t a);

/// a = 1 or the least odd prime a <= max_a, coprime to `avoid`, meeting
/// (1)-(4). Throws SearchExhausted.
std::int64_t find_parameter_a(std::int64_t d1, std::int64_t d2, std::int64_t max_a = 100000,
                              std::int64_t avoid = 1);

struct ConicSystem {
  std::int64_t d1 = 0, d2 = 0, d3 = 0, a = 0;
  ConicSolution x, y, z;  // solutions of (I), (II), (III)
};

ConicEquation equation_one(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a);
ConicEquation equation_two(std::int64_t d1, std::int64_t a);
ConicEquation equation_three(std::int64_t d2, std::int64_t a);

/// Solves (I)-(III); every returned solution has a nonzero last coordinate.
ConicSystem solve_system(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t a,
                         const ConicOptions& options = {});

}  // namespace h8ext
