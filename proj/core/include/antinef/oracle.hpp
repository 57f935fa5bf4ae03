#pragma once

#include <array>
#include <map>
#include <vector>

#include "antinef/error.hpp"
#include "antinef/numeric.hpp"

namespace antinef {

/// Exponent pair of a monomial in two variables.
using Exp2 = std::array<int, 2>;

/// Sparse two-variable polynomial, canonical: no zero coefficients; over a
/// prime field the coefficients are the integers 0..p-1.
using Poly = std::map<Exp2, Rat>;

/// Drop zeros (and reduce mod p when p > 0).
Poly poly_normalize(Poly q, long p = 0);
Poly poly_add(const Poly& a, const Poly& b, long p = 0);
Poly poly_mul(const Poly& a, const Poly& b, long p = 0);
/// Total degree, -1 for the zero polynomial.
int poly_degree(const Poly& q);

struct OracleBounds {
  int n_max = 3;
  int deg_max = 12;
  int weight_bound = 4;
};

/// Integral-dependence verdict. Integral certificates re-verify as exact
/// polynomial identities before they are returned; NotIntegral certificates
/// exhibit a monomial valuation (after an invertible coordinate change)
/// with v(y) < v(I). Unknown is the honest third verdict when the bounded
/// searches find nothing.
struct Certificate {
  enum class Verdict { Integral, NotIntegral, Unknown };

  Verdict verdict = Verdict::Unknown;
  long p = 0;  // coefficient field: 0 for the rationals, else the prime

  // Integral: y^n + a_1 y^{n-1} + ... + a_n = 0 with a_s in I^s.
  int degree = 0;
  std::vector<Poly> coefficients;  // a_1 .. a_n

  // NotIntegral: weights (v(x), v(y)) and the coordinate change, acting by
  // x -> m00 x + m01 y, y -> m10 x + m11 y.
  std::array<long, 2> weights{0, 0};
  std::array<std::array<long, 2>, 2> change{{{1, 0}, {0, 1}}};

  OracleBounds bounds;
};

/// Search n <= n_max for a monic equation with a_s in I^s of total degree
/// <= deg_max, by exact linear algebra over the monomial basis. An exact
/// identity is a genuine certificate; no truncation is involved.
/// Errors: BadBounds, Empty (no nonzero generators).
Certificate integral_equation_search(const Poly& y,
                                     const std::vector<Poly>& gens,
                                     const OracleBounds& bounds = {},
                                     long p = 0);

/// Scan monomial valuations with weights in [1, weight_bound]^2 composed
/// with invertible linear coordinate changes (all of GL_2(F_p) when p > 0;
/// integer matrices with entries in [-2, 2] over the rationals), the
/// identity change first. Errors: BadBounds, Empty.
Certificate valuation_witness_search(const Poly& y,
                                     const std::vector<Poly>& gens,
                                     const OracleBounds& bounds = {},
                                     long p = 0);

/// Valuation search first, then equation search; Unknown when both fail.
/// The two searches can never both succeed on one input.
Certificate classify(const Poly& y, const std::vector<Poly>& gens,
                     const OracleBounds& bounds = {}, long p = 0);

}  // namespace antinef
