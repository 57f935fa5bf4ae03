#pragma once

#include <vector>

#include "antinef/error.hpp"
#include "antinef/numeric.hpp"

namespace antinef {

/// Exponent vector of a monomial in d variables.
using Exponent = std::vector<int>;

/// Monomial ideal in a regular local ring of dimension d >= 2, stored as
/// the divisibility-minimal generating set, sorted lexicographically.
class MonomialIdeal {
 public:
  /// Minimalizes the generators. Errors: Empty (no generators), BadBounds
  /// (dim < 2 or exponent length/dim mismatch or negative exponent).
  static MonomialIdeal make(int dim, std::vector<Exponent> gens);

  int dim() const { return dim_; }
  const std::vector<Exponent>& gens() const { return gens_; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal() = default;

  int dim_ = 0;
  std::vector<Exponent> gens_;
};

/// Some generator divides v (componentwise <=).
bool contains(const MonomialIdeal& ideal, const Exponent& v);

/// Every coordinate axis carries a pure power generator.
bool is_m_primary(const MonomialIdeal& ideal);

/// Number of monomials outside the ideal. Errors: NotPrimary.
Int colength(const MonomialIdeal& ideal);

/// Is v in the Newton polyhedron conv(gens) + R_{>=0}^d? Exact: lower-hull
/// edge inequalities for d = 2, rational linear feasibility for d >= 3.
bool newton_member(const MonomialIdeal& ideal, const Exponent& v);

/// Integral closure: the monomial ideal of all lattice points of the
/// Newton polyhedron. Idempotent and monotone. Errors: NotPrimary.
MonomialIdeal newton_closure(const MonomialIdeal& ideal);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// Generators that are vertices of the Newton polyhedron, i.e. extremal:
/// not in the polyhedron of the remaining generators. Errors: NotPrimary.
std::vector<Exponent> np_vertices(const MonomialIdeal& ideal);

/// One ideal per Newton-polyhedron vertex v: the staircase grows by exactly
/// {v}, realized by generators (gens \ {v}) + {v + e_i}. Every output is
/// integrally closed of colength + 1 (checked). Errors: NotIntegrallyClosed.
std::vector<MonomialIdeal> adjacent_below(const MonomialIdeal& ideal);

/// Composition series from `from` down to `to` by vertex removal, always
/// removing the lexicographically smallest Newton vertex outside `to`. The
/// returned list excludes the starting ideal and ends with `to`; length
/// equals the colength gap. Errors: NotNested, NotIntegrallyClosed.
std::vector<MonomialIdeal> chain(const MonomialIdeal& from,
                                 const MonomialIdeal& to);

/// m^n: all monomials of total degree n in dim variables.
MonomialIdeal power_ideal(int dim, int n);

/// Is m^n + (x^v) integrally closed, for |v| = n - 1 (so the colength over
/// m^n is one)? Requires n >= 2. Errors: BadBounds.
bool power_plus_monomial_closed(int n, const Exponent& v);

struct ColengthEnumeration {
  Int total{0};
  Int ic{0};
  std::vector<MonomialIdeal> witnesses;  // the not integrally closed ones
};

/// All m-primary monomial ideals of the given colength in d = 2, via
/// staircase partitions. Errors: BadBounds (n < 1 or n > cap).
ColengthEnumeration enumerate_colength(int n, int cap = 12);

}  // namespace antinef
