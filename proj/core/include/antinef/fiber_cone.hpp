#pragma once

#include <string>
#include <vector>

#include "antinef/error.hpp"
#include "antinef/numeric.hpp"

namespace antinef {

/// Coefficient field of a presentation: the rationals (p == 0) or a prime
/// field F_p with p <= 13.
struct FieldSpec {
  long p = 0;

  bool is_prime_field() const { return p != 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// One term of a relation: coefficient times a monomial in the presentation
/// variables.
struct Term {
  Rat coeff;
  std::vector<int> exps;
};

using Relation = std::vector<Term>;

/// Presentation of the graded algebra carrying the adjacency criterion: a
/// polynomial ring on one variable per minimal generator of the ideal,
/// modulo a list of homogeneous relations. Presentations are supplied (by
/// hand or via builtin_presentation), never computed from ring data.
class FiberConePresentation {
 public:
  /// Validates: every relation homogeneous and nonzero after canonical
  /// reduction (duplicate monomials merged, zero coefficients dropped;
  /// coefficients reduced mod p over F_p). Errors: MalformedRelation,
  /// BadBounds (p not prime or out of range, num_vars < 1).
  static FiberConePresentation make(int num_vars, FieldSpec field,
                                    std::vector<Relation> relations);

  int num_vars() const { return num_vars_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  FiberConePresentation() = default;

  int num_vars_ = 0;
  FieldSpec field_;
  std::vector<Relation> relations_;
};

/// Point of projective space in canonical form: first nonzero coordinate
/// scaled to 1 (mod p over a prime field). Encodes a codimension-one
/// subspace W of the generator space, namely the kernel of evaluation at
/// the point.
class ProjectivePoint {
 public:
  /// Errors: MalformedPoint (all coordinates zero, or a denominator not
  /// invertible mod p).
  static ProjectivePoint make(std::vector<Rat> coords, FieldSpec field);

  const std::vector<Rat>& coords() const { return coords_; }
  const FieldSpec& field() const { return field_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  ProjectivePoint() = default;

  std::vector<Rat> coords_;
  FieldSpec field_;
};

/// The adjacency criterion: the ideal cut out by W = ker(eval at the point)
/// is integrally closed exactly when every relation vanishes there. (A
/// homogeneous G lies in W.S exactly when G(point) = 0: modulo W.S every
/// homogeneous form reduces to a scalar multiple of X^n for a coordinate X
/// not in W, and that scalar is the value at the point.)
/// Errors: DimensionMismatch.
bool is_adjacent_point(const FiberConePresentation& pres,
                       const ProjectivePoint& point);

/// All projective points over F_p where every relation vanishes, by brute
/// force over canonical representatives, ordered by leading coordinate and
/// then lexicographically. Errors: BadBounds (field is not F_p with p <= 13).
std::vector<ProjectivePoint> enumerate_points(const FiberConePresentation& pres);

/// Built-in presentations:
///  - "an_maximal_ideal" (param n >= 1): three variables; relation XY for
///    n >= 2, XY - Z^2 for n = 1.
///  - "veronese_m2": three variables; relation b^2 - ac (the square of the
///    maximal ideal of a two-dimensional regular ring).
/// Errors: UnknownBuiltin, BadBounds.
FiberConePresentation builtin_presentation(const std::string& name, int n,
                                           FieldSpec field);

}  // namespace antinef
