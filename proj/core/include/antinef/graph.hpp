#pragma once

#include <utility>
#include <vector>

#include "antinef/error.hpp"
#include "antinef/numeric.hpp"

namespace antinef {

/// Weighted dual graph of the exceptional set of a resolved normal surface
/// singularity: vertices are rational curves carrying self-intersection
/// numbers, edges are transverse intersection points. All curves have genus
/// zero; this is fixed, not configurable.
///
/// Construction goes through validate(), which enforces the structural
/// invariants:
///   - the intersection matrix M (M_ii = self-intersection, M_ij = 1 when
///     {i,j} is an edge) is negative definite, checked by exact leading
///     principal minor signs: (-1)^k det(M_k) > 0 for all k;
///   - the graph is connected;
///   - the graph is simple: no self-loops, no multi-edges.
class DualGraph {
 public:
  /// Errors: NotNegativeDefinite, Disconnected, MalformedEdge (self-loop,
  /// multi-edge, endpoint out of range), MalformedGraph (no vertices).
  static DualGraph validate(std::vector<long> self_ints,
                            std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(self_ints_.size()); }
  long self_int(int v) const { return self_ints_[v]; }
  const std::vector<long>& self_ints() const { return self_ints_; }
  /// Normalized (a < b) and sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int a, int b) const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  DualGraph() = default;

  std::vector<long> self_ints_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Integer formal sum of the exceptional curves of a graph. Cycles do not
/// hold a reference to their graph; every operation takes the graph
/// explicitly and raises GraphMismatch when the lengths disagree.
struct Cycle {
  std::vector<Int> coeffs;

  Cycle() = default;
  explicit Cycle(std::vector<Int> c) : coeffs(std::move(c)) {}

  static Cycle zero(int n) { return Cycle(std::vector<Int>(n, 0)); }
  static Cycle unit(int n, int v);
  static Cycle ones(int n) { return Cycle(std::vector<Int>(n, 1)); }

  int size() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  /// All coefficients >= 0.
  bool is_effective() const;
  bool is_nonzero_effective() const { return is_effective() && !is_zero(); }

  friend Cycle operator+(const Cycle& a, const Cycle& b);
  friend Cycle operator-(const Cycle& a, const Cycle& b);
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Componentwise a <= b.
bool leq(const Cycle& a, const Cycle& b);

/// Rational formal sum; houses the canonical cycle.
struct QCycle {
  std::vector<Rat> coeffs;

  QCycle() = default;
  explicit QCycle(std::vector<Rat> c) : coeffs(std::move(c)) {}
  explicit QCycle(const Cycle& z);

  int size() const { return static_cast<int>(coeffs.size()); }

  friend QCycle operator+(const QCycle& a, const QCycle& b);
  friend bool operator==(const QCycle&, const QCycle&) = default;
};

/// Z^t M W, exact. Integer for integral cycles, rational otherwise.
Int intersect(const DualGraph& g, const Cycle& z, const Cycle& w);
Rat intersect(const DualGraph& g, const QCycle& z, const QCycle& w);

/// Z . C_v for a single curve; the workhorse of the increment loops.
Int curve_product(const DualGraph& g, const Cycle& z, int v);
Rat curve_product(const DualGraph& g, const QCycle& z, int v);

/// K . Y without solving for K: adjunction forces K . C_i = -C_i^2 - 2 on
/// genus-zero curves, so K . Y = sum Y_i (-C_i^2 - 2), an exact integer.
Int canonical_product(const DualGraph& g, const Cycle& y);

/// The unique rational cycle K with K . C_i = -C_i^2 - 2 for every vertex
/// (M invertible by negative definiteness). K . Y is integral for every
/// integral Y.
QCycle canonical_cycle(const DualGraph& g);

/// Minimal nonzero effective anti-nef cycle, by the increment algorithm:
/// start at the lowest-index curve, repeatedly add the lowest-index curve
/// with positive product. Errors: NonTerminating (iteration cap; unreachable
/// on validated graphs).
Cycle fundamental_cycle(const DualGraph& g);

/// True iff Z . C_v <= 0 for every vertex. Callers supply effective Z.
bool is_anti_nef(const DualGraph& g, const Cycle& z);

/// Minimal anti-nef cycle >= Z, by the same increment loop. Idempotent,
/// monotone. Errors: NotEffective (Z not nonzero effective), NonTerminating.
Cycle anti_nef_closure(const DualGraph& g, Cycle z);

/// p_a(Y) = (Y^2 + K.Y)/2 + 1, exact; the division never truncates
/// (ParityViolation signals an internal inconsistency).
Int arithmetic_genus(const DualGraph& g, const Cycle& y);

/// Colength of the integrally closed ideal attached to an anti-nef cycle:
/// -(Z^2 + K.Z)/2. Requires a rational graph and Z anti-nef nonzero
/// effective. Errors: NotRational, NotAntiNef.
Int colength(const DualGraph& g, const Cycle& z);

/// Rationality test: p_a(fundamental cycle) == 0.
bool is_rational(const DualGraph& g);

}  // namespace antinef
