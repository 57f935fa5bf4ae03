#pragma once

#include <utility>
#include <vector>

#include "antinef/graph.hpp"

namespace antinef {

/// Where to blow up: a free point on one exceptional curve, or the satellite
/// point at the intersection of two. Free points on a curve form a
/// one-parameter family geometrically; combinatorially they are all
/// equivalent, so one spec per curve stands for the whole family.
struct BlowUpSpec {
  enum class Kind { Free, Satellite };

  Kind kind = Kind::Free;
  int curve = -1;                  // Free
  std::pair<int, int> edge{-1, -1};  // Satellite

  static BlowUpSpec free_point(int curve) {
    BlowUpSpec s;
    s.kind = Kind::Free;
    s.curve = curve;
    return s;
  }
  static BlowUpSpec satellite(int a, int b) {
    BlowUpSpec s;
    s.kind = Kind::Satellite;
    s.edge = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return s;
  }

  friend bool operator==(const BlowUpSpec&, const BlowUpSpec&) = default;
};

struct BlowUpResult {
  DualGraph graph;             // graph after the surgery
  std::vector<int> embedding;  // old vertex -> new vertex (identity map;
                               // the new curve is appended at the end)
  int new_vertex = -1;
};

/// Graph surgery for one blow-up. Free on C: append a (-1)-vertex joined to
/// C, drop C's self-intersection by one. Satellite on {A,B}: remove the
/// edge, append a (-1)-vertex joined to both, drop both self-intersections
/// by one. The result is re-validated; negative definiteness is preserved.
/// Errors: BadSpec (missing curve/edge), ValidationFailure (internal).
BlowUpResult blow_up(const DualGraph& g, const BlowUpSpec& spec);

/// Total transform of a cycle: coefficients of the strict transforms are
/// unchanged; the new curve gets coeff(C) for Free on C, coeff(A)+coeff(B)
/// for Satellite on {A,B}. Preserves all intersection products, and the
/// pullback meets the new curve in zero.
Cycle pullback(const DualGraph& g, const DualGraph& g_after,
               const BlowUpSpec& spec, const Cycle& z);
QCycle pullback(const DualGraph& g, const DualGraph& g_after,
                const BlowUpSpec& spec, const QCycle& z);

/// The blow-up step that drops an ideal by colength one: returns the new
/// graph and pullback(Z) + E. Requires Z anti-nef on a rational graph and
/// Z . C < 0 for every curve through the chosen point; PointNotAllowed
/// otherwise. The result is anti-nef and its colength is exactly
/// colength(Z) + 1 (both checked).
std::pair<DualGraph, Cycle> adjacent_cycle_via_blowup(const DualGraph& g,
                                                      const Cycle& z,
                                                      const BlowUpSpec& spec);

}  // namespace antinef
