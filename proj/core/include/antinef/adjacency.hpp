#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antinef/blowup.hpp"
#include "antinef/graph.hpp"

namespace antinef {

/// Connected components of an induced subgraph, each a sorted vertex set.
using ComponentSet = std::vector<std::vector<int>>;

/// Connected components of the subgraph induced by the curves with
/// Z . C = 0. Requires Z anti-nef nonzero effective (NotAntiNef).
ComponentSet e_zero_components(const DualGraph& g, const Cycle& z);

/// One candidate per zero-product component B: Y is the minimal nonzero
/// effective cycle supported on B making Z + Y anti-nef along B.
struct Type1Entry {
  std::vector<int> component;
  Cycle y;
  Cycle new_cycle;  // Z + Y
};

/// Candidates are accepted only after the full verification battery:
/// Z + Y globally anti-nef, Z . Y = 0, p_a(Y) = 0, colength step exactly 1.
/// A rejected candidate is reported through `diagnostics` (never expected
/// on rational graphs). Errors: NotAntiNef, NotRational.
std::vector<Type1Entry> type1_adjacent(
    const DualGraph& g, const Cycle& z,
    std::vector<std::string>* diagnostics = nullptr);

struct Type2Loci {
  std::vector<int> free_curves;                   // Z . C < 0
  std::vector<std::pair<int, int>> satellite_edges;  // both endpoints < 0
};

/// Legal blow-up centers: curves and intersection points where every
/// incident curve meets Z negatively.
Type2Loci type2_loci(const DualGraph& g, const Cycle& z);

/// One realized representative per free family (a whole one-parameter
/// family of ideals collapses to one combinatorial entry).
struct FreeFamily {
  int curve;
  DualGraph graph_after;
  Cycle cycle_after;
};

struct SatellitePoint {
  std::pair<int, int> edge;
  DualGraph graph_after;
  Cycle cycle_after;
};

/// Everything adjacent below the ideal of Z: colength goes up by exactly
/// one in every entry (checked on construction).
struct AdjacencyReport {
  std::vector<Type1Entry> type1;
  std::vector<FreeFamily> type2_free;
  std::vector<SatellitePoint> type2_satellite;
};

AdjacencyReport adjacent_below(const DualGraph& g, const Cycle& z,
                               std::vector<std::string>* diagnostics = nullptr);

/// One step of a composition series on the graph side. The list returned by
/// chain_graph excludes the starting pair, so equal endpoints give an empty
/// chain.
struct ChainStep {
  DualGraph graph;
  Cycle cycle;
};

/// Composition series from Z_hi down to Z_lo (componentwise Z_hi <= Z_lo,
/// both anti-nef on a rational graph): each step drops colength by exactly
/// one, preferring type-1 moves (no graph growth) and falling back to free
/// blow-ups on the lowest-index curve with positive deficit and negative
/// product. The target is pulled back alongside every blow-up. Errors:
/// NotNested, NotAntiNef, NotRational, ChainStuck (no legal move; the
/// message carries the full state).
std::vector<ChainStep> chain_graph(const DualGraph& g, const Cycle& z_hi,
                                   const Cycle& z_lo);

}  // namespace antinef
