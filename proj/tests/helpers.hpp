#pragma once

// Shared builders and independent reference computations for the suites.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "antinef/adjacency.hpp"
#include "antinef/graph.hpp"
#include "antinef/monomial.hpp"

namespace testutil {

using namespace antinef;

/// Chain of n curves, all with the given self-intersection (A_n for -2).
inline DualGraph chain_an(int n, long self = -2) {
  std::vector<long> selfs(n, self);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return DualGraph::validate(std::move(selfs), std::move(edges));
}

/// Star: one center joined to every leaf.
inline DualGraph star(long center, const std::vector<long>& leaves) {
  std::vector<long> selfs{center};
  selfs.insert(selfs.end(), leaves.begin(), leaves.end());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    edges.emplace_back(0, static_cast<int>(i + 1));
  return DualGraph::validate(std::move(selfs), std::move(edges));
}

inline Cycle cyc(const std::vector<long>& v) {
  Cycle z;
  for (long c : v) z.coeffs.emplace_back(c);
  return z;
}

/// Random tree whose self-intersections strictly dominate the vertex degree;
/// such graphs are always negative definite, and their fundamental cycle is
/// the reduced tree, which has arithmetic genus zero, so they are rational.
inline DualGraph random_dominant_tree(std::mt19937& rng, int max_n = 6) {
  const int n = 1 + static_cast<int>(rng() % max_n);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng() % i);
    edges.emplace_back(parent, i);
    ++degree[parent];
    ++degree[i];
  }
  std::vector<long> selfs(n);
  for (int i = 0; i < n; ++i)
    selfs[i] = -(degree[i] + 1 + static_cast<long>(rng() % 3));
  return DualGraph::validate(std::move(selfs), std::move(edges));
}

/// Mix of A_n chains, dominant trees, and filtered {-2,-3} chains; always
/// validated, not always rational.
inline DualGraph random_graph(std::mt19937& rng, int max_n = 6) {
  switch (rng() % 3) {
    case 0:
      return chain_an(1 + static_cast<int>(rng() % max_n));
    case 1:
      return random_dominant_tree(rng, max_n);
    default: {
      const int n = 1 + static_cast<int>(rng() % max_n);
      std::vector<long> selfs(n);
      for (auto& s : selfs) s = -2 - static_cast<long>(rng() % 2);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return DualGraph::validate(std::move(selfs), std::move(edges));
    }
  }
}

inline DualGraph random_rational_graph(std::mt19937& rng, int max_n = 6) {
  for (;;) {
    DualGraph g = random_graph(rng, max_n);
    if (is_rational(g)) return g;
  }
}

inline Cycle random_cycle(std::mt19937& rng, int n, long lo, long hi) {
  Cycle z = Cycle::zero(n);
  for (auto& c : z.coeffs)
    c = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  return z;
}

/// All nonzero effective anti-nef cycles with entries <= entry_bound and
/// colength <= max_colength.
inline std::vector<Cycle> anti_nef_cycles_up_to(const DualGraph& g,
                                                long entry_bound,
                                                long max_colength) {
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<long> v(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && v[i] == entry_bound) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    Cycle z = cyc(v);
    if (is_anti_nef(g, z) && colength(g, z) <= max_colength)
      out.push_back(std::move(z));
  }
  return out;
}

/// Independent 2-D Newton membership: v lies in conv(S) + orthant iff some
/// generator pair (a, b) admits t in [0, 1] with (1-t)a + t b <= v. Exact
/// interval intersection over the rationals; shares nothing with the hull
/// code under test.
inline bool member2_reference(const std::vector<Exponent>& gens,
                              const Exponent& v) {
  auto interval = [&](long pa, long pb, long bound, Rat& lo, Rat& hi) {
    // constraint pa + t (pb - pa) <= bound on t in [lo, hi]
    const long slope = pb - pa;
    if (slope == 0) return pa <= bound;
    Rat cut(bound - pa, slope);
    cut.canonicalize();
    if (slope > 0)
      hi = std::min(hi, cut);
    else
      lo = std::max(lo, cut);
    return true;
  };
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Rat lo(0), hi(1);
      if (!interval(a[0], b[0], v[0], lo, hi)) continue;
      if (!interval(a[1], b[1], v[1], lo, hi)) continue;
      if (lo <= hi) return true;
    }
  return false;
}

inline MonomialIdeal random_primary_ideal(std::mt19937& rng, int dim,
                                          int max_exp = 6) {
  std::vector<Exponent> gens;
  for (int axis = 0; axis < dim; ++axis) {
    Exponent pure(dim, 0);
    pure[axis] = 1 + static_cast<int>(rng() % max_exp);
    gens.push_back(std::move(pure));
  }
  const int extras = static_cast<int>(rng() % 4);
  for (int i = 0; i < extras; ++i) {
    Exponent v(dim);
    int total = 0;
    for (auto& e : v) total += e = static_cast<int>(rng() % (max_exp + 1));
    if (total == 0) v[rng() % dim] = 1;  // keep the ideal proper
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(dim, std::move(gens));
}

}  // namespace testutil
