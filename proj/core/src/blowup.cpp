#include "antinef/blowup.hpp"

#include <numeric>
#include <string>

namespace antinef {

namespace {

void check_spec(const DualGraph& g, const BlowUpSpec& spec) {
  if (spec.kind == BlowUpSpec::Kind::Free) {
    if (spec.curve < 0 || spec.curve >= g.vertex_count())
      fail("BadSpec", "no curve " + std::to_string(spec.curve));
  } else {
    auto [a, b] = spec.edge;
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() ||
        !g.has_edge(a, b))
      fail("BadSpec", "no edge {" + std::to_string(a) + "," +
                          std::to_string(b) + "}");
  }
}

}  // namespace

BlowUpResult blow_up(const DualGraph& g, const BlowUpSpec& spec) {
  check_spec(g, spec);
  const int n = g.vertex_count();
  std::vector<long> self_ints = g.self_ints();
  std::vector<std::pair<int, int>> edges = g.edges();
  self_ints.push_back(-1);
  if (spec.kind == BlowUpSpec::Kind::Free) {
    self_ints[spec.curve] -= 1;
    edges.emplace_back(spec.curve, n);
  } else {
    auto [a, b] = spec.edge;
    self_ints[a] -= 1;
    self_ints[b] -= 1;
    std::erase(edges, std::make_pair(a, b));
    edges.emplace_back(a, n);
    edges.emplace_back(b, n);
  }
  DualGraph after = [&] {
    try {
      return DualGraph::validate(std::move(self_ints), std::move(edges));
    } catch (const Error& e) {
      fail("ValidationFailure",
           std::string("blow-up output invalid: ") + e.what());
    }
  }();
  BlowUpResult r{std::move(after), std::vector<int>(n), n};
  std::iota(r.embedding.begin(), r.embedding.end(), 0);
  return r;
}

namespace {

template <typename C>
C pullback_impl(const DualGraph& g, const DualGraph& g_after,
                const BlowUpSpec& spec, const C& z) {
  if (z.size() != g.vertex_count())
    fail("GraphMismatch", "cycle does not live on the source graph");
  if (g_after.vertex_count() != g.vertex_count() + 1)
    fail("GraphMismatch", "target graph is not a one-point blow-up");
  C r = z;
  if (spec.kind == BlowUpSpec::Kind::Free)
    r.coeffs.push_back(z.coeffs[spec.curve]);
  else
    r.coeffs.push_back(z.coeffs[spec.edge.first] + z.coeffs[spec.edge.second]);
  return r;
}

}  // namespace

Cycle pullback(const DualGraph& g, const DualGraph& g_after,
               const BlowUpSpec& spec, const Cycle& z) {
  check_spec(g, spec);
  return pullback_impl(g, g_after, spec, z);
}

QCycle pullback(const DualGraph& g, const DualGraph& g_after,
                const BlowUpSpec& spec, const QCycle& z) {
  check_spec(g, spec);
  return pullback_impl(g, g_after, spec, z);
}

std::pair<DualGraph, Cycle> adjacent_cycle_via_blowup(const DualGraph& g,
                                                      const Cycle& z,
                                                      const BlowUpSpec& spec) {
  check_spec(g, spec);
  if (!is_rational(g)) fail("NotRational", "graph is not rational");
  if (!z.is_nonzero_effective() || !is_anti_nef(g, z))
    fail("NotAntiNef", "cycle is not nonzero effective anti-nef");
  auto touched = spec.kind == BlowUpSpec::Kind::Free
                     ? std::vector<int>{spec.curve}
                     : std::vector<int>{spec.edge.first, spec.edge.second};
  for (int c : touched)
    if (curve_product(g, z, c) >= 0)
      fail("PointNotAllowed",
           "curve " + std::to_string(c) + " meets the cycle in zero");

  const Int before = colength(g, z);
  BlowUpResult r = blow_up(g, spec);
  Cycle zp = pullback(g, r.graph, spec, z) +
             Cycle::unit(r.graph.vertex_count(), r.new_vertex);
  if (!is_anti_nef(r.graph, zp))
    fail("ValidationFailure", "pullback + E is not anti-nef");
  if (colength(r.graph, zp) != before + 1)
    fail("ValidationFailure", "colength did not increase by one");
  return {std::move(r.graph), std::move(zp)};
}

}  // namespace antinef
