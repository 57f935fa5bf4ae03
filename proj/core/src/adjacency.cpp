#include "antinef/adjacency.hpp"

#include <algorithm>
#include <sstream>

namespace antinef {

namespace {

constexpr long kIterationCap = 1000000;

void require_anti_nef(const DualGraph& g, const Cycle& z) {
  if (z.size() != g.vertex_count())
    fail("GraphMismatch", "cycle does not live on this graph");
  if (!z.is_nonzero_effective() || !is_anti_nef(g, z))
    fail("NotAntiNef", "cycle is not nonzero effective anti-nef");
}

void require_rational(const DualGraph& g) {
  if (!is_rational(g)) fail("NotRational", "graph is not rational");
}

std::string cycle_str(const Cycle& z) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < z.size(); ++i)
    os << (i ? "," : "") << z.coeffs[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

ComponentSet e_zero_components(const DualGraph& g, const Cycle& z) {
  require_anti_nef(g, z);
  const int n = g.vertex_count();
  std::vector<char> in_e0(n, 0);
  for (int v = 0; v < n; ++v)
    if (curve_product(g, z, v) == 0) in_e0[v] = 1;

  ComponentSet components;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (!in_e0[start] || seen[start]) continue;
    std::vector<int> component, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int w : g.neighbors(v))
        if (in_e0[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<Type1Entry> type1_adjacent(const DualGraph& g, const Cycle& z,
                                       std::vector<std::string>* diagnostics) {
  require_anti_nef(g, z);
  require_rational(g);
  const Int base = colength(g, z);

  std::vector<Type1Entry> entries;
  for (const auto& component : e_zero_components(g, z)) {
    // Minimal B-supported cycle with (Z+Y).C <= 0 along B, grown from the
    // reduced sum of B by lowest-index increments.
    Cycle y = Cycle::zero(g.vertex_count());
    for (int v : component) y.coeffs[v] = 1;
    Cycle candidate = z + y;
    bool grown = true;
    for (long iter = 0; grown; ++iter) {
      if (iter >= kIterationCap)
        fail("NonTerminating", "type-1 increment loop exceeded the cap");
      grown = false;
      for (int v : component)
        if (curve_product(g, candidate, v) > 0) {
          y.coeffs[v] += 1;
          candidate.coeffs[v] += 1;
          grown = true;
          break;
        }
    }

    std::string why;
    if (!is_anti_nef(g, candidate))
      why = "Z+Y is not anti-nef";
    else if (intersect(g, z, y) != 0)
      why = "Z.Y != 0";
    else if (arithmetic_genus(g, y) != 0)
      why = "p_a(Y) != 0";
    else if (colength(g, candidate) != base + 1)
      why = "colength step is not 1";

    if (why.empty()) {
      entries.push_back({component, std::move(y), std::move(candidate)});
    } else if (diagnostics) {
      std::ostringstream os;
      os << "rejected component {";
      for (std::size_t i = 0; i < component.size(); ++i)
        os << (i ? "," : "") << component[i];
      os << "} with Y=" << cycle_str(y) << ": " << why;
      diagnostics->push_back(os.str());
    }
  }
  return entries;
}

Type2Loci type2_loci(const DualGraph& g, const Cycle& z) {
  require_anti_nef(g, z);
  Type2Loci loci;
  std::vector<char> negative(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (curve_product(g, z, v) < 0) {
      negative[v] = 1;
      loci.free_curves.push_back(v);
    }
  for (auto [a, b] : g.edges())
    if (negative[a] && negative[b]) loci.satellite_edges.emplace_back(a, b);
  return loci;
}

AdjacencyReport adjacent_below(const DualGraph& g, const Cycle& z,
                               std::vector<std::string>* diagnostics) {
  AdjacencyReport report;
  report.type1 = type1_adjacent(g, z, diagnostics);
  Type2Loci loci = type2_loci(g, z);
  for (int curve : loci.free_curves) {
    auto [g_after, z_after] =
        adjacent_cycle_via_blowup(g, z, BlowUpSpec::free_point(curve));
    report.type2_free.push_back({curve, std::move(g_after), std::move(z_after)});
  }
  for (auto [a, b] : loci.satellite_edges) {
    auto [g_after, z_after] =
        adjacent_cycle_via_blowup(g, z, BlowUpSpec::satellite(a, b));
    report.type2_satellite.push_back(
        {{a, b}, std::move(g_after), std::move(z_after)});
  }
  return report;
}

std::vector<ChainStep> chain_graph(const DualGraph& g, const Cycle& z_hi,
                                   const Cycle& z_lo) {
  require_anti_nef(g, z_hi);
  require_anti_nef(g, z_lo);
  require_rational(g);
  if (!leq(z_hi, z_lo))
    fail("NotNested", "upper cycle is not componentwise below the target");

  DualGraph cur_graph = g;
  Cycle cur = z_hi;
  Cycle target = z_lo;
  std::vector<ChainStep> steps;

  for (long iter = 0; iter < kIterationCap; ++iter) {
    const Int len_cur = colength(cur_graph, cur);
    const Int len_target = colength(cur_graph, target);
    if (len_cur == len_target) {
      if (!(cur == target))
        fail("ValidationFailure", "colengths agree but cycles differ");
      return steps;
    }

    // Type-1 move that stays under the target, lowest component first.
    bool moved = false;
    for (const auto& entry : type1_adjacent(cur_graph, cur)) {
      if (leq(entry.new_cycle, target)) {
        cur = entry.new_cycle;
        steps.push_back({cur_graph, cur});
        moved = true;
        break;
      }
    }
    if (moved) continue;

    // Otherwise blow up a free point on the lowest-index curve with
    // positive deficit and negative product, pulling the target along.
    int chosen = -1;
    for (int v = 0; v < cur_graph.vertex_count() && chosen < 0; ++v)
      if (target.coeffs[v] > cur.coeffs[v] && curve_product(cur_graph, cur, v) < 0)
        chosen = v;
    if (chosen < 0) {
      std::ostringstream os;
      os << "no legal move at colength " << len_cur.get_str() << " toward "
         << len_target.get_str() << "; current=" << cycle_str(cur)
         << " target=" << cycle_str(target) << " on "
         << cur_graph.vertex_count() << " vertices";
      fail("ChainStuck", os.str());
    }
    const BlowUpSpec spec = BlowUpSpec::free_point(chosen);
    auto [g_after, z_after] = adjacent_cycle_via_blowup(cur_graph, cur, spec);
    target = pullback(cur_graph, g_after, spec, target);
    cur_graph = std::move(g_after);
    cur = std::move(z_after);
    if (!leq(cur, target))
      fail("ValidationFailure", "chain step escaped the pulled-back target");
    steps.push_back({cur_graph, cur});
  }
  fail("NonTerminating", "chain loop exceeded the iteration cap");
}

}  // namespace antinef
