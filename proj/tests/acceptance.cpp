// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "antinef/adjacency.hpp"
#include "antinef/blowup.hpp"
#include "antinef/fiber_cone.hpp"
#include "antinef/graph.hpp"
#include "antinef/monomial.hpp"
#include "antinef/oracle.hpp"
#include "helpers.hpp"

using namespace antinef;
using namespace testutil;

namespace {

int failures = 0;

struct Criterion {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

void report(int index, const std::string& name, const Criterion& c) {
  if (c.ok) {
    std::printf("[PASS] %d: %s\n", index, name.c_str());
  } else {
    std::printf("[FAIL] %d: %s — %s\n", index, name.c_str(), c.detail.c_str());
    ++failures;
  }
}

template <typename Fn>
Criterion guarded(Fn&& fn) {
  Criterion c;
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  return c;
}

// ---- 1: A_n golden suite ---------------------------------------------------

Criterion criterion1() {
  return guarded([](Criterion& c) {
    for (int n = 1; n <= 8; ++n) {
      DualGraph g = chain_an(n);
      Cycle e = Cycle::ones(n);
      c.expect(fundamental_cycle(g) == e,
               "fundamental cycle is not the reduced chain at n=" +
                   std::to_string(n));
      c.expect(colength(g, e) == 1, "colength(E) != 1");

      ComponentSet e0 = e_zero_components(g, e);
      if (n <= 2) {
        c.expect(e0.empty(), "E_0 should be empty for n <= 2");
      } else {
        std::vector<int> middle;
        for (int v = 1; v < n - 1; ++v) middle.push_back(v);
        c.expect(e0 == ComponentSet{middle},
                 "E_0 is not the middle chain at n=" + std::to_string(n));
      }

      AdjacencyReport report = adjacent_below(g, e);
      const std::size_t t1 = n >= 3 ? 1 : 0;
      const std::size_t fr = n == 1 ? 1 : 2;
      const std::size_t sat = n == 2 ? 1 : 0;
      c.expect(report.type1.size() == t1 && report.type2_free.size() == fr &&
                   report.type2_satellite.size() == sat,
               "adjacency counts wrong at n=" + std::to_string(n));
    }
  });
}

// ---- 2: fiber-cone structural match ---------------------------------------

Criterion criterion2() {
  return guarded([](Criterion& c) {
    for (long q : {2L, 3L, 5L}) {
      FieldSpec f{q};
      auto lines =
          enumerate_points(builtin_presentation("an_maximal_ideal", 2, f));
      c.expect(lines.size() == static_cast<std::size_t>(2 * q + 1),
               "V(XY) over F_" + std::to_string(q) + " has " +
                   std::to_string(lines.size()) + " points");
      std::size_t shared = 0;
      for (const auto& point : lines) {
        const bool x0 = point.coords()[0] == 0;
        const bool y0 = point.coords()[1] == 0;
        c.expect(x0 || y0, "point off both coordinate lines");
        if (x0 && y0) ++shared;
      }
      c.expect(shared == 1, "the two lines must share exactly one point");

      auto conic =
          enumerate_points(builtin_presentation("an_maximal_ideal", 1, f));
      c.expect(conic.size() == static_cast<std::size_t>(q + 1),
               "V(XY - Z^2) over F_" + std::to_string(q) + " has " +
                   std::to_string(conic.size()) + " points");
    }

    // Correspondence with the adjacency reports: two one-parameter families
    // plus one distinguished ideal for n >= 2, a single family for n = 1.
    auto r5 = adjacent_below(chain_an(5), Cycle::ones(5));
    c.expect(r5.type2_free.size() == 2 && r5.type1.size() == 1,
             "n=5 should give two families plus one distinguished ideal");
    auto r2 = adjacent_below(chain_an(2), Cycle::ones(2));
    c.expect(r2.type2_free.size() == 2 && r2.type2_satellite.size() == 1,
             "n=2 should give two families plus one distinguished ideal");
    auto r1 = adjacent_below(chain_an(1), cyc({1}));
    c.expect(r1.type2_free.size() == 1 && r1.type1.empty() &&
                 r1.type2_satellite.empty(),
             "n=1 should give a single family");
  });
}

// ---- 3: Riemann-Roch consistency -------------------------------------------

Criterion criterion3() {
  return guarded([](Criterion& c) {
    long checked = 0;
    for (int n = 1; n <= 5; ++n) {
      DualGraph g = chain_an(n);
      // On these chains 2*colength = -Z^2 >= (max entry)^2 / n, so entries
      // above floor(sqrt(10 n)) cannot reach colength 5.
      const long bound = static_cast<long>(std::sqrt(10.0 * n));
      for (const auto& z : anti_nef_cycles_up_to(g, bound, 5)) {
        const Int base = colength(g, z);
        std::vector<std::string> diagnostics;
        for (const auto& entry : type1_adjacent(g, z, &diagnostics)) {
          c.expect(colength(g, entry.new_cycle) == base + 1,
                   "type-1 colength step != 1");
          c.expect(-intersect(g, z, entry.y) +
                           (1 - arithmetic_genus(g, entry.y)) ==
                       1,
                   "-Z.Y + (1 - p_a(Y)) != 1");
          ++checked;
        }
        c.expect(diagnostics.empty(), "a type-1 candidate was rejected");
        Type2Loci loci = type2_loci(g, z);
        for (int curve : loci.free_curves) {
          auto [ga, za] =
              adjacent_cycle_via_blowup(g, z, BlowUpSpec::free_point(curve));
          c.expect(colength(ga, za) == base + 1, "free blow-up step != 1");
          ++checked;
        }
        for (auto [a, b] : loci.satellite_edges) {
          auto [ga, za] =
              adjacent_cycle_via_blowup(g, z, BlowUpSpec::satellite(a, b));
          c.expect(colength(ga, za) == base + 1, "satellite step != 1");
          ++checked;
        }
      }
    }
    c.expect(checked == 109, "exhaustive sweep size changed");
  });
}

// ---- 4: monomial enumeration ------------------------------------------------

Criterion criterion4() {
  return guarded([](Criterion& c) {
    const Int expected_total[] = {1, 2, 3, 5};
    const Int expected_ic[] = {1, 2, 3, 4};
    for (int n = 1; n <= 4; ++n) {
      ColengthEnumeration e = enumerate_colength(n);
      c.expect(e.total == expected_total[n - 1] && e.ic == expected_ic[n - 1],
               "counts wrong at colength " + std::to_string(n));
    }
    ColengthEnumeration e4 = enumerate_colength(4);
    c.expect(e4.witnesses.size() == 1 &&
                 e4.witnesses[0] == MonomialIdeal::make(2, {{2, 0}, {0, 2}}),
             "unique witness at colength 4 must be (x^2, y^2)");
  });
}

// ---- 5: chain suites ---------------------------------------------------------

Criterion criterion5() {
  return guarded([](Criterion& c) {
    // 100 random nested integrally closed pairs in d = 2 and d = 3.
    std::mt19937 rng(112358);
    int done = 0;
    while (done < 100) {
      const int dim = done % 2 == 0 ? 2 : 3;
      MonomialIdeal upper =
          newton_closure(random_primary_ideal(rng, dim, dim == 2 ? 5 : 3));
      std::vector<Exponent> gens;
      Exponent box(dim, 0);
      for (const auto& g : upper.gens()) {
        for (int i = 0; i < dim; ++i) box[i] = std::max(box[i], g[i]);
        Exponent v = g;
        v[rng() % dim] += static_cast<int>(rng() % 3);
        gens.push_back(std::move(v));
      }
      for (int i = 0; i < dim; ++i) {
        Exponent pure(dim, 0);
        pure[i] = box[i] + 1;
        gens.push_back(std::move(pure));
      }
      MonomialIdeal lower = newton_closure(MonomialIdeal::make(dim, gens));
      const Int gap = colength(lower) - colength(upper);
      if (gap == 0 || gap > 12) continue;
      auto steps = chain(upper, lower);
      c.expect(Int(steps.size()) == gap, "chain length != colength gap");
      Int expected = colength(upper);
      for (const auto& step : steps) {
        expected += 1;
        c.expect(colength(step) == expected, "chain step colength != +1");
        c.expect(is_integrally_closed(step), "chain step not closed");
      }
      ++done;
    }

    // Graph side: from E to every anti-nef cycle of colength <= 6 on A_n.
    for (int n = 1; n <= 4; ++n) {
      DualGraph g = chain_an(n);
      Cycle e = Cycle::ones(n);
      const long bound = static_cast<long>(std::sqrt(12.0 * n));
      for (const auto& target : anti_nef_cycles_up_to(g, bound, 6)) {
        c.expect(leq(e, target), "anti-nef cycle below the reduced chain");
        auto steps = chain_graph(g, e, target);
        c.expect(Int(steps.size()) == colength(g, target) - 1,
                 "graph chain length != colength gap");
        if (!steps.empty())
          c.expect(steps.back().cycle.size() ==
                       steps.back().graph.vertex_count(),
                   "chain step size mismatch");
      }
    }
  });
}

// ---- 6: property suites -------------------------------------------------------

Criterion criterion6() {
  return guarded([](Criterion& c) {
    std::mt19937 rng(271828);

    // newton_closure: extensive + idempotent + monotone, 500 random ideals.
    for (int trial = 0; trial < 500; ++trial) {
      const int dim = trial % 4 == 0 ? 3 : 2;
      MonomialIdeal ideal = random_primary_ideal(rng, dim, dim == 2 ? 6 : 3);
      MonomialIdeal closed = newton_closure(ideal);
      for (const auto& g : ideal.gens())
        c.expect(contains(closed, g), "closure lost a generator");
      c.expect(newton_closure(closed) == closed, "closure not idempotent");
      std::vector<Exponent> gens = ideal.gens();
      Exponent extra(dim, 0);
      extra[rng() % dim] = 1 + static_cast<int>(rng() % 3);
      gens.push_back(extra);
      MonomialIdeal closed_bigger =
          newton_closure(MonomialIdeal::make(dim, std::move(gens)));
      for (const auto& g : closed.gens())
        c.expect(contains(closed_bigger, g), "closure not monotone");
    }

    // p_a additivity identity on 500 random cycle pairs.
    for (int trial = 0; trial < 500; ++trial) {
      DualGraph g = random_graph(rng);
      Cycle y = random_cycle(rng, g.vertex_count(), -3, 3);
      Cycle w = random_cycle(rng, g.vertex_count(), -3, 3);
      c.expect(arithmetic_genus(g, y + w) ==
                   arithmetic_genus(g, y) + arithmetic_genus(g, w) +
                       intersect(g, y, w) - 1,
               "genus additivity identity failed");
    }

    // K' = pullback(K) + E on 100 random blow-ups, and adjunction residuals.
    for (int trial = 0; trial < 100; ++trial) {
      DualGraph g = random_graph(rng);
      QCycle k = canonical_cycle(g);
      for (int v = 0; v < g.vertex_count(); ++v)
        c.expect(curve_product(g, k, v) == Rat(-g.self_int(v) - 2),
                 "adjunction residual nonzero");
      BlowUpSpec spec = BlowUpSpec::free_point(rng() % g.vertex_count());
      if (!g.edges().empty() && rng() % 2 == 0) {
        auto e = g.edges()[rng() % g.edges().size()];
        spec = BlowUpSpec::satellite(e.first, e.second);
      }
      BlowUpResult r = blow_up(g, spec);
      QCycle expected = pullback(g, r.graph, spec, k);
      expected.coeffs[r.new_vertex] += 1;
      c.expect(canonical_cycle(r.graph) == expected,
               "canonical cycle does not pull back to K + E");
    }
  });
}

// ---- 7: oracle certificates ----------------------------------------------------

Criterion criterion7() {
  return guarded([](Criterion& c) {
    auto mono = [](int ex, int ey) { return Poly{{{ex, ey}, Rat(1)}}; };
    using V = Certificate::Verdict;

    Certificate a = classify(mono(2, 1), {mono(3, 0), mono(0, 2)});
    c.expect(a.verdict == V::Integral && a.degree == 2,
             "x^2 y over (x^3, y^2) must be integral at degree 2");
    Certificate b = classify(mono(1, 1), {mono(2, 0), mono(0, 2)});
    c.expect(b.verdict == V::Integral && b.degree == 2,
             "xy over (x^2, y^2) must be integral at degree 2");
    Certificate d = classify(mono(0, 1), {mono(2, 0), mono(0, 2)});
    c.expect(d.verdict == V::NotIntegral &&
                 d.weights == std::array<long, 2>{1, 1},
             "y over (x^2, y^2) must fail via the order valuation");

    // 200 random monomial instances: the searches never conflict, and any
    // decided verdict matches Newton-polyhedron membership.
    std::mt19937 rng(314159);
    const OracleBounds bounds{2, 8, 4};
    int decided = 0;
    int processed = 0;
    while (processed < 200) {
      MonomialIdeal ideal = random_primary_ideal(rng, 2, 4);
      if (colength(ideal) > 8) continue;
      ++processed;
      std::vector<Poly> gens;
      for (const auto& g : ideal.gens())
        gens.push_back(Poly{{{g[0], g[1]}, Rat(1)}});
      Exponent v(2);
      if (processed % 2 == 0) {
        const auto& g = ideal.gens()[rng() % ideal.gens().size()];
        v = {g[0] + static_cast<int>(rng() % 2),
             g[1] + static_cast<int>(rng() % 2)};
      } else {
        v = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
      }
      Poly y = mono(v[0], v[1]);
      Certificate eq = integral_equation_search(y, gens, bounds, 5);
      Certificate wit = valuation_witness_search(y, gens, bounds, 5);
      c.expect(!(eq.verdict == V::Integral && wit.verdict == V::NotIntegral),
               "Integral and NotIntegral certified for one input");
      const bool member = newton_member(ideal, v);
      if (eq.verdict == V::Integral) {
        c.expect(member, "Integral verdict off the Newton polyhedron");
        ++decided;
      }
      if (wit.verdict == V::NotIntegral) {
        c.expect(!member, "NotIntegral verdict inside the Newton polyhedron");
        ++decided;
      }
    }
    c.expect(decided >= 120, "too few decided oracle instances");

    // Cross-module agreement on the three torus-fixed colength-4 points.
    FieldSpec rationals{0};
    FiberConePresentation ver =
        builtin_presentation("veronese_m2", 0, rationals);
    auto point = [&](long x, long y, long z) {
      return ProjectivePoint::make({Rat(x), Rat(y), Rat(z)}, rationals);
    };
    const bool v100 = is_adjacent_point(ver, point(1, 0, 0));
    const bool v010 = is_adjacent_point(ver, point(0, 1, 0));
    const bool v001 = is_adjacent_point(ver, point(0, 0, 1));
    c.expect(v100 && !v010 && v001, "conic verdicts must be true/false/true");
    c.expect(v100 == is_integrally_closed(
                         MonomialIdeal::make(2, {{3, 0}, {1, 1}, {0, 2}})),
             "fiber-cone and monomial verdicts differ at [1:0:0]");
    c.expect(v010 == is_integrally_closed(
                         MonomialIdeal::make(2, {{2, 0}, {0, 2}})),
             "fiber-cone and monomial verdicts differ at [0:1:0]");
    c.expect(v001 == is_integrally_closed(
                         MonomialIdeal::make(2, {{2, 0}, {1, 1}, {0, 3}})),
             "fiber-cone and monomial verdicts differ at [0:0:1]");
  });
}

// ---- 8: rationality detection ---------------------------------------------------

Criterion criterion8() {
  return guarded([](Criterion& c) {
    for (int n = 1; n <= 8; ++n)
      c.expect(is_rational(chain_an(n)),
               "A_n must be rational at n=" + std::to_string(n));
    for (long s = -1; s >= -5; --s)
      c.expect(is_rational(DualGraph::validate({s}, {})),
               "single vertex must be rational");
    DualGraph st = star(-2, {-3, -3, -3, -3});
    c.expect(!is_rational(st), "the (-2; -3^4) star must not be rational");
    c.expect(arithmetic_genus(st, fundamental_cycle(st)) == 1,
             "p_a of the star's fundamental cycle must be 1");
  });
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  report(1, "A_n golden suite (fundamental cycle, colength, E_0, adjacency)",
         criterion1());
  report(2, "fiber-cone point counts match the adjacency structure",
         criterion2());
  report(3, "Riemann-Roch consistency of all adjacency steps", criterion3());
  report(4, "monomial enumeration through colength 4", criterion4());
  report(5, "composition-series suites (monomial and graph)", criterion5());
  report(6, "property suites (closure, genus, canonical pullback)",
         criterion6());
  report(7, "oracle certificates and cross-module agreement", criterion7());
  report(8, "rationality detection", criterion8());
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::printf("%d/8 criteria passed in %.1f s\n", 8 - failures,
              elapsed.count() / 1000.0);
  return failures == 0 ? 0 : 1;
}
