#include <doctest.h>

#include <random>

#include "antinef/graph.hpp"
#include "helpers.hpp"

using namespace antinef;
using namespace testutil;

namespace {

// Reference 3x3 determinant for the validation oracle.
long det3(const long m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("validate accepts A_3; leading minors alternate sign") {
  // Independent oracle: minors of the A_3 matrix are -2, 3, -4.
  const long m[3][3] = {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
  CHECK(m[0][0] == -2);
  CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == 3);
  CHECK(det3(m) == -4);
  DualGraph g = chain_an(3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 2);
}

TEST_CASE("validate accepts a single (-1)-vertex") {
  DualGraph g = DualGraph::validate({-1}, {});
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("triangle of (-2)-curves is not negative definite") {
  // The quadratic form vanishes on (1,1,1): 3*(-2) + 2*3 = 0.
  CHECK(3 * (-2) + 2 * 3 == 0);
  CHECK_THROWS_WITH_AS(
      DualGraph::validate({-2, -2, -2}, {{0, 1}, {1, 2}, {0, 2}}),
      doctest::Contains("NotNegativeDefinite"), Error);
}

TEST_CASE("validate rejects malformed input") {
  CHECK_THROWS_AS(DualGraph::validate({-2, -2}, {{0, 0}}), Error);  // loop
  CHECK_THROWS_WITH_AS(DualGraph::validate({-2, -2}, {{0, 1}, {1, 0}}),
                       doctest::Contains("MalformedEdge"), Error);
  CHECK_THROWS_WITH_AS(DualGraph::validate({-2, -2}, {{0, 5}}),
                       doctest::Contains("MalformedEdge"), Error);
  CHECK_THROWS_WITH_AS(DualGraph::validate({-2, -2}, {}),
                       doctest::Contains("Disconnected"), Error);
  CHECK_THROWS_WITH_AS(DualGraph::validate({}, {}),
                       doctest::Contains("MalformedGraph"), Error);
  CHECK_THROWS_WITH_AS(DualGraph::validate({0}, {}),
                       doctest::Contains("NotNegativeDefinite"), Error);
}

TEST_CASE("intersection products") {
  DualGraph a3 = chain_an(3);
  Cycle e3 = Cycle::ones(3);
  CHECK(curve_product(a3, e3, 0) == -1);  // end curve: -2 + 1
  CHECK(intersect(a3, e3, Cycle::unit(3, 0)) == -1);
  CHECK(intersect(a3, e3, Cycle::zero(3)) == 0);

  DualGraph a4 = chain_an(4);
  CHECK(curve_product(a4, Cycle::ones(4), 1) == 0);  // 1 - 2 + 1

  CHECK_THROWS_WITH_AS(intersect(a3, e3, Cycle::ones(4)),
                       doctest::Contains("GraphMismatch"), Error);
}

TEST_CASE("intersection form is symmetric and bilinear") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    DualGraph g = random_graph(rng);
    const int n = g.vertex_count();
    Cycle z = random_cycle(rng, n, -3, 3);
    Cycle w = random_cycle(rng, n, -3, 3);
    Cycle y = random_cycle(rng, n, -3, 3);
    CHECK(intersect(g, z, w) == intersect(g, w, z));
    CHECK(intersect(g, z + w, y) == intersect(g, z, y) + intersect(g, w, y));
  }
}

TEST_CASE("canonical cycle on A_n is zero") {
  for (int n = 1; n <= 6; ++n) {
    QCycle k = canonical_cycle(chain_an(n));
    for (const auto& c : k.coeffs) CHECK(c == 0);
  }
}

TEST_CASE("canonical cycle of a single (-3)-curve is -1/3") {
  QCycle k = canonical_cycle(DualGraph::validate({-3}, {}));
  CHECK(k.coeffs[0] == Rat(-1, 3));
}

TEST_CASE("canonical cycle of the (-3,-1) chain is (0, 1)") {
  QCycle k = canonical_cycle(DualGraph::validate({-3, -1}, {{0, 1}}));
  CHECK(k.coeffs[0] == 0);
  CHECK(k.coeffs[1] == 1);
}

TEST_CASE("canonical cycle satisfies adjunction exactly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    DualGraph g = random_graph(rng);
    QCycle k = canonical_cycle(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(curve_product(g, k, v) == Rat(-g.self_int(v) - 2));
    // K.Y via the solved cycle agrees with the adjunction linear form.
    Cycle y = random_cycle(rng, g.vertex_count(), -3, 3);
    CHECK(intersect(g, k, QCycle(y)) == Rat(canonical_product(g, y)));
  }
}

TEST_CASE("fundamental cycle of A_n is the reduced chain") {
  for (int n = 1; n <= 8; ++n)
    CHECK(fundamental_cycle(chain_an(n)) == Cycle::ones(n));
}

TEST_CASE("fundamental cycle of one curve is (1)") {
  for (long s : {-1L, -2L, -5L})
    CHECK(fundamental_cycle(DualGraph::validate({s}, {})) == cyc({1}));
}

TEST_CASE("fundamental cycle of the (-2; -3^4) star is (2,1,1,1,1)") {
  DualGraph g = star(-2, {-3, -3, -3, -3});
  CHECK(fundamental_cycle(g) == cyc({2, 1, 1, 1, 1}));
}

TEST_CASE("anti-nef test") {
  DualGraph a3 = chain_an(3);
  CHECK(is_anti_nef(a3, Cycle::ones(3)));
  CHECK_FALSE(is_anti_nef(a3, cyc({1, 0, 0})));
  CHECK(is_anti_nef(a3, Cycle::zero(3)));
}

TEST_CASE("anti-nef closure") {
  DualGraph a3 = chain_an(3);
  CHECK(anti_nef_closure(a3, cyc({1, 0, 0})) == Cycle::ones(3));
  DualGraph a4 = chain_an(4);
  CHECK(anti_nef_closure(a4, cyc({1, 2, 2, 1})) == cyc({1, 2, 2, 1}));
  DualGraph a1 = chain_an(1);
  CHECK(anti_nef_closure(a1, cyc({1})) == cyc({1}));
  CHECK_THROWS_WITH_AS(anti_nef_closure(a3, Cycle::zero(3)),
                       doctest::Contains("NotEffective"), Error);
}

TEST_CASE("anti-nef closure is idempotent, monotone, and above the input") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    DualGraph g = random_graph(rng);
    const int n = g.vertex_count();
    Cycle z = random_cycle(rng, n, 0, 3);
    if (z.is_zero()) z.coeffs[0] = 1;
    Cycle closed = anti_nef_closure(g, z);
    CHECK(is_anti_nef(g, closed));
    CHECK(leq(z, closed));
    CHECK(anti_nef_closure(g, closed) == closed);
    Cycle bigger = z;
    bigger.coeffs[rng() % n] += 1 + rng() % 2;
    CHECK(leq(closed, anti_nef_closure(g, bigger)));
  }
}

TEST_CASE("fundamental cycle is below every single-curve closure") {
  for (int n = 1; n <= 6; ++n) {
    DualGraph g = chain_an(n);
    Cycle zf = fundamental_cycle(g);
    for (int v = 0; v < n; ++v)
      CHECK(leq(zf, anti_nef_closure(g, Cycle::unit(n, v))));
  }
}

TEST_CASE("arithmetic genus values") {
  DualGraph a3 = chain_an(3);
  CHECK(arithmetic_genus(a3, Cycle::ones(3)) == 0);
  CHECK(arithmetic_genus(a3, Cycle::zero(3)) == 1);
  DualGraph st = star(-2, {-3, -3, -3, -3});
  CHECK(arithmetic_genus(st, cyc({2, 1, 1, 1, 1})) == 1);
}

TEST_CASE("genus additivity p_a(Y+Y') = p_a(Y) + p_a(Y') + Y.Y' - 1") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    DualGraph g = random_graph(rng);
    const int n = g.vertex_count();
    Cycle y = random_cycle(rng, n, -3, 3);
    Cycle w = random_cycle(rng, n, -3, 3);
    CHECK(arithmetic_genus(g, y + w) ==
          arithmetic_genus(g, y) + arithmetic_genus(g, w) +
              intersect(g, y, w) - 1);
  }
}

TEST_CASE("colength values") {
  for (int n = 1; n <= 8; ++n) CHECK(colength(chain_an(n), Cycle::ones(n)) == 1);
  CHECK(colength(chain_an(1), cyc({2})) == 4);  // length of A/m^2 for the cone
  CHECK(colength(chain_an(4), cyc({1, 2, 2, 1})) == 2);
}

TEST_CASE("colength rejects bad input") {
  DualGraph a3 = chain_an(3);
  CHECK_THROWS_WITH_AS(colength(a3, cyc({1, 0, 0})),
                       doctest::Contains("NotAntiNef"), Error);
  CHECK_THROWS_WITH_AS(colength(a3, Cycle::zero(3)),
                       doctest::Contains("NotAntiNef"), Error);
  DualGraph st = star(-2, {-3, -3, -3, -3});
  CHECK_THROWS_WITH_AS(colength(st, fundamental_cycle(st)),
                       doctest::Contains("NotRational"), Error);
}

TEST_CASE("rationality detection") {
  for (int n = 1; n <= 8; ++n) CHECK(is_rational(chain_an(n)));
  for (long s : {-1L, -2L, -7L})
    CHECK(is_rational(DualGraph::validate({s}, {})));
  CHECK_FALSE(is_rational(star(-2, {-3, -3, -3, -3})));
}

TEST_CASE("on rational graphs every small effective cycle has p_a <= 0") {
  for (int n = 1; n <= 4; ++n) {
    DualGraph g = chain_an(n);
    std::vector<long> v(n, 0);
    for (;;) {
      int i = 0;
      while (i < n && v[i] == 3) v[i++] = 0;
      if (i == n) break;
      ++v[i];
      CHECK(arithmetic_genus(g, cyc(v)) <= 0);
    }
  }
}

TEST_CASE("colength is strictly monotone on nested anti-nef cycles") {
  for (int n = 1; n <= 4; ++n) {
    DualGraph g = chain_an(n);
    auto cycles = anti_nef_cycles_up_to(g, 4, 50);
    for (const auto& z1 : cycles)
      for (const auto& z2 : cycles)
        if (leq(z1, z2) && !(z1 == z2))
          CHECK(colength(g, z1) < colength(g, z2));
  }
}
