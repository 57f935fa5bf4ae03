#include "antinef/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "linalg.hpp"

namespace antinef {

namespace {

constexpr long kIterationCap = 1000000;

void require_size(const DualGraph& g, int size, const char* what) {
  if (size != g.vertex_count())
    fail("GraphMismatch", std::string(what) + ": cycle has " +
                              std::to_string(size) + " entries, graph has " +
                              std::to_string(g.vertex_count()) + " vertices");
}

// Sylvester: M is negative definite iff (-1)^k det(M_k) > 0 for every
// leading principal k x k block. Fraction-free (Bareiss) elimination keeps
// det(M_{k+1}) in A[k][k]; a wrong-signed or vanishing pivot settles the
// question immediately, so no pivoting is ever needed.
void check_negative_definite(const std::vector<long>& self_ints,
                             const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(self_ints.size());
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = self_ints[i];
    for (int j : adjacency[i]) a[i][j] = 1;
  }
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const Int& minor = a[k][k];  // det of the leading (k+1)-block
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minor) != expected)
      fail("NotNegativeDefinite",
           "leading principal minor " + std::to_string(k + 1) +
               " has determinant " + minor.get_str());
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
}

}  // namespace

DualGraph DualGraph::validate(std::vector<long> self_ints,
                              std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(self_ints.size());
  if (n == 0) fail("MalformedGraph", "graph has no vertices");

  DualGraph g;
  g.adjacency_.assign(n, {});
  for (auto& e : edges) {
    auto [a, b] = e;
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail("MalformedEdge", "edge endpoint out of range");
    if (a == b) fail("MalformedEdge", "self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    e = {a, b};
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail("MalformedEdge", "multi-edge");
  for (auto [a, b] : edges) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }

  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
  }
  if (reached != n) fail("Disconnected", "exceptional set is not connected");

  check_negative_definite(self_ints, g.adjacency_);

  g.self_ints_ = std::move(self_ints);
  g.edges_ = std::move(edges);
  return g;
}

bool DualGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

Cycle Cycle::unit(int n, int v) {
  Cycle z = zero(n);
  z.coeffs[v] = 1;
  return z;
}

bool Cycle::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool Cycle::is_effective() const {
  for (const auto& c : coeffs)
    if (c < 0) return false;
  return true;
}

Cycle operator+(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) fail("GraphMismatch", "cycle lengths differ");
  Cycle r = a;
  for (int i = 0; i < b.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Cycle operator-(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) fail("GraphMismatch", "cycle lengths differ");
  Cycle r = a;
  for (int i = 0; i < b.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

bool leq(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) fail("GraphMismatch", "cycle lengths differ");
  for (int i = 0; i < a.size(); ++i)
    if (a.coeffs[i] > b.coeffs[i]) return false;
  return true;
}

QCycle::QCycle(const Cycle& z) {
  coeffs.reserve(z.coeffs.size());
  for (const auto& c : z.coeffs) coeffs.emplace_back(c);
}

QCycle operator+(const QCycle& a, const QCycle& b) {
  if (a.size() != b.size()) fail("GraphMismatch", "cycle lengths differ");
  QCycle r = a;
  for (int i = 0; i < b.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

namespace {

template <typename C, typename V>
V intersect_impl(const DualGraph& g, const C& z, const C& w) {
  V total = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    total += V(g.self_int(i)) * z.coeffs[i] * w.coeffs[i];
  for (auto [a, b] : g.edges())
    total += z.coeffs[a] * w.coeffs[b] + z.coeffs[b] * w.coeffs[a];
  return total;
}

template <typename C, typename V>
V curve_product_impl(const DualGraph& g, const C& z, int v) {
  V total = V(g.self_int(v)) * z.coeffs[v];
  for (int u : g.neighbors(v)) total += z.coeffs[u];
  return total;
}

}  // namespace

Int intersect(const DualGraph& g, const Cycle& z, const Cycle& w) {
  require_size(g, z.size(), "intersect");
  require_size(g, w.size(), "intersect");
  return intersect_impl<Cycle, Int>(g, z, w);
}

Rat intersect(const DualGraph& g, const QCycle& z, const QCycle& w) {
  require_size(g, z.size(), "intersect");
  require_size(g, w.size(), "intersect");
  return intersect_impl<QCycle, Rat>(g, z, w);
}

Int curve_product(const DualGraph& g, const Cycle& z, int v) {
  require_size(g, z.size(), "curve_product");
  return curve_product_impl<Cycle, Int>(g, z, v);
}

Rat curve_product(const DualGraph& g, const QCycle& z, int v) {
  require_size(g, z.size(), "curve_product");
  return curve_product_impl<QCycle, Rat>(g, z, v);
}

Int canonical_product(const DualGraph& g, const Cycle& y) {
  require_size(g, y.size(), "canonical_product");
  Int total = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    total += y.coeffs[i] * Int(-g.self_int(i) - 2);
  return total;
}

QCycle canonical_cycle(const DualGraph& g) {
  const int n = g.vertex_count();
  detail::RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> rhs(n);
  for (int i = 0; i < n; ++i) {
    m[i][i] = g.self_int(i);
    for (int j : g.neighbors(i)) m[i][j] = 1;
    rhs[i] = -g.self_int(i) - 2;
  }
  QCycle k(detail::solve_linear(std::move(m), std::move(rhs)));
  for (auto& c : k.coeffs) c.canonicalize();
  return k;
}

namespace {

// Shared increment loop: add the lowest-index curve with positive product
// until none remains.
Cycle increment_to_anti_nef(const DualGraph& g, Cycle z) {
  for (long iter = 0; iter < kIterationCap; ++iter) {
    int next = -1;
    for (int v = 0; v < g.vertex_count() && next < 0; ++v)
      if (curve_product_impl<Cycle, Int>(g, z, v) > 0) next = v;
    if (next < 0) return z;
    z.coeffs[next] += 1;
  }
  fail("NonTerminating", "increment loop exceeded the iteration cap");
}

}  // namespace

Cycle fundamental_cycle(const DualGraph& g) {
  return increment_to_anti_nef(g, Cycle::unit(g.vertex_count(), 0));
}

bool is_anti_nef(const DualGraph& g, const Cycle& z) {
  require_size(g, z.size(), "is_anti_nef");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (curve_product_impl<Cycle, Int>(g, z, v) > 0) return false;
  return true;
}

Cycle anti_nef_closure(const DualGraph& g, Cycle z) {
  require_size(g, z.size(), "anti_nef_closure");
  if (!z.is_nonzero_effective())
    fail("NotEffective", "anti_nef_closure needs a nonzero effective cycle");
  return increment_to_anti_nef(g, std::move(z));
}

Int arithmetic_genus(const DualGraph& g, const Cycle& y) {
  require_size(g, y.size(), "arithmetic_genus");
  Int s = intersect_impl<Cycle, Int>(g, y, y) + canonical_product(g, y);
  if (!is_even(s))
    fail("ParityViolation", "Y^2 + K.Y is odd: " + s.get_str());
  return s / 2 + 1;
}

Int colength(const DualGraph& g, const Cycle& z) {
  require_size(g, z.size(), "colength");
  if (!is_rational(g))
    fail("NotRational", "colength needs a rational graph");
  if (!z.is_nonzero_effective() || !is_anti_nef(g, z))
    fail("NotAntiNef", "colength needs a nonzero effective anti-nef cycle");
  Int s = intersect_impl<Cycle, Int>(g, z, z) + canonical_product(g, z);
  if (!is_even(s))
    fail("ParityViolation", "Z^2 + K.Z is odd: " + s.get_str());
  return -s / 2;
}

bool is_rational(const DualGraph& g) {
  return arithmetic_genus(g, fundamental_cycle(g)) == 0;
}

}  // namespace antinef
