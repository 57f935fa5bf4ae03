#include "antinef/monomial.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"

namespace antinef {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> minimal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (divides(m, g)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }
  return minimal;
}

// Membership of v in conv(points) + R_{>=0}^d for an arbitrary
// divisibility-minimal point set (not necessarily m-primary; np_vertices
// tests generators against the remaining ones).
bool member_of(int dim, const std::vector<Exponent>& points, const Exponent& v);

// d = 2: the polyhedron is cut out by x >= min x, y >= min y, and one
// inequality per lower-hull edge. Points arrive sorted lexicographically,
// hence x increasing and (being minimal) y strictly decreasing.
bool member_2d(const std::vector<Exponent>& points, const Exponent& v) {
  if (points.empty()) return false;
  long vx = v[0], vy = v[1];
  if (vx < points.front()[0]) return false;
  if (vy < points.back()[1]) return false;
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : points) {
    std::pair<long, long> q{p[0], p[1]};
    while (hull.size() >= 2) {
      auto [ax, ay] = hull[hull.size() - 2];
      auto [bx, by] = hull.back();
      // pop b when the chain a -> b -> q fails to bend away from the origin
      if ((bx - ax) * (q.second - ay) - (by - ay) * (q.first - ax) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    auto [px, py] = hull[i];
    auto [qx, qy] = hull[i + 1];
    if ((qx - px) * (vy - py) - (qy - py) * (vx - px) < 0) return false;
  }
  return true;
}

// d >= 3: feasibility of { lambda >= 0, slack >= 0 :
//   sum lambda_j = 1, sum lambda_j p_j + slack = v }.
bool member_lp(int dim, const std::vector<Exponent>& points, const Exponent& v) {
  if (points.empty()) return false;
  const std::size_t n = points.size();
  detail::RatMatrix a(dim + 1, std::vector<Rat>(n + dim, Rat(0)));
  std::vector<Rat> b(dim + 1);
  for (int i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = points[j][i];
    a[i][n + i] = 1;
    b[i] = v[i];
  }
  for (std::size_t j = 0; j < n; ++j) a[dim][j] = 1;
  b[dim] = 1;
  return detail::lp_feasible(std::move(a), std::move(b));
}

bool member_of(int dim, const std::vector<Exponent>& points, const Exponent& v) {
  // Divisibility is the cheap sufficient case in every dimension.
  for (const auto& p : points)
    if (divides(p, v)) return true;
  return dim == 2 ? member_2d(points, v) : member_lp(dim, points, v);
}

void require_primary(const MonomialIdeal& ideal, const char* op) {
  if (!is_m_primary(ideal))
    fail("NotPrimary", std::string(op) + " needs an m-primary ideal");
}

// Componentwise maximum over the generators; minimal generators of the
// closure never leave this box.
Exponent bounding_box(const MonomialIdeal& ideal) {
  Exponent box(ideal.dim(), 0);
  for (const auto& g : ideal.gens())
    for (int i = 0; i < ideal.dim(); ++i) box[i] = std::max(box[i], g[i]);
  return box;
}

template <typename Fn>
void for_each_in_box(const Exponent& box, Fn&& fn) {
  Exponent v(box.size(), 0);
  for (;;) {
    fn(const_cast<const Exponent&>(v));
    std::size_t i = 0;
    while (i < v.size() && v[i] == box[i]) v[i++] = 0;
    if (i == v.size()) return;
    ++v[i];
  }
}

// Staircase grows by exactly {v}: v must be a Newton vertex of an
// integrally closed ideal. The output is provably closed again; the checks
// stay on as an invariant trap.
MonomialIdeal remove_staircase_point(const MonomialIdeal& ideal,
                                     const Exponent& v) {
  std::vector<Exponent> gens;
  for (const auto& g : ideal.gens())
    if (g != v) gens.push_back(g);
  for (int i = 0; i < ideal.dim(); ++i) {
    Exponent up = v;
    up[i] += 1;
    gens.push_back(std::move(up));
  }
  MonomialIdeal out = MonomialIdeal::make(ideal.dim(), std::move(gens));
  if (colength(out) != colength(ideal) + 1)
    fail("ValidationFailure", "staircase removal did not add one point");
  if (!is_integrally_closed(out))
    fail("ValidationFailure", "staircase removal left the closed locus");
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(int dim, std::vector<Exponent> gens) {
  if (dim < 2) fail("BadBounds", "dimension must be at least 2");
  if (gens.empty()) fail("Empty", "no generators");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      fail("BadBounds", "exponent vector length does not match dim");
    for (int e : g)
      if (e < 0) fail("BadBounds", "negative exponent");
  }
  MonomialIdeal ideal;
  ideal.dim_ = dim;
  ideal.gens_ = minimalize(std::move(gens));
  return ideal;
}

bool contains(const MonomialIdeal& ideal, const Exponent& v) {
  if (static_cast<int>(v.size()) != ideal.dim())
    fail("BadBounds", "exponent vector length does not match dim");
  for (const auto& g : ideal.gens())
    if (divides(g, v)) return true;
  return false;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  for (int axis = 0; axis < ideal.dim(); ++axis) {
    bool found = false;
    for (const auto& g : ideal.gens()) {
      bool pure = g[axis] >= 1;
      for (int i = 0; pure && i < ideal.dim(); ++i)
        if (i != axis && g[i] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Int colength(const MonomialIdeal& ideal) {
  require_primary(ideal, "colength");
  Exponent box = bounding_box(ideal);
  for (auto& b : box) b -= 1;  // staircase lives strictly under the pure powers
  Int count = 0;
  for_each_in_box(box, [&](const Exponent& v) {
    if (!contains(ideal, v)) ++count;
  });
  return count;
}

bool newton_member(const MonomialIdeal& ideal, const Exponent& v) {
  if (static_cast<int>(v.size()) != ideal.dim())
    fail("BadBounds", "exponent vector length does not match dim");
  return member_of(ideal.dim(), ideal.gens(), v);
}

MonomialIdeal newton_closure(const MonomialIdeal& ideal) {
  require_primary(ideal, "newton_closure");
  std::vector<Exponent> members;
  for_each_in_box(bounding_box(ideal), [&](const Exponent& v) {
    if (contains(ideal, v) || member_of(ideal.dim(), ideal.gens(), v))
      members.push_back(v);
  });
  return MonomialIdeal::make(ideal.dim(), std::move(members));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  return newton_closure(ideal) == ideal;
}

std::vector<Exponent> np_vertices(const MonomialIdeal& ideal) {
  require_primary(ideal, "np_vertices");
  std::vector<Exponent> vertices;
  for (const auto& g : ideal.gens()) {
    std::vector<Exponent> rest;
    for (const auto& other : ideal.gens())
      if (other != g) rest.push_back(other);
    if (!member_of(ideal.dim(), rest, g)) vertices.push_back(g);
  }
  return vertices;  // gens are sorted, so vertices come out sorted
}

std::vector<MonomialIdeal> adjacent_below(const MonomialIdeal& ideal) {
  require_primary(ideal, "adjacent_below");
  if (!is_integrally_closed(ideal))
    fail("NotIntegrallyClosed", "ideal is not integrally closed");
  std::vector<MonomialIdeal> out;
  for (const auto& v : np_vertices(ideal))
    out.push_back(remove_staircase_point(ideal, v));
  return out;
}

std::vector<MonomialIdeal> chain(const MonomialIdeal& from,
                                 const MonomialIdeal& to) {
  if (from.dim() != to.dim())
    fail("NotNested", "ideals live in different dimensions");
  require_primary(from, "chain");
  require_primary(to, "chain");
  for (const auto& g : to.gens())
    if (!contains(from, g))
      fail("NotNested", "target is not contained in the source");
  if (!is_integrally_closed(from) || !is_integrally_closed(to))
    fail("NotIntegrallyClosed", "chain endpoints must be integrally closed");

  std::vector<MonomialIdeal> steps;
  MonomialIdeal cur = from;
  while (!(cur == to)) {
    // Smallest Newton vertex outside the target; one exists while the
    // ideals differ, else the polyhedra (hence the closed ideals) coincide.
    Exponent pick;
    for (const auto& v : np_vertices(cur))
      if (!contains(to, v)) {
        pick = v;
        break;
      }
    if (pick.empty())
      fail("ValidationFailure", "no removable vertex outside target");
    cur = remove_staircase_point(cur, pick);
    steps.push_back(cur);
  }
  return steps;
}

MonomialIdeal power_ideal(int dim, int n) {
  if (dim < 2 || n < 1) fail("BadBounds", "need dim >= 2 and n >= 1");
  std::vector<Exponent> gens;
  Exponent v(dim, 0);
  v[0] = n;
  for (;;) {
    gens.push_back(v);
    // next composition of n, lexicographic
    int i = 0;
    while (i < dim - 1 && v[i] == 0) ++i;
    if (i == dim - 1) break;
    int moved = v[i];
    v[i] = 0;
    v[i + 1] += 1;
    v[0] = moved - 1;
  }
  return MonomialIdeal::make(dim, std::move(gens));
}

bool power_plus_monomial_closed(int n, const Exponent& v) {
  if (n < 2) fail("BadBounds", "need n >= 2");
  const int dim = static_cast<int>(v.size());
  if (dim < 2) fail("BadBounds", "dimension must be at least 2");
  int total = 0;
  for (int e : v) {
    if (e < 0) fail("BadBounds", "negative exponent");
    total += e;
  }
  if (total != n - 1) fail("BadBounds", "monomial degree must be n - 1");
  std::vector<Exponent> gens = power_ideal(dim, n).gens();
  gens.push_back(v);
  return is_integrally_closed(MonomialIdeal::make(dim, std::move(gens)));
}

ColengthEnumeration enumerate_colength(int n, int cap) {
  if (n < 1 || n > cap)
    fail("BadBounds", "colength " + std::to_string(n) +
                          " outside [1, " + std::to_string(cap) + "]");

  // Staircases of area n in d = 2 are the partitions of n: parts are column
  // heights, left to right.
  ColengthEnumeration result;
  std::vector<int> parts;
  auto emit = [&]() {
    std::vector<Exponent> gens;
    gens.push_back({0, parts[0]});
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] < parts[i - 1])
        gens.push_back({static_cast<int>(i), parts[i]});
    gens.push_back({static_cast<int>(parts.size()), 0});
    MonomialIdeal ideal = MonomialIdeal::make(2, std::move(gens));
    result.total += 1;
    if (is_integrally_closed(ideal))
      result.ic += 1;
    else
      result.witnesses.push_back(std::move(ideal));
  };
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  descend(descend, n, n);
  return result;
}

}  // namespace antinef
