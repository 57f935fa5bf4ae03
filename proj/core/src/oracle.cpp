#include "antinef/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace antinef {

namespace {

bool small_prime(long p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

void check_field(long p) {
  if (p != 0 && !small_prime(p))
    fail("BadBounds", "field characteristic must be 0 or a prime <= 13");
}

void check_bounds(const OracleBounds& b) {
  if (b.n_max < 1 || b.deg_max < 1 || b.weight_bound < 1)
    fail("BadBounds", "all oracle bounds must be >= 1");
}

// ---- field contexts ------------------------------------------------------

struct RatCtx {
  static constexpr long p = 0;
  using El = Rat;
  El zero() const { return Rat(0); }
  El one() const { return Rat(1); }
  bool is_zero(const El& a) const { return a == 0; }
  El add(const El& a, const El& b) const { return a + b; }
  El sub(const El& a, const El& b) const { return a - b; }
  El mul(const El& a, const El& b) const { return a * b; }
  El div(const El& a, const El& b) const { return a / b; }
  El neg(const El& a) const { return -a; }
  El from_rat(const Rat& r) const { return r; }
  Rat to_rat(const El& a) const {
    Rat c = a;
    c.canonicalize();
    return c;
  }
};

struct FpCtx {
  long p;
  using El = long;
  El zero() const { return 0; }
  El one() const { return 1; }
  bool is_zero(El a) const { return a == 0; }
  El add(El a, El b) const { return (a + b) % p; }
  El sub(El a, El b) const { return ((a - b) % p + p) % p; }
  El mul(El a, El b) const { return (a * b) % p; }
  El div(El a, El b) const { return mul(a, inv(b)); }
  El neg(El a) const { return (p - a % p) % p; }
  El inv(El a) const {
    El r = 1, base = a % p;
    for (long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
    }
    return r;
  }
  El from_rat(const Rat& r) const {
    Rat c = r;
    c.canonicalize();
    const long d = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), p));
    if (d == 0) fail("BadBounds", "coefficient denominator not invertible mod p");
    const long n = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), p));
    return mul(n, inv(d));
  }
  Rat to_rat(El a) const { return Rat(a); }
};

template <class Ctx>
using PolyT = std::map<Exp2, typename Ctx::El>;

template <class Ctx>
void add_term(const Ctx& f, PolyT<Ctx>& q, Exp2 e, typename Ctx::El c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = q.emplace(e, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) q.erase(it);
  }
}

template <class Ctx>
PolyT<Ctx> mul(const Ctx& f, const PolyT<Ctx>& a, const PolyT<Ctx>& b) {
  PolyT<Ctx> r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      add_term(f, r, {ea[0] + eb[0], ea[1] + eb[1]}, f.mul(ca, cb));
  return r;
}

template <class Ctx>
PolyT<Ctx> add(const Ctx& f, const PolyT<Ctx>& a, const PolyT<Ctx>& b) {
  PolyT<Ctx> r = a;
  for (const auto& [e, c] : b) add_term(f, r, e, c);
  return r;
}

template <class Ctx>
PolyT<Ctx> scale(const Ctx& f, const PolyT<Ctx>& a, typename Ctx::El c) {
  PolyT<Ctx> r;
  for (const auto& [e, v] : a) add_term(f, r, e, f.mul(v, c));
  return r;
}

template <class El>
int degree(const std::map<Exp2, El>& q) {
  int d = -1;
  for (const auto& [e, c] : q) d = std::max(d, e[0] + e[1]);
  return d;
}

template <class Ctx>
PolyT<Ctx> import_poly(const Ctx& f, const Poly& q) {
  PolyT<Ctx> r;
  for (const auto& [e, c] : q) add_term(f, r, e, f.from_rat(c));
  return r;
}

template <class Ctx>
Poly export_poly(const Ctx& f, const PolyT<Ctx>& q) {
  Poly r;
  for (const auto& [e, c] : q) r.emplace(e, f.to_rat(c));
  return r;
}

// x -> m00 x + m01 y, y -> m10 x + m11 y.
template <class Ctx>
PolyT<Ctx> substitute(const Ctx& f, const PolyT<Ctx>& q,
                      const std::array<std::array<long, 2>, 2>& m) {
  PolyT<Ctx> lin_x{}, lin_y{};
  add_term(f, lin_x, {1, 0}, f.from_rat(Rat(m[0][0])));
  add_term(f, lin_x, {0, 1}, f.from_rat(Rat(m[0][1])));
  add_term(f, lin_y, {1, 0}, f.from_rat(Rat(m[1][0])));
  add_term(f, lin_y, {0, 1}, f.from_rat(Rat(m[1][1])));

  int max_x = 0, max_y = 0;
  for (const auto& [e, c] : q) {
    max_x = std::max(max_x, e[0]);
    max_y = std::max(max_y, e[1]);
  }
  std::vector<PolyT<Ctx>> pow_x(max_x + 1), pow_y(max_y + 1);
  pow_x[0] = {{{0, 0}, f.one()}};
  pow_y[0] = {{{0, 0}, f.one()}};
  for (int i = 1; i <= max_x; ++i) pow_x[i] = mul(f, pow_x[i - 1], lin_x);
  for (int i = 1; i <= max_y; ++i) pow_y[i] = mul(f, pow_y[i - 1], lin_y);

  PolyT<Ctx> r;
  for (const auto& [e, c] : q) {
    PolyT<Ctx> term = scale(f, mul(f, pow_x[e[0]], pow_y[e[1]]), c);
    r = add(f, r, term);
  }
  return r;
}

constexpr long kInfinity = std::numeric_limits<long>::max();

template <class El>
long min_valuation(const std::map<Exp2, El>& q, long w1, long w2) {
  long v = kInfinity;
  for (const auto& [e, c] : q) v = std::min(v, w1 * e[0] + w2 * e[1]);
  return v;
}

// ---- bounded-degree equation search --------------------------------------

// Particular solution of A x = b; dense Gauss-Jordan, free variables zero.
template <class Ctx>
std::optional<std::vector<typename Ctx::El>> solve_system(
    const Ctx& f, std::vector<std::vector<typename Ctx::El>>& rows,
    std::vector<typename Ctx::El>& rhs) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pr = r;
    while (pr < nrows && f.is_zero(rows[pr][c])) ++pr;
    if (pr == nrows) continue;
    std::swap(rows[pr], rows[r]);
    std::swap(rhs[pr], rhs[r]);
    const auto inv = f.div(f.one(), rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    rhs[r] = f.mul(rhs[r], inv);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      const auto factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
      rhs[i] = f.sub(rhs[i], f.mul(factor, rhs[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (!f.is_zero(rhs[i])) return std::nullopt;
  std::vector<typename Ctx::El> x(ncols, f.zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

template <class Ctx>
struct EquationResult {
  int degree;
  std::vector<PolyT<Ctx>> coefficients;
};

template <class Ctx>
std::optional<EquationResult<Ctx>> equation_search_impl(
    const Ctx& f, const PolyT<Ctx>& y, const std::vector<PolyT<Ctx>>& gens,
    const OracleBounds& bounds) {
  std::vector<PolyT<Ctx>> ypow(bounds.n_max + 1);
  ypow[0] = {{{0, 0}, f.one()}};
  for (int i = 1; i <= bounds.n_max; ++i) ypow[i] = mul(f, ypow[i - 1], y);

  // s-fold products of generators, multisets via non-decreasing indices;
  // degrees are additive, so anything past deg_max is pruned for good.
  std::vector<std::vector<std::pair<PolyT<Ctx>, std::size_t>>> products(
      bounds.n_max + 1);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (degree(gens[j]) <= bounds.deg_max)
      products[1].push_back({gens[j], j});
  for (int s = 2; s <= bounds.n_max; ++s)
    for (const auto& [prod, last] : products[s - 1])
      for (std::size_t j = last; j < gens.size(); ++j) {
        if (degree(prod) + degree(gens[j]) > bounds.deg_max) continue;
        products[s].push_back({mul(f, prod, gens[j]), j});
      }

  for (int n = 1; n <= bounds.n_max; ++n) {
    struct Column {
      int s;
      PolyT<Ctx> a_part;  // mu * product: the contribution to a_s
      PolyT<Ctx> full;    // a_part * y^(n-s)
    };
    std::vector<Column> columns;
    for (int s = 1; s <= n; ++s)
      for (const auto& [prod, last] : products[s]) {
        const int room = bounds.deg_max - degree(prod);
        for (int dx = 0; dx <= room; ++dx)
          for (int dy = 0; dy + dx <= room; ++dy) {
            PolyT<Ctx> mu{{{dx, dy}, f.one()}};
            PolyT<Ctx> a_part = mul(f, mu, prod);
            PolyT<Ctx> full = mul(f, a_part, ypow[n - s]);
            columns.push_back({s, std::move(a_part), std::move(full)});
          }
      }

    PolyT<Ctx> target = scale(f, ypow[n], f.neg(f.one()));
    std::map<Exp2, std::size_t> row_of;
    auto index_rows = [&](const PolyT<Ctx>& q) {
      for (const auto& [e, c] : q) row_of.emplace(e, row_of.size());
    };
    index_rows(target);
    for (const auto& col : columns) index_rows(col.full);

    std::vector<std::vector<typename Ctx::El>> rows(
        row_of.size(),
        std::vector<typename Ctx::El>(columns.size(), f.zero()));
    std::vector<typename Ctx::El> rhs(row_of.size(), f.zero());
    for (const auto& [e, c] : target) rhs[row_of[e]] = c;
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [e, c] : columns[j].full) rows[row_of[e]][j] = c;

    auto solution = solve_system(f, rows, rhs);
    if (!solution) continue;

    std::vector<PolyT<Ctx>> coeffs(n);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (f.is_zero((*solution)[j])) continue;
      coeffs[columns[j].s - 1] = add(
          f, coeffs[columns[j].s - 1],
          scale(f, columns[j].a_part, (*solution)[j]));
    }
    // Re-verify the identity exactly; a found solution that fails here is a
    // solver bug, not a property of the input.
    PolyT<Ctx> residual = ypow[n];
    for (int s = 1; s <= n; ++s)
      residual = add(f, residual, mul(f, coeffs[s - 1], ypow[n - s]));
    if (!residual.empty())
      fail("ValidationFailure", "integral equation failed re-verification");
    return EquationResult<Ctx>{n, std::move(coeffs)};
  }
  return std::nullopt;
}

// ---- valuation witness search --------------------------------------------

struct WitnessResult {
  std::array<long, 2> weights;
  std::array<std::array<long, 2>, 2> change;
};

template <class Ctx>
std::optional<WitnessResult> witness_search_impl(
    const Ctx& f, const PolyT<Ctx>& y, const std::vector<PolyT<Ctx>>& gens,
    const OracleBounds& bounds, const std::vector<std::array<long, 2>>& rows) {
  // `rows` lists candidate matrix rows; all invertible pairings are tried,
  // identity first (callers order the row list accordingly).
  const std::array<std::array<long, 2>, 2> identity{{{1, 0}, {0, 1}}};
  std::vector<std::array<std::array<long, 2>, 2>> changes{identity};
  for (const auto& top : rows)
    for (const auto& bottom : rows) {
      std::array<std::array<long, 2>, 2> m{top, bottom};
      if (m == identity) continue;
      long det = top[0] * bottom[1] - top[1] * bottom[0];
      if (f.p == 0 ? det == 0 : det % f.p == 0) continue;
      changes.push_back(m);
    }

  for (const auto& m : changes) {
    PolyT<Ctx> y_t = substitute(f, y, m);
    std::vector<PolyT<Ctx>> gens_t;
    gens_t.reserve(gens.size());
    for (const auto& g : gens) gens_t.push_back(substitute(f, g, m));
    for (long w1 = 1; w1 <= bounds.weight_bound; ++w1)
      for (long w2 = 1; w2 <= bounds.weight_bound; ++w2) {
        const long vy = min_valuation(y_t, w1, w2);
        long vi = kInfinity;
        for (const auto& g : gens_t)
          vi = std::min(vi, min_valuation(g, w1, w2));
        if (vy < vi) return WitnessResult{{w1, w2}, m};
      }
  }
  return std::nullopt;
}

std::vector<std::array<long, 2>> candidate_rows(long p) {
  std::vector<std::array<long, 2>> rows;
  if (p > 0) {
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        if (a != 0 || b != 0) rows.push_back({a, b});
  } else {
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        if (a != 0 || b != 0) rows.push_back({a, b});
  }
  return rows;
}

// ---- entry points ---------------------------------------------------------

std::vector<Poly> clean_gens(const std::vector<Poly>& gens, long p) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly q = poly_normalize(g, p);
    if (!q.empty()) out.push_back(std::move(q));
  }
  if (out.empty()) fail("Empty", "no nonzero generators");
  return out;
}

template <class Ctx>
Certificate run_equation(const Ctx& f, const Poly& y,
                         const std::vector<Poly>& gens,
                         const OracleBounds& bounds, long p) {
  PolyT<Ctx> yy = import_poly(f, y);
  std::vector<PolyT<Ctx>> gg;
  for (const auto& g : gens) gg.push_back(import_poly(f, g));
  Certificate cert;
  cert.p = p;
  cert.bounds = bounds;
  if (auto found = equation_search_impl(f, yy, gg, bounds)) {
    cert.verdict = Certificate::Verdict::Integral;
    cert.degree = found->degree;
    for (const auto& a : found->coefficients)
      cert.coefficients.push_back(export_poly(f, a));
  }
  return cert;
}

template <class Ctx>
Certificate run_witness(const Ctx& f, const Poly& y,
                        const std::vector<Poly>& gens,
                        const OracleBounds& bounds, long p) {
  PolyT<Ctx> yy = import_poly(f, y);
  std::vector<PolyT<Ctx>> gg;
  for (const auto& g : gens) gg.push_back(import_poly(f, g));
  Certificate cert;
  cert.p = p;
  cert.bounds = bounds;
  if (auto found = witness_search_impl(f, yy, gg, bounds, candidate_rows(p))) {
    cert.verdict = Certificate::Verdict::NotIntegral;
    cert.weights = found->weights;
    cert.change = found->change;
  }
  return cert;
}

}  // namespace

Poly poly_normalize(Poly q, long p) {
  check_field(p);
  Poly out;
  for (auto& [e, c] : q) {
    if (e[0] < 0 || e[1] < 0) fail("BadBounds", "negative exponent");
    Rat v = c;
    v.canonicalize();
    if (p != 0) v = Rat(FpCtx{p}.from_rat(v));
    if (v != 0) out.emplace(e, std::move(v));
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, long p) {
  Poly r = poly_normalize(a, p);
  for (const auto& [e, c] : poly_normalize(b, p)) {
    auto [it, inserted] = r.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (p != 0) it->second = Rat(FpCtx{p}.from_rat(it->second));
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  Poly r;
  for (const auto& [ea, ca] : poly_normalize(a, p))
    for (const auto& [eb, cb] : poly_normalize(b, p)) {
      Exp2 e{ea[0] + eb[0], ea[1] + eb[1]};
      auto [it, inserted] = r.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  return poly_normalize(std::move(r), p);
}

int poly_degree(const Poly& q) {
  int d = -1;
  for (const auto& [e, c] : q)
    if (c != 0) d = std::max(d, e[0] + e[1]);
  return d;
}

Certificate integral_equation_search(const Poly& y,
                                     const std::vector<Poly>& gens,
                                     const OracleBounds& bounds, long p) {
  check_bounds(bounds);
  check_field(p);
  const Poly yy = poly_normalize(y, p);
  const std::vector<Poly> gg = clean_gens(gens, p);
  return p == 0 ? run_equation(RatCtx{}, yy, gg, bounds, p)
                : run_equation(FpCtx{p}, yy, gg, bounds, p);
}

Certificate valuation_witness_search(const Poly& y,
                                     const std::vector<Poly>& gens,
                                     const OracleBounds& bounds, long p) {
  check_bounds(bounds);
  check_field(p);
  const Poly yy = poly_normalize(y, p);
  const std::vector<Poly> gg = clean_gens(gens, p);
  return p == 0 ? run_witness(RatCtx{}, yy, gg, bounds, p)
                : run_witness(FpCtx{p}, yy, gg, bounds, p);
}

Certificate classify(const Poly& y, const std::vector<Poly>& gens,
                     const OracleBounds& bounds, long p) {
  Certificate witness = valuation_witness_search(y, gens, bounds, p);
  if (witness.verdict == Certificate::Verdict::NotIntegral) return witness;
  Certificate equation = integral_equation_search(y, gens, bounds, p);
  if (equation.verdict == Certificate::Verdict::Integral) return equation;
  Certificate unknown;
  unknown.p = p;
  unknown.bounds = bounds;
  return unknown;
}

}  // namespace antinef
