#include "antinef/fiber_cone.hpp"

#include <algorithm>
#include <map>

namespace antinef {

namespace {

bool small_prime(long p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

long mod_norm(long v, long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

long mod_pow(long base, int exp, long p) {
  long r = 1;
  base = mod_norm(base, p);
  for (int i = 0; i < exp; ++i) r = (r * base) % p;
  return r;
}

long mod_inv(long a, long p) {
  // p prime and small; Fermat
  return mod_pow(a, static_cast<int>(p - 2), p);
}

// Reduce a rational into F_p; the denominator must be invertible.
// mpz_fdiv_ui already yields the non-negative floor remainder.
long to_fp(const Rat& x, long p, const char* error_kind) {
  Rat c = x;
  c.canonicalize();
  const long d = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), p));
  if (d == 0) fail(error_kind, "denominator not invertible mod p");
  const long n = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), p));
  return mod_norm(n * mod_inv(d, p), p);
}

void check_field(const FieldSpec& field) {
  if (field.p != 0 && !small_prime(field.p))
    fail("BadBounds", "field characteristic must be 0 or a prime <= 13");
}

}  // namespace

FiberConePresentation FiberConePresentation::make(
    int num_vars, FieldSpec field, std::vector<Relation> relations) {
  if (num_vars < 1) fail("BadBounds", "presentation needs at least one variable");
  check_field(field);

  FiberConePresentation pres;
  pres.num_vars_ = num_vars;
  pres.field_ = field;
  for (auto& relation : relations) {
    std::map<std::vector<int>, Rat> combined;
    for (auto& term : relation) {
      if (static_cast<int>(term.exps.size()) != num_vars)
        fail("MalformedRelation", "term arity does not match num_vars");
      for (int e : term.exps)
        if (e < 0) fail("MalformedRelation", "negative exponent");
      combined[term.exps] += term.coeff;
    }
    Relation canonical;
    int degree = -1;
    for (auto& [exps, coeff] : combined) {
      coeff.canonicalize();
      if (field.is_prime_field()) {
        long r = to_fp(coeff, field.p, "MalformedRelation");
        if (r == 0) continue;
        coeff = Rat(r);
      } else if (coeff == 0) {
        continue;
      }
      int total = 0;
      for (int e : exps) total += e;
      if (degree == -1) degree = total;
      if (total != degree)
        fail("MalformedRelation", "relation is not homogeneous");
      canonical.push_back({coeff, exps});
    }
    if (canonical.empty())
      fail("MalformedRelation", "relation is zero");
    pres.relations_.push_back(std::move(canonical));
  }
  return pres;
}

ProjectivePoint ProjectivePoint::make(std::vector<Rat> coords, FieldSpec field) {
  check_field(field);
  if (coords.empty()) fail("MalformedPoint", "no coordinates");
  if (field.is_prime_field())
    for (auto& c : coords) c = Rat(to_fp(c, field.p, "MalformedPoint"));
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead] == 0) ++lead;
  if (lead == coords.size()) fail("MalformedPoint", "all coordinates are zero");

  ProjectivePoint point;
  point.field_ = field;
  if (field.is_prime_field()) {
    const long inv = mod_inv(coords[lead].get_num().get_si(), field.p);
    for (auto& c : coords)
      c = Rat(mod_norm(c.get_num().get_si() * inv, field.p));
  } else {
    const Rat scale = coords[lead];
    for (auto& c : coords) {
      c /= scale;
      c.canonicalize();
    }
  }
  point.coords_ = std::move(coords);
  return point;
}

bool is_adjacent_point(const FiberConePresentation& pres,
                       const ProjectivePoint& point) {
  if (static_cast<int>(point.coords().size()) != pres.num_vars())
    fail("DimensionMismatch",
         "point has " + std::to_string(point.coords().size()) +
             " coordinates, presentation has " +
             std::to_string(pres.num_vars()) + " variables");
  if (!(point.field() == pres.field()))
    fail("DimensionMismatch", "point and presentation fields differ");

  const long p = pres.field().p;
  for (const auto& relation : pres.relations()) {
    if (p != 0) {
      long value = 0;
      for (const auto& term : relation) {
        long m = term.coeff.get_num().get_si();
        for (int i = 0; i < pres.num_vars(); ++i)
          m = (m * mod_pow(point.coords()[i].get_num().get_si(), term.exps[i],
                           p)) %
              p;
        value = mod_norm(value + m, p);
      }
      if (value != 0) return false;
    } else {
      Rat value(0);
      for (const auto& term : relation) {
        Rat m = term.coeff;
        for (int i = 0; i < pres.num_vars(); ++i)
          for (int rep = 0; rep < term.exps[i]; ++rep)
            m *= point.coords()[i];
        value += m;
      }
      if (value != 0) return false;
    }
  }
  return true;
}

std::vector<ProjectivePoint> enumerate_points(
    const FiberConePresentation& pres) {
  const long p = pres.field().p;
  if (p == 0)
    fail("BadBounds", "point enumeration needs a prime field");
  const int m = pres.num_vars();

  std::vector<ProjectivePoint> hits;
  // Canonical representatives: leading coordinate index ascending, then the
  // free coordinates counting up in base p.
  for (int lead = 0; lead < m; ++lead) {
    const int tail = m - lead - 1;
    std::vector<long> digits(tail, 0);
    for (;;) {
      std::vector<Rat> coords(m, Rat(0));
      coords[lead] = 1;
      for (int i = 0; i < tail; ++i) coords[lead + 1 + i] = Rat(digits[i]);
      ProjectivePoint point = ProjectivePoint::make(coords, pres.field());
      if (is_adjacent_point(pres, point)) hits.push_back(std::move(point));
      int i = tail - 1;
      while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
  return hits;
}

FiberConePresentation builtin_presentation(const std::string& name, int n,
                                           FieldSpec field) {
  if (name == "an_maximal_ideal") {
    if (n < 1) fail("BadBounds", "an_maximal_ideal needs n >= 1");
    Relation r;
    if (n == 1)
      r = {{Rat(1), {1, 1, 0}}, {Rat(-1), {0, 0, 2}}};  // XY - Z^2
    else
      r = {{Rat(1), {1, 1, 0}}};  // XY
    return FiberConePresentation::make(3, field, {r});
  }
  if (name == "veronese_m2") {
    Relation r = {{Rat(1), {0, 2, 0}}, {Rat(-1), {1, 0, 1}}};  // b^2 - ac
    return FiberConePresentation::make(3, field, {r});
  }
  fail("UnknownBuiltin", "no builtin presentation named '" + name + "'");
}

}  // namespace antinef
