#pragma once

#include <gmpxx.h>

#include <string>

namespace antinef {

// Exact arithmetic throughout: arbitrary-precision integers and rationals,
// never floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

// "n" or "n/d", canonical (gcd 1, positive denominator).
inline std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat x(s);
  x.canonicalize();
  return x;
}

}  // namespace antinef
