#pragma once

#include "blochspace/half_integer.hpp"
#include "blochspace/signed_sqrt_rational.hpp"

namespace blochspace {

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// phase convention, evaluated exactly with the Racah factorial sum over
// arbitrary-precision rationals.
//
// Malformed (j, m) pairings (negative magnitude, |m| > j, or m not reachable
// from j in integer steps) throw std::invalid_argument.  Violated selection
// rules (M != m1 + m2, or (j1, j2, J) failing the triangle/integer-perimeter
// condition) return an exact zero.  Results are memoised; the cache is safe
// for concurrent use.
SignedSqrtRational cgc(HalfInteger j1, HalfInteger m1,
                       HalfInteger j2, HalfInteger m2,
                       HalfInteger J, HalfInteger M);

// Wigner 6j symbol {a b c; d e f}, evaluated exactly with the single Racah
// sum.  Negative magnitudes throw std::invalid_argument; any of the four
// triads (abc), (aef), (dbf), (dec) failing the triangle or integer-perimeter
// condition gives an exact zero.  Memoised, thread-safe.
SignedSqrtRational wigner6j(HalfInteger a, HalfInteger b, HalfInteger c,
                            HalfInteger d, HalfInteger e, HalfInteger f);

}  // namespace blochspace
