#pragma once

// Shared test infrastructure: an exact accumulator for sums of square roots
// of rationals (so coupling-coefficient identities can be checked with zero
// tolerance), an independent recoupling-based evaluation of the 6j symbol,
// and seeded random-state generators.

#include "blochspace/angular_momentum.hpp"
#include "blochspace/bloch_codec.hpp"
#include "blochspace/complex_matrix.hpp"
#include "blochspace/half_integer.hpp"
#include "blochspace/signed_sqrt_rational.hpp"

#include <map>
#include <random>
#include <vector>

namespace testsupport {

using blochspace::BigInt;
using blochspace::BlochVector;
using blochspace::Complex;
using blochspace::ComplexMatrix;
using blochspace::HalfInteger;
using blochspace::Rational;
using blochspace::SignedSqrtRational;

// --- exact sums of square roots ----------------------------------------------
//
// A value sum_i c_i sqrt(k_i) with rational c_i and distinct squarefree
// positive integer kernels k_i is zero iff every c_i is zero, because square
// roots of distinct squarefree integers are linearly independent over the
// rationals.  All numbers in these tests factor into small primes (they come
// from factorials), so trial division always completes the decomposition.

inline void split_square(BigInt n, BigInt& square, BigInt& kernel) {
  square = 1;
  kernel = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) kernel *= p;
  }
  if (n > 1) kernel *= n;
}

class SqrtSum {
public:
  void add(const SignedSqrtRational& x) {
    if (x.is_zero()) return;
    Rational m = x.magnitude_squared();
    BigInt num = boost::multiprecision::numerator(m);
    BigInt den = boost::multiprecision::denominator(m);
    // sqrt(num/den) = sqrt(num*den) / den.
    BigInt square, kernel;
    split_square(num * den, square, kernel);
    Rational coeff = Rational(square, den);
    if (x.sign() < 0) coeff = -coeff;
    Rational& slot = terms_[kernel];
    slot += coeff;
    if (slot == 0) terms_.erase(kernel);
  }

  bool is_zero() const { return terms_.empty(); }

  bool equals(const SignedSqrtRational& x) const {
    SqrtSum diff = *this;
    diff.add(-x);
    return diff.is_zero();
  }

  double to_double() const {
    double acc = 0.0;
    for (const auto& [kernel, coeff] : terms_)
      acc += coeff.convert_to<double>() *
             std::sqrt(kernel.convert_to<double>());
    return acc;
  }

private:
  std::map<BigInt, Rational> terms_;
};

// --- independent 6j evaluation ------------------------------------------------
//
// The recoupling bracket <(ab)c, d; e | a, (bd)f; e> equals both the fourfold
// coupling-coefficient contraction below (at any fixed total projection) and
// (-1)^{a+b+d+e} sqrt((2c+1)(2f+1)) {a b c; d e f}.  Comparing the two sides
// exactly validates the single-sum 6j implementation against nothing but the
// coupling coefficients themselves.

inline bool sixj_matches_contraction(HalfInteger a, HalfInteger b, HalfInteger c,
                                     HalfInteger d, HalfInteger e, HalfInteger f) {
  using blochspace::cgc;
  // Fix the total projection to the smallest value allowed by parity.
  HalfInteger m_tot = HalfInteger::from_twice(e.twice() % 2 == 0 ? 0 : 1);

  SqrtSum lhs;
  for (int tm1 = -a.twice(); tm1 <= a.twice(); tm1 += 2)
    for (int tm3 = -d.twice(); tm3 <= d.twice(); tm3 += 2) {
      HalfInteger m1 = HalfInteger::from_twice(tm1);
      HalfInteger m3 = HalfInteger::from_twice(tm3);
      HalfInteger m2 = HalfInteger::from_twice(m_tot.twice() - tm1 - tm3);
      if (!m2.is_projection_of(b)) continue;
      HalfInteger m12 = m1 + m2;
      HalfInteger m23 = m2 + m3;
      if (!m12.is_projection_of(c)) continue;
      if (!m23.is_projection_of(f)) continue;
      SignedSqrtRational term = cgc(a, m1, b, m2, c, m12) * cgc(c, m12, d, m3, e, m_tot) *
                                cgc(b, m2, d, m3, f, m23) * cgc(a, m1, f, m23, e, m_tot);
      lhs.add(term);
    }

  SignedSqrtRational rhs =
      blochspace::wigner6j(a, b, c, d, e, f) *
      SignedSqrtRational::signed_sqrt(
          1, Rational((c.twice() + 1) * (f.twice() + 1)));
  int exponent_twice = a.twice() + b.twice() + d.twice() + e.twice();
  // a+b+d+e is an integer whenever all four triads close; a half-integer sum
  // means some triad failed, in which case both sides must vanish.
  if (exponent_twice % 2 != 0) return lhs.is_zero() && rhs.is_zero();
  if ((exponent_twice / 2) % 2 != 0) rhs = -rhs;
  return lhs.equals(rhs);
}

// --- random states -------------------------------------------------------------

inline ComplexMatrix random_ginibre(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Complex(g(rng), g(rng));
  return a;
}

// G G^dagger / Tr: a full-rank positive density matrix almost surely.
inline ComplexMatrix random_density(std::mt19937_64& rng, int n) {
  ComplexMatrix g = random_ginibre(rng, n);
  ComplexMatrix a = g * g.dagger();
  Complex tr = a.trace();
  a *= Complex(1.0 / tr.real(), 0.0);
  return a;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix g = random_ginibre(rng, n);
  ComplexMatrix a = g;
  a += g.dagger();
  a *= Complex(0.5, 0.0);
  return a;
}

// Rank-one projector onto a random complex direction.
inline ComplexMatrix random_pure(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> psi(n);
  double norm_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    psi[i] = Complex(g(rng), g(rng));
    norm_sq += std::norm(psi[i]);
  }
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = psi[i] * std::conj(psi[j]) / norm_sq;
  return a;
}

// Hermitian unit-trace matrix that is often indefinite: a signed mixture of
// two positive states stretched beyond the convex range.
inline ComplexMatrix random_indefinite(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 0.6);
  double lam = u(rng);
  ComplexMatrix a = random_density(rng, n);
  ComplexMatrix b = random_density(rng, n);
  a *= Complex(1.0 + lam, 0.0);
  b *= Complex(lam, 0.0);
  a -= b;
  return a;
}

inline BlochVector random_bloch(std::mt19937_64& rng, int two_j, double half_width) {
  const int n = two_j + 1;
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<double> p(n * n - 1);
  for (double& x : p) x = u(rng);
  return BlochVector::from_real_params(two_j, p);
}

}  // namespace testsupport
