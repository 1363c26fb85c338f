#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace blochspace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of the form sign * sqrt(p/q) with p/q >= 0.  Coupling
// coefficients are always of this shape, so storing the sign and the exact
// squared magnitude lets them be compared, multiplied and summed (after
// squaring) without any rounding.  Zero is sign == 0 with magnitude 0.
class SignedSqrtRational {
public:
  SignedSqrtRational() : sign_(0), mag_sq_(0) {}

  // sign * sqrt(mag_sq); sign is reduced to {-1, 0, +1}.
  static SignedSqrtRational signed_sqrt(int sign, Rational mag_sq) {
    if (mag_sq < 0) throw std::invalid_argument("signed_sqrt: negative magnitude");
    SignedSqrtRational r;
    if (sign == 0 || mag_sq == 0) return r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.mag_sq_ = std::move(mag_sq);
    return r;
  }

  // The exact value r (embeds rationals: sign = sgn(r), magnitude = r^2).
  static SignedSqrtRational of_rational(const Rational& r) {
    int s = r == 0 ? 0 : (r > 0 ? 1 : -1);
    return signed_sqrt(s, r * r);
  }

  int sign() const { return sign_; }
  const Rational& magnitude_squared() const { return mag_sq_; }
  bool is_zero() const { return sign_ == 0; }

  SignedSqrtRational operator-() const { return signed_sqrt(-sign_, mag_sq_); }

  // Products stay in the same family: sqrt(p)*sqrt(q) = sqrt(p*q).
  friend SignedSqrtRational operator*(const SignedSqrtRational& a,
                                      const SignedSqrtRational& b) {
    return signed_sqrt(a.sign_ * b.sign_, a.mag_sq_ * b.mag_sq_);
  }

  friend bool operator==(const SignedSqrtRational& a,
                         const SignedSqrtRational& b) = default;

  // sign * sqrt(magnitude_squared) rounded once; the square of the result
  // matches magnitude_squared to ~1 ulp.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::sqrt(mag_sq_.convert_to<double>());
  }

private:
  int sign_;
  Rational mag_sq_;
};

}  // namespace blochspace
