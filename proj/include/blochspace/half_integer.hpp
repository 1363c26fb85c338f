#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace blochspace {

// Angular momenta and their projections are stored as twice their value, so
// j = 3/2 is HalfInteger::from_twice(3) and j = 2 is HalfInteger::integer(2).
// All selection-rule arithmetic then stays in exact integers; no parity
// information is ever lost to floating point.
class HalfInteger {
public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger integer(int n) { return HalfInteger(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  // A magnitude must be >= 0; projections may be negative.
  constexpr bool is_valid_magnitude() const { return twice_ >= 0; }

  // True when this value is an allowed projection of magnitude j:
  // |m| <= j and m runs in integer steps from -j to j (same parity).
  constexpr bool is_projection_of(HalfInteger j) const {
    return std::abs(twice_) <= j.twice_ && (j.twice_ - twice_) % 2 == 0;
  }

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// Triangle condition |a-b| <= c <= a+b together with an integer perimeter
// a+b+c.  Both are needed for a coupling of three angular momenta to exist.
constexpr bool triangle_ok(HalfInteger a, HalfInteger b, HalfInteger c) {
  if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
  return std::abs(a.twice() - b.twice()) <= c.twice() &&
         c.twice() <= a.twice() + b.twice();
}

}  // namespace blochspace
