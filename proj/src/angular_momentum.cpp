#include "blochspace/angular_momentum.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace blochspace {

namespace {

BigInt factorial(int n) {
  // Arguments here are small (bounded by the perimeter of the largest
  // coupling triangle), so a direct product is cheap and needs no cache.
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Factorial of a twice-value that selection rules guarantee to be even.
BigInt fact2(int twice) { return factorial(twice / 2); }

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!
Rational triangle_delta(int ta, int tb, int tc) {
  Rational num = fact2(ta + tb - tc) * fact2(ta - tb + tc) * fact2(-ta + tb + tc);
  return num / Rational(factorial((ta + tb + tc) / 2 + 1));
}

struct Key6 {
  std::array<int, 6> v;
  bool operator==(const Key6&) const = default;
};

struct Key6Hash {
  size_t operator()(const Key6& k) const {
    size_t h = 1469598103934665603ull;
    for (int x : k.v) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

using Cache = std::unordered_map<Key6, SignedSqrtRational, Key6Hash>;

void check_pairing(HalfInteger j, HalfInteger m, const char* name) {
  if (!j.is_valid_magnitude())
    throw std::invalid_argument(std::string("cgc: negative magnitude ") + name +
                                " = " + j.str());
  if (!m.is_projection_of(j))
    throw std::invalid_argument(std::string("cgc: projection out of range for ") +
                                name + ": m = " + m.str() + ", j = " + j.str());
}

SignedSqrtRational cgc_eval(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  // Integer building blocks of the Racah sum (full values, not twice).
  const int p1 = (tj1 + tj2 - tJ) / 2;
  const int a1 = (tj1 - tm1) / 2;
  const int a2 = (tj1 + tm1) / 2;
  const int b1 = (tj2 - tm2) / 2;
  const int b2 = (tj2 + tm2) / 2;
  const int c1 = (tJ + tM) / 2;
  const int c2 = (tJ - tM) / 2;
  const int d1 = (tJ - tj2 + tm1) / 2;
  const int d2 = (tJ - tj1 - tm2) / 2;

  const int zmin = std::max({0, -d1, -d2});
  const int zmax = std::min({p1, a1, b2});
  if (zmin > zmax) return SignedSqrtRational();

  Rational sum = 0;
  for (int z = zmin; z <= zmax; ++z) {
    Rational den = factorial(z) * factorial(p1 - z) * factorial(a1 - z) *
                   factorial(b2 - z) * factorial(d1 + z) * factorial(d2 + z);
    if (z % 2 == 0)
      sum += 1 / den;
    else
      sum -= 1 / den;
  }
  if (sum == 0) return SignedSqrtRational();

  Rational pre = Rational(tJ + 1) * triangle_delta(tj1, tj2, tJ) *
                 Rational(fact2(2 * c1) * fact2(2 * c2) * fact2(2 * a1) *
                          fact2(2 * a2) * fact2(2 * b1) * fact2(2 * b2));
  int sign = sum > 0 ? 1 : -1;
  return SignedSqrtRational::signed_sqrt(sign, pre * sum * sum);
}

SignedSqrtRational wigner6j_eval(int ta, int tb, int tc, int td, int te, int tf) {
  const int s1 = (ta + tb + tc) / 2;
  const int s2 = (ta + te + tf) / 2;
  const int s3 = (td + tb + tf) / 2;
  const int s4 = (td + te + tc) / 2;
  const int q1 = (ta + tb + td + te) / 2;
  const int q2 = (tb + tc + te + tf) / 2;
  const int q3 = (ta + tc + td + tf) / 2;

  const int zmin = std::max({s1, s2, s3, s4});
  const int zmax = std::min({q1, q2, q3});
  if (zmin > zmax) return SignedSqrtRational();

  Rational sum = 0;
  for (int z = zmin; z <= zmax; ++z) {
    Rational term = Rational(factorial(z + 1)) /
                    Rational(factorial(z - s1) * factorial(z - s2) *
                             factorial(z - s3) * factorial(z - s4) *
                             factorial(q1 - z) * factorial(q2 - z) *
                             factorial(q3 - z));
    if (z % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum == 0) return SignedSqrtRational();

  Rational pre = triangle_delta(ta, tb, tc) * triangle_delta(ta, te, tf) *
                 triangle_delta(td, tb, tf) * triangle_delta(td, te, tc);
  int sign = sum > 0 ? 1 : -1;
  return SignedSqrtRational::signed_sqrt(sign, pre * sum * sum);
}

}  // namespace

SignedSqrtRational cgc(HalfInteger j1, HalfInteger m1,
                       HalfInteger j2, HalfInteger m2,
                       HalfInteger J, HalfInteger M) {
  check_pairing(j1, m1, "j1");
  check_pairing(j2, m2, "j2");
  check_pairing(J, M, "J");

  if (M.twice() != m1.twice() + m2.twice()) return SignedSqrtRational();
  if (!triangle_ok(j1, j2, J)) return SignedSqrtRational();

  static std::mutex mu;
  static Cache cache;
  Key6 key{{j1.twice(), m1.twice(), j2.twice(), m2.twice(), J.twice(), M.twice()}};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SignedSqrtRational r =
      cgc_eval(j1.twice(), m1.twice(), j2.twice(), m2.twice(), J.twice(), M.twice());
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
  }
  return r;
}

SignedSqrtRational wigner6j(HalfInteger a, HalfInteger b, HalfInteger c,
                            HalfInteger d, HalfInteger e, HalfInteger f) {
  for (auto [j, name] : {std::pair{a, "a"}, {b, "b"}, {c, "c"},
                         {d, "d"}, {e, "e"}, {f, "f"}}) {
    if (!j.is_valid_magnitude())
      throw std::invalid_argument(std::string("wigner6j: negative magnitude ") +
                                  name + " = " + j.str());
  }
  if (!triangle_ok(a, b, c) || !triangle_ok(a, e, f) || !triangle_ok(d, b, f) ||
      !triangle_ok(d, e, c))
    return SignedSqrtRational();

  static std::mutex mu;
  static Cache cache;
  Key6 key{{a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice()}};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SignedSqrtRational r =
      wigner6j_eval(a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice());
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
  }
  return r;
}

}  // namespace blochspace
