#include "blochspace/positivity.hpp"

#include "blochspace/bloch_codec.hpp"
#include "blochspace/complex_matrix.hpp"
#include "blochspace/cross_sections.hpp"
#include "blochspace/validation.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace blochspace;
using testsupport::random_bloch;
using testsupport::random_density;
using testsupport::random_hermitian;
using testsupport::random_indefinite;
using testsupport::random_pure;

TEST_CASE("characteristic coefficients of the maximally mixed state") {
  ComplexMatrix rho = Complex(1.0 / 3.0, 0.0) * ComplexMatrix::identity(3);
  std::vector<double> s = char_poly_coeffs(rho);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(s[2] == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("first coefficients have their closed forms") {
  std::mt19937_64 rng(61);
  for (int n = 3; n <= 5; ++n)
    for (int rep = 0; rep < 50; ++rep) {
      ComplexMatrix rho = random_density(rng, n);
      std::vector<double> s = char_poly_coeffs(rho);
      double tr2 = (rho * rho).trace().real();
      CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(s[1] == doctest::Approx(0.5 * (1.0 - tr2)).epsilon(1e-12));
      // The last coefficient is the determinant.
      CHECK(s[n - 1] ==
            doctest::Approx(rho.determinant().real()).epsilon(1e-10));
    }
}

TEST_CASE("matrix route and vector route agree") {
  std::mt19937_64 rng(67);
  for (int two_j = 1; two_j <= 5; ++two_j)
    for (int rep = 0; rep < 40; ++rep) {
      BlochVector v = random_bloch(rng, two_j, 0.4);
      std::vector<double> from_vec = s_from_bloch(v);
      std::vector<double> from_mat = char_poly_coeffs(bloch_to_density(v));
      REQUIRE(from_vec.size() == from_mat.size());
      for (size_t k = 0; k < from_vec.size(); ++k)
        CHECK(from_vec[k] == doctest::Approx(from_mat[k]).epsilon(1e-10));
    }
}

TEST_CASE("trace powers: binomial reconstruction matches direct traces") {
  std::mt19937_64 rng(71);
  for (int two_j = 1; two_j <= 4; ++two_j)
    for (int rep = 0; rep < 30; ++rep) {
      BlochVector v = random_bloch(rng, two_j, 0.4);
      const int n = v.dim();
      ComplexMatrix rho = bloch_to_density(v);
      std::vector<double> t = trace_powers_from_bloch(v, n);
      std::vector<double> traces = traces_from_trace_powers(n, t);
      ComplexMatrix pow = rho;
      for (int k = 1; k <= n; ++k) {
        CHECK(traces[k - 1] == doctest::Approx(pow.trace().real()).epsilon(1e-11));
        pow = pow * rho;
      }
      CHECK(t[0] == double(n));
      CHECK(t[1] == 0.0);
      CHECK(t[2] == v.norm_sq());
    }
}

TEST_CASE("trace powers via the coefficient chain agree with matrix products") {
  std::mt19937_64 rng(73);
  for (int two_j = 1; two_j <= 2; ++two_j)
    for (int rep = 0; rep < 8; ++rep) {
      BlochVector v = random_bloch(rng, two_j, 0.5);
      std::vector<double> chain = trace_powers_via_chain(v, 4);
      std::vector<double> direct = trace_powers_from_bloch(v, 4);
      for (int m = 0; m <= 4; ++m)
        CHECK(chain[m] == doctest::Approx(direct[m]).epsilon(1e-11));
    }
}

TEST_CASE("eigenvalue oracle: diagonal and known spectra") {
  ComplexMatrix d(3);
  d.at(0, 0) = 0.2;
  d.at(1, 1) = 0.5;
  d.at(2, 2) = 0.3;
  std::vector<double> eig = eigen_oracle(d);
  REQUIRE(eig.size() == 3);
  CHECK(eig[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eig[1] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(eig[2] == doctest::Approx(0.2).epsilon(1e-15));

  // Pure two-dimensional state along the axial direction.
  BlochVector v(1);
  v.set_component(1, 0, 1.0 / std::sqrt(2.0));
  std::vector<double> pe = eigen_oracle(bloch_to_density(v));
  CHECK(pe[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pe[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  ComplexMatrix off(2);
  off.at(0, 1) = Complex(0.0, -0.5);
  off.at(1, 0) = Complex(0.0, 0.5);
  std::vector<double> oe = eigen_oracle(off);
  CHECK(oe[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(oe[1] == doctest::Approx(-0.5).epsilon(1e-14));

  ComplexMatrix skew(2);
  skew.at(0, 1) = 1.0;
  CHECK_THROWS_AS(eigen_oracle(skew), ValidationError);
}

TEST_CASE("eigenvalue oracle reproduces traces and determinant") {
  std::mt19937_64 rng(79);
  for (int n = 2; n <= 8; ++n)
    for (int rep = 0; rep < 25; ++rep) {
      ComplexMatrix a = random_hermitian(rng, n);
      std::vector<double> eig = eigen_oracle(a);
      double tr = 0.0, tr2 = 0.0, det = 1.0;
      for (double e : eig) {
        tr += e;
        tr2 += e * e;
        det *= e;
      }
      CHECK(tr == doctest::Approx(a.trace().real()).epsilon(1e-11));
      CHECK(tr2 == doctest::Approx((a * a).trace().real()).epsilon(1e-11));
      CHECK(det == doctest::Approx(a.determinant().real()).epsilon(1e-8));
    }
}

TEST_CASE("verdicts: mixed, boundary, and unphysical states") {
  // Maximally mixed: strictly positive.
  CHECK(check_positivity(BlochVector(2)).verdict == Verdict::Positive);

  // A pure state sits on the boundary: S_2 = ... = S_N = 0.
  BlochVector pure(1);
  pure.set_component(1, 0, 1.0 / std::sqrt(2.0));
  PositivityReport rep = check_positivity(pure);
  CHECK(rep.verdict == Verdict::Marginal);
  CHECK(rep.method == Method::NewtonFromBloch);

  // Axial two-dimensional vector beyond the ball: |v|^2 = 0.6 > 1/2.
  BlochVector hot(1);
  hot.set_component(1, 1, Complex(std::sqrt(0.3), 0.0));
  PositivityReport bad = check_positivity(hot);
  CHECK(bad.verdict == Verdict::NonPositive);
  CHECK(bad.S[1] == doctest::Approx(0.5 * (0.5 - 0.6)).epsilon(1e-12));

  // Three-dimensional state with |v|^2 = 2/3 but negative determinant:
  // axial components (x, y) = (0, sqrt(2/3)).
  BlochVector q(2);
  q.set_component(2, 0, std::sqrt(2.0 / 3.0));
  PositivityReport qr = check_positivity(q);
  CHECK(qr.verdict == Verdict::NonPositive);
  CHECK(qr.S[2] == doctest::Approx(-4.0 / 27.0).epsilon(1e-12));
  CHECK(std::abs(qr.S[1]) <= 1e-12);  // trace bound saturated

  // The same state through the matrix route.
  PositivityReport qm = check_positivity(bloch_to_density(q));
  CHECK(qm.verdict == Verdict::NonPositive);
  CHECK(qm.method == Method::NewtonFromMatrix);
  CHECK(qm.S[2] == doctest::Approx(qr.S[2]).epsilon(1e-12));
}

TEST_CASE("report fields are consistent") {
  std::mt19937_64 rng(83);
  for (int n = 2; n <= 6; ++n) {
    ComplexMatrix rho = random_density(rng, n);
    PositivityReport rep = check_positivity(rho, 1e-9);
    CHECK(rep.N == n);
    CHECK(static_cast<int>(rep.S.size()) == n);
    CHECK(static_cast<int>(rep.T.size()) == n - 1);
    CHECK(static_cast<int>(rep.traces.size()) == n);
    CHECK(rep.tolerance == 1e-9);
    CHECK(rep.traces[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rep.T[0] ==
          doctest::Approx(rep.traces[1] - 1.0 / n).epsilon(1e-11));
  }
}

TEST_CASE("coefficient verdict always matches the eigenvalue verdict") {
  std::mt19937_64 rng(89);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 150; ++rep) {
      ComplexMatrix rho =
          (rep % 2 == 0) ? random_density(rng, n) : random_indefinite(rng, n);
      // oracle = true raises on any hard disagreement.
      PositivityReport r = check_positivity(rho, 1e-9, true);
      std::vector<double> eig = eigen_oracle(rho);
      if (r.verdict == Verdict::Positive) CHECK(eig.back() > -1e-9);
      if (r.verdict == Verdict::NonPositive) CHECK(eig.back() < 1e-9);
    }
}

TEST_CASE("marginal verdicts appear exactly inside the tolerance band") {
  // A state with smallest eigenvalue -5e-10 is Marginal at 1e-9 but
  // NonPositive at 1e-10.
  ComplexMatrix rho(2);
  rho.at(0, 0) = 1.0 + 5e-10;
  rho.at(1, 1) = -5e-10;
  CHECK(check_positivity(rho, 1e-9).verdict == Verdict::Marginal);
  CHECK(check_positivity(rho, 1e-10).verdict == Verdict::NonPositive);
  // Pure states stay Marginal at any reasonable tolerance.
  std::mt19937_64 rng(97);
  for (int n = 2; n <= 5; ++n)
    CHECK(check_positivity(random_pure(rng, n), 1e-9).verdict ==
          Verdict::Marginal);
}

TEST_CASE("validation rejects unnormalized or skew inputs") {
  ComplexMatrix two = ComplexMatrix::identity(2);  // trace 2
  CHECK_THROWS_AS(check_positivity(two), ValidationError);
  ComplexMatrix skew(2);
  skew.at(0, 1) = 1.0;
  CHECK_THROWS_AS(char_poly_coeffs(skew), ValidationError);
  CHECK_THROWS_AS(trace_powers_from_bloch(BlochVector(1), -1),
                  std::invalid_argument);
  CHECK_THROWS_AS(traces_from_trace_powers(1, {2.0, 0.0}), std::invalid_argument);
}
