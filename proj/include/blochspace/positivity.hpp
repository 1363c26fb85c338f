#pragma once

#include "blochspace/bloch_codec.hpp"
#include "blochspace/complex_matrix.hpp"

#include <vector>

namespace blochspace {

// Verdict of a positivity check.  All coefficients S_k of the characteristic
// polynomial W(lambda) = sum_k (-1)^k S_k lambda^{N-k} are >= 0 exactly when
// the matrix is positive semidefinite, so the verdict is read off min_k S_k:
//   Positive     min S_k >  tolerance
//   Marginal     |min S_k| <= tolerance (boundary states, e.g. pure states)
//   NonPositive  min S_k < -tolerance
enum class Verdict { Positive, NonPositive, Marginal };

enum class Method { NewtonFromMatrix, NewtonFromBloch, EigenOracle };

struct PositivityReport {
  int N = 0;
  std::vector<double> S;       // S_1 .. S_N
  std::vector<double> T;       // T_2 .. T_N, trace powers of the traceless part
  std::vector<double> traces;  // Tr{rho^k}, k = 1 .. N
  Verdict verdict = Verdict::NonPositive;
  double tolerance = 0.0;
  Method method = Method::NewtonFromMatrix;
};

// S_1 .. S_N from the Newton recursion k S_k = sum_{m<=k} (-1)^{m-1}
// S_{k-m} Tr{rho^m}, with the traces taken from repeated matrix products.
// The input must be hermitian with unit trace within tol (ValidationError
// otherwise).  S_N equals det(rho).
std::vector<double> char_poly_coeffs(const ComplexMatrix& rho, double tol = 1e-9);

// T_m = Tr{(V.T)^m} for m = 0 .. kmax, where V.T = rho - I/N is the traceless
// part of the state.  T_0 = N, T_1 = 0 and T_2 = |v|^2 are set exactly from
// the vector; higher powers come from matrix products.
std::vector<double> trace_powers_from_bloch(const BlochVector& v, int kmax);

// Same trace powers evaluated without any matrix product, by contracting
// component tuples with the closed-form trace of basis-operator chains.
// Exponential in kmax; retained as an independent cross-check.
std::vector<double> trace_powers_via_chain(const BlochVector& v, int kmax);

// Tr{rho^k} for k = 1 .. t.size()-1, reconstructed from the trace powers of
// the traceless part by the binomial expansion of (I/N + V.T)^k:
// Tr{rho^k} = N^{1-k} + sum_{m=2..k} C(k,m) T_m N^{m-k}.
std::vector<double> traces_from_trace_powers(int n, const std::vector<double>& t);

// S_1 .. S_N directly from a Bloch vector: expresses Tr{rho^k} through the
// binomial sum over T_m and runs the same Newton recursion, avoiding the
// density matrix entirely.
std::vector<double> s_from_bloch(const BlochVector& v);

// Eigenvalues of a hermitian matrix in descending order, computed with a
// deterministic cyclic Jacobi iteration (fixed sweep order, no external
// dependencies).  Used as the independent oracle for verdicts.
std::vector<double> eigen_oracle(const ComplexMatrix& a, double tol = 1e-9);

// Full report for a density matrix (method NewtonFromMatrix) or a Bloch
// vector (method NewtonFromBloch).  With oracle = true the verdict is
// cross-checked against the minimum eigenvalue; a hard disagreement
// (Positive vs NonPositive) raises std::runtime_error.
PositivityReport check_positivity(const ComplexMatrix& rho, double tol = 1e-9,
                                  bool oracle = false);
PositivityReport check_positivity(const BlochVector& v, double tol = 1e-9,
                                  bool oracle = false);

}  // namespace blochspace
