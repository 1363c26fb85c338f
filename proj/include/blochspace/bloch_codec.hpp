#pragma once

#include "blochspace/complex_matrix.hpp"
#include "blochspace/polarization_basis.hpp"

#include <utility>
#include <vector>

namespace blochspace {

// Generalized Bloch vector of an N x N density matrix, N = two_j + 1:
// the coefficients V_LM of rho = I/N + sum_{L>=1,M} V_LM T_LM.  The L = 0
// component is fixed to 1/sqrt(N) by normalization and never stored.
//
// Hermiticity of rho forces conj(V_LM) = (-1)^M V_{L,-M}, so only M >= 0 is
// stored: V_L0 as a real number and V_LM (M >= 1) as complex.  Negative-M
// components are derived views, which makes the constraint impossible to
// violate after construction.  The vector has N^2 - 1 real degrees of
// freedom.
class BlochVector {
public:
  explicit BlochVector(int two_j);

  int two_j() const { return two_j_; }
  int dim() const { return two_j_ + 1; }

  // V_LM for any |M| <= L, 1 <= L <= two_j; M < 0 is derived.
  Complex component(int L, int M) const;

  // Stores V_LM.  Only M >= 0 may be set (M < 0 is a derived view); M = 0
  // requires an exactly real value.
  void set_component(int L, int M, Complex v);
  void set_component(int L, int M, double v) { set_component(L, M, Complex(v, 0.0)); }

  // Canonical real packing, N^2 - 1 entries: for each L ascending,
  // V_L0 then (Re V_L1, Im V_L1), ..., (Re V_LL, Im V_LL).
  std::vector<double> real_params() const;
  static BlochVector from_real_params(int two_j, const std::vector<double>& p);

  double norm_sq() const;

private:
  void check_lm(int L, int M) const;

  int two_j_;
  std::vector<double> v0_;    // V_L0, index L-1
  std::vector<Complex> vp_;   // V_LM for M >= 1, packed L(L-1)/2 + (M-1)
};

// Invariant scalar product sum_{L,M} (-1)^M V1_LM V2_{L,-M}; real by
// hermiticity.  Tr{rho1 rho2} = 1/N + bloch_dot(v1, v2), so |v|^2 relates to
// purity by Tr{rho^2} = 1/N + |v|^2 <= 1.
double bloch_dot(const BlochVector& a, const BlochVector& b);

// rho = I/N + sum V_LM T_LM.
ComplexMatrix bloch_to_density(const BlochVector& v);

// Inverse map V_LM = Tr{T_LM^dagger rho}.  The input must be hermitian with
// unit trace within tol, and the M = 0 components must come out real within
// tol; violations raise ValidationError naming the property.
BlochVector density_to_bloch(const ComplexMatrix& rho, double tol = 1e-9);

// Expansion of an arbitrary (not necessarily hermitian) operator on the full
// basis including L = 0: A = sum coeffs[i] T_i over canonical label order.
struct OperatorCoefficients {
  int two_j = 0;
  std::vector<Complex> coeffs;  // N^2 entries, canonical basis order
};

OperatorCoefficients decompose_operator(const ComplexMatrix& a);
ComplexMatrix compose_operator(const OperatorCoefficients& oc);

// Hermitian observables Q = T_LM + T_LM^dagger and Qt = i(T_LM - T_LM^dagger)
// whose expectation values recover the component: V_LM = (<Q> + i<Qt>)/2.
std::pair<ComplexMatrix, ComplexMatrix> observable_pair(const PolOpLabel& lab);

}  // namespace blochspace
