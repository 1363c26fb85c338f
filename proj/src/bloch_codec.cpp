#include "blochspace/bloch_codec.hpp"

#include "blochspace/validation.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace blochspace {

BlochVector::BlochVector(int two_j) : two_j_(two_j) {
  if (two_j < 1) throw std::invalid_argument("BlochVector: two_j must be >= 1");
  v0_.assign(two_j, 0.0);
  vp_.assign(static_cast<size_t>(two_j) * (two_j + 1) / 2, Complex(0.0, 0.0));
}

void BlochVector::check_lm(int L, int M) const {
  if (L < 1 || L > two_j_ || std::abs(M) > L)
    throw std::invalid_argument("BlochVector: component (L=" + std::to_string(L) +
                                ", M=" + std::to_string(M) + ") out of range");
}

Complex BlochVector::component(int L, int M) const {
  check_lm(L, M);
  if (M == 0) return Complex(v0_[L - 1], 0.0);
  if (M > 0) return vp_[static_cast<size_t>(L) * (L - 1) / 2 + (M - 1)];
  // conj(V_LM) = (-1)^M V_{L,-M}  =>  V_{L,-M'} = (-1)^M' conj(V_LM').
  Complex v = std::conj(vp_[static_cast<size_t>(L) * (L - 1) / 2 + (-M - 1)]);
  return (M % 2 == 0) ? v : -v;
}

void BlochVector::set_component(int L, int M, Complex v) {
  check_lm(L, M);
  if (M < 0)
    throw std::invalid_argument(
        "BlochVector: negative-M components are derived; set (L, -M) instead");
  if (M == 0) {
    if (v.imag() != 0.0)
      throw std::invalid_argument("BlochVector: V_L0 must be real");
    v0_[L - 1] = v.real();
    return;
  }
  vp_[static_cast<size_t>(L) * (L - 1) / 2 + (M - 1)] = v;
}

std::vector<double> BlochVector::real_params() const {
  std::vector<double> p;
  p.reserve(static_cast<size_t>(dim()) * dim() - 1);
  for (int L = 1; L <= two_j_; ++L) {
    p.push_back(v0_[L - 1]);
    for (int M = 1; M <= L; ++M) {
      Complex v = vp_[static_cast<size_t>(L) * (L - 1) / 2 + (M - 1)];
      p.push_back(v.real());
      p.push_back(v.imag());
    }
  }
  return p;
}

BlochVector BlochVector::from_real_params(int two_j, const std::vector<double>& p) {
  BlochVector v(two_j);
  size_t want = static_cast<size_t>(two_j + 1) * (two_j + 1) - 1;
  if (p.size() != want)
    throw std::invalid_argument("from_real_params: expected " + std::to_string(want) +
                                " parameters, got " + std::to_string(p.size()));
  size_t k = 0;
  for (int L = 1; L <= two_j; ++L) {
    v.set_component(L, 0, p[k++]);
    for (int M = 1; M <= L; ++M) {
      double re = p[k++];
      double im = p[k++];
      v.set_component(L, M, Complex(re, im));
    }
  }
  return v;
}

double BlochVector::norm_sq() const { return bloch_dot(*this, *this); }

double bloch_dot(const BlochVector& a, const BlochVector& b) {
  if (a.two_j() != b.two_j())
    throw std::invalid_argument("bloch_dot: vectors from different spin spaces");
  // sum_M (-1)^M V1_LM V2_{L,-M} pairs M with -M, which by hermiticity is
  // V1_L0 V2_L0 + 2 Re{V1_LM conj(V2_LM)} summed over M >= 1: real exactly.
  double s = 0.0;
  for (int L = 1; L <= a.two_j(); ++L) {
    s += a.component(L, 0).real() * b.component(L, 0).real();
    for (int M = 1; M <= L; ++M)
      s += 2.0 * (a.component(L, M) * std::conj(b.component(L, M))).real();
  }
  return s;
}

ComplexMatrix bloch_to_density(const BlochVector& v) {
  const int n = v.dim();
  ComplexMatrix rho = ComplexMatrix::identity(n);
  rho *= Complex(1.0 / n, 0.0);
  for (int L = 1; L <= v.two_j(); ++L)
    for (int M = -L; M <= L; ++M) {
      Complex c = v.component(L, M);
      if (c == Complex(0.0, 0.0)) continue;
      rho += c * polarization_operator({v.two_j(), L, M});
    }
  return rho;
}

BlochVector density_to_bloch(const ComplexMatrix& rho, double tol) {
  if (rho.dim() < 2)
    throw std::invalid_argument("density_to_bloch: dimension must be >= 2");
  double herm = rho.hermiticity_residual();
  if (herm > tol) throw ValidationError("hermiticity", herm, tol);
  double tr = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr > tol) throw ValidationError("unit_trace", tr, tol);

  const int two_j = rho.dim() - 1;
  BlochVector v(two_j);
  for (int L = 1; L <= two_j; ++L) {
    Complex v0 = polarization_operator({two_j, L, 0}).frobenius_inner(rho);
    if (std::abs(v0.imag()) > tol)
      throw ValidationError("real_axial_component", std::abs(v0.imag()), tol);
    v.set_component(L, 0, v0.real());
    for (int M = 1; M <= L; ++M)
      v.set_component(L, M, polarization_operator({two_j, L, M}).frobenius_inner(rho));
  }
  return v;
}

OperatorCoefficients decompose_operator(const ComplexMatrix& a) {
  if (a.dim() < 2)
    throw std::invalid_argument("decompose_operator: dimension must be >= 2");
  const int two_j = a.dim() - 1;
  OperatorCoefficients oc{two_j, {}};
  for (const PolOpLabel& lab : basis_labels(two_j))
    oc.coeffs.push_back(polarization_operator(lab).frobenius_inner(a));
  return oc;
}

ComplexMatrix compose_operator(const OperatorCoefficients& oc) {
  if (oc.two_j < 1)
    throw std::invalid_argument("compose_operator: two_j must be >= 1");
  size_t want = static_cast<size_t>(oc.two_j + 1) * (oc.two_j + 1);
  if (oc.coeffs.size() != want)
    throw std::invalid_argument("compose_operator: expected " + std::to_string(want) +
                                " coefficients, got " + std::to_string(oc.coeffs.size()));
  ComplexMatrix a(oc.two_j + 1);
  size_t k = 0;
  for (const PolOpLabel& lab : basis_labels(oc.two_j)) {
    Complex c = oc.coeffs[k++];
    if (c != Complex(0.0, 0.0)) a += c * polarization_operator(lab);
  }
  return a;
}

std::pair<ComplexMatrix, ComplexMatrix> observable_pair(const PolOpLabel& lab) {
  ComplexMatrix t = polarization_operator(lab);
  ComplexMatrix td = t.dagger();
  ComplexMatrix q = t + td;
  ComplexMatrix qt = Complex(0.0, 1.0) * (t - td);
  return {std::move(q), std::move(qt)};
}

}  // namespace blochspace
