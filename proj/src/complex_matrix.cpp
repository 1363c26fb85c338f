#include "blochspace/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace blochspace {

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::hermiticity_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      r = std::max(r, std::abs(at(i, j) - std::conj(at(j, i))));
  return r;
}

Complex ComplexMatrix::frobenius_inner(const ComplexMatrix& b) const {
  if (dim_ != b.dim_)
    throw std::invalid_argument("frobenius_inner: dimension mismatch");
  Complex s = 0.0;
  for (size_t k = 0; k < a_.size(); ++k) s += std::conj(a_[k]) * b.a_[k];
  return s;
}

double ComplexMatrix::max_abs() const {
  double r = 0.0;
  for (const Complex& z : a_) r = std::max(r, std::abs(z));
  return r;
}

Complex ComplexMatrix::determinant() const {
  ComplexMatrix lu = *this;
  const int n = dim_;
  Complex det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(lu.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu.at(k, j), lu.at(piv, j));
      det = -det;
    }
    det *= lu.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Complex f = lu.at(i, k) / lu.at(k, k);
      for (int j = k + 1; j < n; ++j) lu.at(i, j) -= f * lu.at(k, j);
    }
  }
  return det;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
  if (dim_ != b.dim_) throw std::invalid_argument("matrix +: dimension mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
  if (dim_ != b.dim_) throw std::invalid_argument("matrix -: dimension mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix *: dimension mismatch");
  const int n = a.dim_;
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Complex aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

}  // namespace blochspace
