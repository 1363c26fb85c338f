#pragma once

#include <complex>
#include <vector>

namespace blochspace {

using Complex = std::complex<double>;

// Dense complex matrix with value semantics, sized for spin spaces (a few
// hundred entries at most).  Basis ordering convention: row/column index i
// corresponds to the projection m = j - i, i.e. m runs j, j-1, ..., -j from
// the top-left corner down.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * dim_ + c];
  }

  ComplexMatrix dagger() const;
  Complex trace() const;

  // max |A_ij - conj(A_ji)|; zero for an exactly hermitian matrix.
  double hermiticity_residual() const;
  bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }

  // Tr{A^dagger B} (the matrix inner product under which the basis is
  // orthonormal).
  Complex frobenius_inner(const ComplexMatrix& b) const;

  double max_abs() const;

  // Determinant via LU with partial pivoting; used as an independent check
  // on the last characteristic-polynomial coefficient.
  Complex determinant() const;

  ComplexMatrix& operator+=(const ComplexMatrix& b);
  ComplexMatrix& operator-=(const ComplexMatrix& b);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

}  // namespace blochspace
