#pragma once

#include <complex>
#include <vector>

namespace unruh {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions in this library never
/// exceed 32, so everything is stored and manipulated densely.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int row, int col) { return entries_[row * dim_ + col]; }
  const cplx& operator()(int row, int col) const {
    return entries_[row * dim_ + col];
  }

  cplx trace() const;
  double frobenius_norm() const;
  /// max |m(i,j) - conj(m(j,i))| over all entries.
  double hermiticity_defect() const;
  bool is_hermitian(double rel_tol) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int dim_;
  std::vector<cplx> entries_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise absolute difference; matrices must share dimensions.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace unruh
