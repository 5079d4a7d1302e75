#pragma once

#include <vector>

#include "unruh/complex_matrix.hpp"
#include "unruh/tensor.hpp"

namespace unruh {

/// Eigenvalues of a Hermitian matrix, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;
  int source_dim = 0;

  double sum() const;
  /// Sum of |lambda| over eigenvalues below -kTol.negative_eig_rel * fro.
  double negative_mass(double frobenius_norm) const;
};

/// All eigenvalues of a Hermitian matrix via cyclic Jacobi rotations.
/// Complex input is diagonalized through its 2n x 2n real-symmetric
/// embedding [[Re, -Im], [Im, Re]], whose spectrum doubles every eigenvalue.
/// Throws std::invalid_argument for non-Hermitian input and
/// std::runtime_error if the sweep budget is exhausted.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// Trace norm of a Hermitian matrix: the sum of |eigenvalue|.
double trace_norm(const ComplexMatrix& m);

/// Negativity of rho with respect to `target`: ||rho^{T_target}||_1 - 1.
/// Cross-checks the equivalent formulation 2 * (negative-eigenvalue mass)
/// and throws std::runtime_error if the two disagree beyond
/// kTol.negativity_consistency, which would indicate an eigensolver defect.
double negativity(const DensityMatrix& rho, Mode target);

/// Smallest eigenvalue; used by validity checks on constructed states.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace unruh
