#pragma once

#include <vector>

#include "unruh/complex_matrix.hpp"
#include "unruh/modes.hpp"

namespace unruh {

/// Amplitude vector over an ordered register of two-level modes. The first
/// listed mode is the most significant bit of the basis index, so a register
/// (A, B_I, C_I) enumerates |000>, |001>, ..., |111> with A as the top bit.
struct PureState {
  std::vector<Mode> modes;
  std::vector<cplx> amplitudes;

  double norm() const;
};

/// Hermitian, unit-trace matrix over an ordered mode register. The
/// constructor enforces Hermiticity and unit trace; positive semidefiniteness
/// is a contract checked by the verification suites.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<Mode> modes, ComplexMatrix matrix);

  const std::vector<Mode>& modes() const { return modes_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

 private:
  std::vector<Mode> modes_;
  ComplexMatrix matrix_;
};

/// Kronecker product: result[(i*db+k),(j*db+l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Projector |psi><psi| as a density matrix. Rejects states whose norm
/// deviates from 1 by more than kTol.outer_norm_reject.
DensityMatrix outer(const PureState& psi);

/// Trace out every mode not in `keep`. The result keeps the surviving modes
/// in their original relative order and preserves trace and Hermiticity.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<Mode>& keep);

/// Transpose the indices of a single mode: the basis bit belonging to
/// `target` is swapped between row and column. The result is Hermitian with
/// the same trace but may fail to be positive, so it is returned as a plain
/// matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Mode target);

}  // namespace unruh
