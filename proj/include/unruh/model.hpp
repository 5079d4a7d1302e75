#pragma once

#include "unruh/tensor.hpp"

namespace unruh {

/// The two acceleration parameters, in radians. r = 0 is the inertial limit
/// and r = pi/4 the infinite-acceleration endpoint; both ends are inclusive.
struct AccelPair {
  double r_b = 0.0;
  double r_c = 0.0;
};

/// Inclusive upper end of the acceleration-parameter range.
double accel_max();

bool in_range(const AccelPair& p);
void require_in_range(const AccelPair& p);

/// The 5-mode state shared by Alice, Bob and Charlie after Bob's and
/// Charlie's modes undergo the fermionic Unruh transformation. Exactly five
/// basis kets carry weight (bit order A, B_I, B_II, C_I, C_II):
///   (1/sqrt2) cos r_b cos r_c |00000>
///   (1/sqrt2) cos r_b sin r_c |00011>
///   (1/sqrt2) sin r_b cos r_c |01100>
///   (1/sqrt2) sin r_b sin r_c |01111>
///   (1/sqrt2)                 |11010>
PureState build_phi(const AccelPair& p);

/// The accessible tripartite state: the 5-mode projector with the region-II
/// modes traced out, an 8x8 density matrix over (A, B_I, C_I).
DensityMatrix rho_abici(const AccelPair& p);

struct TwoModeReductions {
  DensityMatrix ab;  // (A, B_I)
  DensityMatrix ac;  // (A, C_I)
  DensityMatrix bc;  // (B_I, C_I)
};

/// All three two-mode reductions of rho_abici.
TwoModeReductions two_mode_reductions(const AccelPair& p);

/// The partial transpose of rho_abici over `vertex`, assembled directly from
/// its explicit entry template rather than through the tensor pipeline:
/// common diagonal (cos^2 r_b cos^2 r_c, cos^2 r_b sin^2 r_c,
/// sin^2 r_b cos^2 r_c, sin^2 r_b sin^2 r_c, 0, 0, 0, 1)/2 with the single
/// coupling pair cos r_b cos r_c / 2 at (3,4) for A, (2,5) for B_I and
/// (1,6) for C_I. Serves as the independent reference the assembled
/// transposes are verified against.
ComplexMatrix pt_template(const AccelPair& p, Mode vertex);

}  // namespace unruh
