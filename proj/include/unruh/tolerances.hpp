#pragma once

namespace unruh {

/// Central record of every numerical tolerance used by the library and its
/// verification suites. All comparisons route through these constants so the
/// acceptance thresholds have a single point of control.
struct Tolerances {
  // Relative Hermiticity bound: max |m(i,j) - conj(m(j,i))| over frobenius_norm.
  double hermitian_rel = 1e-13;
  // Absolute deviation of a density-matrix trace from 1.
  double unit_trace_abs = 1e-12;
  // Eigenvalues above this floor count as nonnegative for PSD checks.
  double psd_floor = -1e-12;
  // Absolute deviation of a pure-state norm from 1.
  double unit_norm_abs = 1e-12;
  // outer() rejects states whose norm deviates more than this.
  double outer_norm_reject = 1e-9;

  // Eigensolver input gate: relative asymmetry beyond this is an error.
  double hermitian_reject_rel = 1e-10;
  // Jacobi convergence: off-diagonal Frobenius mass per input Frobenius norm.
  double jacobi_off_rel = 1e-14;
  int jacobi_max_sweeps = 100;
  // Entries with |imag| below this (relative) make a matrix real-symmetric.
  double real_cutoff_rel = 1e-15;
  // An eigenvalue counts as negative below -negative_eig_rel * frobenius_norm.
  double negative_eig_rel = 1e-13;
  // Agreement between the two negativity formulations
  // (trace norm minus one vs. twice the negative-eigenvalue mass).
  double negativity_consistency = 1e-11;

  // Closed-form one-tangles vs. the matrix-pipeline negativity.
  double oracle_agreement = 1e-11;
  // Assembled partial transposes vs. their explicit entry templates.
  double template_entry_abs = 1e-14;
  // r_b <-> r_c exchange symmetry of the closed forms.
  double symmetry_abs = 1e-13;
  // Two-mode negativities are expected to vanish to this level.
  double two_tangle_abs = 1e-11;
  // Full per-vertex residual composition vs. the closed three-term average.
  double pi_composition_abs = 1e-10;

  // |delta_pi - quartic series| <= series_residual_coeff * max(r_b,r_c)^6 for
  // max(r_b,r_c) <= series_window. The coefficient was frozen from a
  // high-precision sweep of the residual (sup ratio 0.1944, reached on the
  // diagonal as r -> 0).
  double series_residual_coeff = 0.5;
  double series_window = 0.15;
  // delta_pi is a difference of O(1) quantities; on user-selected grids much
  // finer than the acceptance grid the m^6 bound dips below double-precision
  // cancellation noise, so the verify suite adds this absolute allowance.
  double series_cancellation_floor = 2e-15;
};

inline constexpr Tolerances kTol{};

}  // namespace unruh
