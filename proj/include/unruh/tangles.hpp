#pragma once

#include <array>
#include <utility>

#include "unruh/model.hpp"

namespace unruh {

/// Which family of one-tangle expressions feeds a composed quantity.
enum class Family { Corrected, Legacy, Numeric };

/// Ordered pair of distinct vertices out of {A, B_I, C_I}; the first element
/// is the one being partially transposed.
using VertexPair = std::pair<Mode, Mode>;

/// The six ordered pairs in canonical order:
/// (A,B_I), (A,C_I), (B_I,A), (B_I,C_I), (C_I,A), (C_I,B_I).
inline constexpr std::array<VertexPair, 6> kVertexPairs{{
    {Mode::A, Mode::BI},
    {Mode::A, Mode::CI},
    {Mode::BI, Mode::A},
    {Mode::BI, Mode::CI},
    {Mode::CI, Mode::A},
    {Mode::CI, Mode::BI},
}};

/// Corrected closed form of the one-tangle (negativity of `vertex` against
/// the remaining pair):
///   A  : (1/2) (sqrt(sin^4 r_b sin^4 r_c + 4 cos^2 r_b cos^2 r_c)
///               - sin^2 r_b sin^2 r_c)
///   B_I: (1/2) cos r_c (sqrt(sin^4 r_b cos^2 r_c + 4 cos^2 r_b)
///               - sin^2 r_b cos r_c)
///   C_I: (1/2) cos r_b (sqrt(cos^2 r_b sin^4 r_c + 4 cos^2 r_c)
///               - cos r_b sin^2 r_c)
double one_tangle_corrected(const AccelPair& p, Mode vertex);

/// Legacy closed form, kept for the difference surfaces:
///   A  : (1/2) [cos r_b cos r_c - sin^2 r_b sin^2 r_c
///               + sqrt(sin^4 r_b sin^4 r_c + cos^2 r_b cos^2 r_c)]
///   B_I: (1/2) [cos r_b cos r_c - sin^2 r_b cos^2 r_c
///               + cos r_c sqrt(sin^4 r_b cos^2 r_c + cos^2 r_b)]
///   C_I: (1/2) [cos r_b cos r_c - cos^2 r_b sin^2 r_c
///               + cos r_b sqrt(cos^2 r_b sin^4 r_c + cos^2 r_c)]
double one_tangle_legacy(const AccelPair& p, Mode vertex);

/// One-tangle of C_I when only Charlie accelerates:
/// (1/2)(sqrt(4 cos^2 r_c + sin^4 r_c) - sin^2 r_c). Identical expression to
/// one_tangle_corrected({0, r_c}, C_I).
double one_tangle_single_acceleration(double r_c);

/// Matrix-pipeline negativity of `vertex` against the remaining pair:
/// partial transpose of rho_abici, eigenvalues, trace norm minus one. The
/// independent numeric route the closed forms are verified against.
double one_tangle_numeric(const AccelPair& p, Mode vertex);

/// Numeric negativity of the two-mode reduction selected by `pair`,
/// transposing the first vertex. Expected to vanish everywhere.
double two_tangle(const AccelPair& p, const VertexPair& pair);

/// pi-tangle: the average over vertices of
/// N^2_{v(rest)} - N^2_{v,first other} - N^2_{v,second other}.
/// The Corrected and Legacy families drop the (vanishing) two-tangle terms
/// and average the squared closed-form one-tangles; the Numeric family
/// evaluates every term through the matrix pipeline.
double pi_tangle(const AccelPair& p, Family family);

/// Pointwise differences, legacy value minus corrected value. This
/// orientation makes the small-r leading term of dpi equal +r^4/12 on the
/// r_c = 0 axis, matching the quartic series.
struct DeltaSurfaces {
  double dn_a = 0.0;
  double dn_bi = 0.0;
  double dn_ci = 0.0;
  double dpi = 0.0;
};

DeltaSurfaces delta_surfaces(const AccelPair& p);

/// Quartic series for dpi:
/// (1/12)(r_b^4 + r_c^4) - (1/6) r_b^2 r_c^2 (r_b^2 + r_c^2)
/// + (13/36) r_b^4 r_c^4.
double delta_pi_series(const AccelPair& p);

/// Everything this library computes at one parameter point.
struct TangleReport {
  AccelPair params;

  double n_a = 0.0, n_bi = 0.0, n_ci = 0.0;  // corrected closed forms
  double n_a_legacy = 0.0, n_bi_legacy = 0.0, n_ci_legacy = 0.0;
  double n_a_numeric = 0.0, n_bi_numeric = 0.0, n_ci_numeric = 0.0;

  // Order matches kVertexPairs.
  std::array<double, 6> two_tangles{};

  double pi_corrected = 0.0, pi_legacy = 0.0, pi_numeric = 0.0;
  double delta_pi = 0.0;
  double delta_pi_series = 0.0;
};

TangleReport make_report(const AccelPair& p);

/// True when the corrected closed forms agree with the numeric pipeline
/// within kTol.oracle_agreement and the pi compositions within
/// kTol.pi_composition_abs.
bool report_consistent(const TangleReport& r);

}  // namespace unruh
