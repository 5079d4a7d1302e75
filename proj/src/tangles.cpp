#include "unruh/tangles.hpp"

#include <cmath>
#include <stdexcept>

#include "unruh/spectra.hpp"
#include "unruh/tolerances.hpp"

namespace unruh {
namespace {

void require_vertex(Mode vertex) {
  if (vertex != Mode::A && vertex != Mode::BI && vertex != Mode::CI) {
    throw std::invalid_argument("vertex must be A, B_I or C_I");
  }
}

const DensityMatrix& reduction_for(const TwoModeReductions& red,
                                   const VertexPair& pair) {
  const bool has_a = pair.first == Mode::A || pair.second == Mode::A;
  const bool has_b = pair.first == Mode::BI || pair.second == Mode::BI;
  const bool has_c = pair.first == Mode::CI || pair.second == Mode::CI;
  if (has_a && has_b) return red.ab;
  if (has_a && has_c) return red.ac;
  if (has_b && has_c) return red.bc;
  throw std::invalid_argument("two_tangle: invalid vertex pair");
}

}  // namespace

double one_tangle_corrected(const AccelPair& p, Mode vertex) {
  require_in_range(p);
  require_vertex(vertex);
  const double cb = std::cos(p.r_b), sb = std::sin(p.r_b);
  const double cc = std::cos(p.r_c), sc = std::sin(p.r_c);
  switch (vertex) {
    case Mode::A:
      return 0.5 * (std::sqrt(sb * sb * sb * sb * sc * sc * sc * sc +
                              4.0 * cb * cb * cc * cc) -
                    sb * sb * sc * sc);
    case Mode::BI:
      return 0.5 * cc *
             (std::sqrt(sb * sb * sb * sb * cc * cc + 4.0 * cb * cb) -
              sb * sb * cc);
    default:  // Mode::CI
      return 0.5 * cb *
             (std::sqrt(cb * cb * sc * sc * sc * sc + 4.0 * cc * cc) -
              cb * sc * sc);
  }
}

double one_tangle_legacy(const AccelPair& p, Mode vertex) {
  require_in_range(p);
  require_vertex(vertex);
  const double cb = std::cos(p.r_b), sb = std::sin(p.r_b);
  const double cc = std::cos(p.r_c), sc = std::sin(p.r_c);
  switch (vertex) {
    case Mode::A:
      return 0.5 * (cb * cc - sb * sb * sc * sc +
                    std::sqrt(sb * sb * sb * sb * sc * sc * sc * sc +
                              cb * cb * cc * cc));
    case Mode::BI:
      return 0.5 * (cb * cc - sb * sb * cc * cc +
                    cc * std::sqrt(sb * sb * sb * sb * cc * cc + cb * cb));
    default:  // Mode::CI
      return 0.5 * (cb * cc - cb * cb * sc * sc +
                    cb * std::sqrt(cb * cb * sc * sc * sc * sc + cc * cc));
  }
}

double one_tangle_single_acceleration(double r_c) {
  const AccelPair p{0.0, r_c};
  require_in_range(p);
  const double cc = std::cos(r_c), sc = std::sin(r_c);
  return 0.5 * (std::sqrt(4.0 * cc * cc + sc * sc * sc * sc) - sc * sc);
}

double one_tangle_numeric(const AccelPair& p, Mode vertex) {
  require_vertex(vertex);
  return negativity(rho_abici(p), vertex);
}

double two_tangle(const AccelPair& p, const VertexPair& pair) {
  if (pair.first == pair.second) {
    throw std::invalid_argument("two_tangle: vertices must differ");
  }
  require_vertex(pair.first);
  require_vertex(pair.second);
  const TwoModeReductions red = two_mode_reductions(p);
  return negativity(reduction_for(red, pair), pair.first);
}

double pi_tangle(const AccelPair& p, Family family) {
  require_in_range(p);
  if (family == Family::Numeric) {
    // Full composition: per-vertex residual of squared negativities with the
    // two-tangle subtractions evaluated rather than assumed zero.
    const DensityMatrix rho = rho_abici(p);
    const TwoModeReductions red = two_mode_reductions(p);
    const double na = negativity(rho, Mode::A);
    const double nb = negativity(rho, Mode::BI);
    const double nc = negativity(rho, Mode::CI);
    const double n_ab = negativity(red.ab, Mode::A);
    const double n_ac = negativity(red.ac, Mode::A);
    const double n_ba = negativity(red.ab, Mode::BI);
    const double n_bc = negativity(red.bc, Mode::BI);
    const double n_ca = negativity(red.ac, Mode::CI);
    const double n_cb = negativity(red.bc, Mode::CI);
    const double pi_a = na * na - n_ab * n_ab - n_ac * n_ac;
    const double pi_b = nb * nb - n_ba * n_ba - n_bc * n_bc;
    const double pi_c = nc * nc - n_ca * n_ca - n_cb * n_cb;
    return (pi_a + pi_b + pi_c) / 3.0;
  }

  auto tangle = family == Family::Corrected ? one_tangle_corrected
                                            : one_tangle_legacy;
  const double na = tangle(p, Mode::A);
  const double nb = tangle(p, Mode::BI);
  const double nc = tangle(p, Mode::CI);
  return (na * na + nb * nb + nc * nc) / 3.0;
}

DeltaSurfaces delta_surfaces(const AccelPair& p) {
  DeltaSurfaces d;
  d.dn_a = one_tangle_legacy(p, Mode::A) - one_tangle_corrected(p, Mode::A);
  d.dn_bi = one_tangle_legacy(p, Mode::BI) - one_tangle_corrected(p, Mode::BI);
  d.dn_ci = one_tangle_legacy(p, Mode::CI) - one_tangle_corrected(p, Mode::CI);
  d.dpi = pi_tangle(p, Family::Legacy) - pi_tangle(p, Family::Corrected);
  return d;
}

double delta_pi_series(const AccelPair& p) {
  require_in_range(p);
  const double b2 = p.r_b * p.r_b, c2 = p.r_c * p.r_c;
  const double b4 = b2 * b2, c4 = c2 * c2;
  return (b4 + c4) / 12.0 - b2 * c2 * (b2 + c2) / 6.0 + 13.0 / 36.0 * b4 * c4;
}

TangleReport make_report(const AccelPair& p) {
  require_in_range(p);
  TangleReport r;
  r.params = p;

  r.n_a = one_tangle_corrected(p, Mode::A);
  r.n_bi = one_tangle_corrected(p, Mode::BI);
  r.n_ci = one_tangle_corrected(p, Mode::CI);
  r.n_a_legacy = one_tangle_legacy(p, Mode::A);
  r.n_bi_legacy = one_tangle_legacy(p, Mode::BI);
  r.n_ci_legacy = one_tangle_legacy(p, Mode::CI);

  const DensityMatrix rho = rho_abici(p);
  r.n_a_numeric = negativity(rho, Mode::A);
  r.n_bi_numeric = negativity(rho, Mode::BI);
  r.n_ci_numeric = negativity(rho, Mode::CI);

  const TwoModeReductions red = two_mode_reductions(p);
  for (std::size_t k = 0; k < kVertexPairs.size(); ++k) {
    r.two_tangles[k] =
        negativity(reduction_for(red, kVertexPairs[k]), kVertexPairs[k].first);
  }

  r.pi_corrected = pi_tangle(p, Family::Corrected);
  r.pi_legacy = pi_tangle(p, Family::Legacy);
  r.pi_numeric = pi_tangle(p, Family::Numeric);
  r.delta_pi = r.pi_legacy - r.pi_corrected;
  r.delta_pi_series = unruh::delta_pi_series(p);
  return r;
}

bool report_consistent(const TangleReport& r) {
  const double worst_tangle =
      std::max({std::abs(r.n_a - r.n_a_numeric), std::abs(r.n_bi - r.n_bi_numeric),
                std::abs(r.n_ci - r.n_ci_numeric)});
  return worst_tangle <= kTol.oracle_agreement &&
         std::abs(r.pi_corrected - r.pi_numeric) <= kTol.pi_composition_abs;
}

}  // namespace unruh
