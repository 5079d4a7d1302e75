#include "unruh/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unruh {

double accel_max() { return std::numbers::pi / 4.0; }

bool in_range(const AccelPair& p) {
  return p.r_b >= 0.0 && p.r_b <= accel_max() && p.r_c >= 0.0 &&
         p.r_c <= accel_max();
}

void require_in_range(const AccelPair& p) {
  if (!in_range(p)) {
    throw std::invalid_argument(
        "acceleration parameters must lie in [0, pi/4], got r_b=" +
        std::to_string(p.r_b) + " r_c=" + std::to_string(p.r_c));
  }
}

PureState build_phi(const AccelPair& p) {
  require_in_range(p);
  const double cb = std::cos(p.r_b);
  const double sb = std::sin(p.r_b);
  const double cc = std::cos(p.r_c);
  const double sc = std::sin(p.r_c);
  const double w = 1.0 / std::numbers::sqrt2;

  PureState psi;
  psi.modes = {Mode::A, Mode::BI, Mode::BII, Mode::CI, Mode::CII};
  psi.amplitudes.assign(32, cplx{0.0, 0.0});
  psi.amplitudes[0b00000] = w * cb * cc;
  psi.amplitudes[0b00011] = w * cb * sc;
  psi.amplitudes[0b01100] = w * sb * cc;
  psi.amplitudes[0b01111] = w * sb * sc;
  psi.amplitudes[0b11010] = w;
  return psi;
}

DensityMatrix rho_abici(const AccelPair& p) {
  return partial_trace(outer(build_phi(p)), {Mode::A, Mode::BI, Mode::CI});
}

TwoModeReductions two_mode_reductions(const AccelPair& p) {
  const DensityMatrix rho = rho_abici(p);
  return TwoModeReductions{
      partial_trace(rho, {Mode::A, Mode::BI}),
      partial_trace(rho, {Mode::A, Mode::CI}),
      partial_trace(rho, {Mode::BI, Mode::CI}),
  };
}

ComplexMatrix pt_template(const AccelPair& p, Mode vertex) {
  require_in_range(p);
  const double cb = std::cos(p.r_b);
  const double sb = std::sin(p.r_b);
  const double cc = std::cos(p.r_c);
  const double sc = std::sin(p.r_c);

  ComplexMatrix m(8);
  m(0, 0) = 0.5 * cb * cb * cc * cc;
  m(1, 1) = 0.5 * cb * cb * sc * sc;
  m(2, 2) = 0.5 * sb * sb * cc * cc;
  m(3, 3) = 0.5 * sb * sb * sc * sc;
  m(7, 7) = 0.5;

  const double coupling = 0.5 * cb * cc;
  int row, col;
  switch (vertex) {
    case Mode::A:
      row = 3, col = 4;
      break;
    case Mode::BI:
      row = 2, col = 5;
      break;
    case Mode::CI:
      row = 1, col = 6;
      break;
    default:
      throw std::invalid_argument("pt_template: vertex must be A, B_I or C_I");
  }
  m(row, col) = coupling;
  m(col, row) = coupling;
  return m;
}

}  // namespace unruh
