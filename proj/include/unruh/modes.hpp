#pragma once

#include <array>
#include <string_view>

namespace unruh {

/// The five two-level modes of the accelerated-observer setup: Alice's mode
/// plus the region-I / region-II Rindler modes of Bob and Charlie. The
/// canonical ordering A < B_I < B_II < C_I < C_II is fixed for all index
/// arithmetic; the first mode of a register is the most significant bit.
enum class Mode : int { A = 0, BI = 1, BII = 2, CI = 3, CII = 4 };

inline constexpr std::array<Mode, 5> kAllModes{Mode::A, Mode::BI, Mode::BII,
                                               Mode::CI, Mode::CII};

constexpr std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::A:
      return "A";
    case Mode::BI:
      return "B_I";
    case Mode::BII:
      return "B_II";
    case Mode::CI:
      return "C_I";
    case Mode::CII:
      return "C_II";
  }
  return "?";
}

}  // namespace unruh
