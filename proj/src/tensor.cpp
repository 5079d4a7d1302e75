#include "unruh/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "unruh/tolerances.hpp"

namespace unruh {
namespace {

int mode_count_dim(std::size_t n_modes) { return 1 << n_modes; }

void check_register(const std::vector<Mode>& modes, std::size_t amp_count) {
  if (modes.empty()) throw std::invalid_argument("mode register is empty");
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = i + 1; j < modes.size(); ++j) {
      if (modes[i] == modes[j]) {
        throw std::invalid_argument("duplicate mode label in register");
      }
    }
  }
  if (amp_count != static_cast<std::size_t>(mode_count_dim(modes.size()))) {
    throw std::invalid_argument("size does not match 2^(number of modes)");
  }
}

}  // namespace

double PureState::norm() const {
  double s = 0.0;
  for (const cplx& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

DensityMatrix::DensityMatrix(std::vector<Mode> modes, ComplexMatrix matrix)
    : modes_(std::move(modes)), matrix_(std::move(matrix)) {
  check_register(modes_, 1u << modes_.size());
  if (matrix_.dim() != mode_count_dim(modes_.size())) {
    throw std::invalid_argument("DensityMatrix: dim does not match register");
  }
  if (!matrix_.is_hermitian(kTol.hermitian_rel)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - cplx{1.0, 0.0}) > kTol.unit_trace_abs) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1");
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(i * db + k, j * db + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

DensityMatrix outer(const PureState& psi) {
  check_register(psi.modes, psi.amplitudes.size());
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > kTol.outer_norm_reject) {
    throw std::invalid_argument("outer: state is not normalized (norm " +
                                std::to_string(nrm) + ")");
  }
  const int d = static_cast<int>(psi.amplitudes.size());
  // Divide by <psi|psi> so the projector has unit trace to machine precision.
  const double inv_norm_sq = 1.0 / (nrm * nrm);
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]) * inv_norm_sq;
    }
  }
  return DensityMatrix(psi.modes, std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<Mode>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  const std::vector<Mode>& all = rho.modes();
  for (Mode m : keep) {
    if (std::find(all.begin(), all.end(), m) == all.end()) {
      throw std::invalid_argument("partial_trace: unknown mode label " +
                                  std::string(to_string(m)));
    }
  }

  // Surviving modes in their original relative order.
  std::vector<Mode> kept;
  std::vector<int> kept_pos, traced_pos;
  for (std::size_t p = 0; p < all.size(); ++p) {
    if (std::find(keep.begin(), keep.end(), all[p]) != keep.end()) {
      kept.push_back(all[p]);
      kept_pos.push_back(static_cast<int>(p));
    } else {
      traced_pos.push_back(static_cast<int>(p));
    }
  }

  const int n = static_cast<int>(all.size());
  const int dk = 1 << kept.size();
  const int dt = 1 << traced_pos.size();

  // Recombine a kept-register index and a traced-register index into a full
  // basis index (first mode = most significant bit throughout).
  auto compose = [&](int kbits, int tbits) {
    int idx = 0;
    int ki = 0, ti = 0;
    for (int p = 0; p < n; ++p) {
      idx <<= 1;
      if (ki < static_cast<int>(kept_pos.size()) && kept_pos[ki] == p) {
        idx |= (kbits >> (static_cast<int>(kept_pos.size()) - 1 - ki)) & 1;
        ++ki;
      } else {
        idx |= (tbits >> (static_cast<int>(traced_pos.size()) - 1 - ti)) & 1;
        ++ti;
      }
    }
    return idx;
  };

  ComplexMatrix out(dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      cplx acc{0.0, 0.0};
      for (int t = 0; t < dt; ++t) {
        acc += rho.matrix()(compose(i, t), compose(j, t));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(kept), std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Mode target) {
  const std::vector<Mode>& all = rho.modes();
  auto it = std::find(all.begin(), all.end(), target);
  if (it == all.end()) {
    throw std::invalid_argument("partial_transpose: unknown mode label " +
                                std::string(to_string(target)));
  }
  const int n = static_cast<int>(all.size());
  const int pos = static_cast<int>(it - all.begin());
  const int bit = n - 1 - pos;  // bit position counted from the LSB
  const int d = rho.dim();

  ComplexMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ib = (i >> bit) & 1;
      const int jb = (j >> bit) & 1;
      const int i2 = (i & ~(1 << bit)) | (jb << bit);
      const int j2 = (j & ~(1 << bit)) | (ib << bit);
      out(i2, j2) = rho.matrix()(i, j);
    }
  }
  return out;
}

}  // namespace unruh
