#include "unruh/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unruh/tolerances.hpp"

namespace unruh {
namespace {

// Cyclic Jacobi diagonalization of a real symmetric matrix, in place.
// Convergence: off-diagonal Frobenius mass <= kTol.jacobi_off_rel * fro of
// the input, capped at kTol.jacobi_max_sweeps sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n) {
  double fro = 0.0;
  for (int i = 0; i < n * n; ++i) fro += a[i] * a[i];
  fro = std::sqrt(fro);
  if (fro == 0.0) return std::vector<double>(n, 0.0);
  const double off_target = kTol.jacobi_off_rel * fro;

  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  for (int sweep = 0; sweep <= kTol.jacobi_max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    off = std::sqrt(2.0 * off);
    if (off <= off_target) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    if (sweep == kTol.jacobi_max_sweeps) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        // Entries already annihilated to rounding level stay put.
        if (std::abs(apq) <= 1e-3 * off_target / n) continue;

        const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double delta = t * apq;
        at(p, p) -= delta;
        at(q, q) += delta;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = arp - s * (arq + tau * arp);
          at(p, r) = at(r, p);
          at(r, q) = arq + s * (arp - tau * arq);
          at(q, r) = at(r, q);
        }
      }
    }
  }
  throw std::runtime_error(
      "hermitian_eigenvalues: Jacobi sweep budget exhausted");
}

}  // namespace

double Spectrum::sum() const {
  double s = 0.0;
  for (double e : eigenvalues) s += e;
  return s;
}

double Spectrum::negative_mass(double frobenius_norm) const {
  const double cut = -kTol.negative_eig_rel * frobenius_norm;
  double s = 0.0;
  for (double e : eigenvalues) {
    if (e < cut) s += -e;
  }
  return s;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  const int n = m.dim();
  const double fro = m.frobenius_norm();
  if (fro == 0.0) return Spectrum{std::vector<double>(n, 0.0), n};
  if (m.hermiticity_defect() > kTol.hermitian_reject_rel * fro) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  }

  double max_imag = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      max_imag = std::max(max_imag, std::abs(m(i, j).imag()));
    }
  }

  if (max_imag <= kTol.real_cutoff_rel * fro) {
    // Real-symmetric path; transposition noise is symmetrized away.
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a[i * n + j] = 0.5 * (m(i, j).real() + m(j, i).real());
      }
    }
    return Spectrum{jacobi_eigenvalues(a, n), n};
  }

  // H = A + iB with A symmetric and B antisymmetric embeds as the symmetric
  // real matrix [[A, -B], [B, A]]; every eigenvalue of H appears twice.
  const int N = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(N) * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a[i * N + j] = h.real();
      a[(i + n) * N + (j + n)] = h.real();
      a[i * N + (j + n)] = -h.imag();
      a[(i + n) * N + j] = h.imag();
    }
  }
  std::vector<double> doubled = jacobi_eigenvalues(a, N);
  std::vector<double> eig(n);
  for (int k = 0; k < n; ++k) {
    // Adjacent sorted entries form the duplicated pair; averaging halves the
    // rotation noise.
    eig[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
  }
  return Spectrum{std::move(eig), n};
}

double trace_norm(const ComplexMatrix& m) {
  const Spectrum s = hermitian_eigenvalues(m);
  double t = 0.0;
  for (double e : s.eigenvalues) t += std::abs(e);
  return t;
}

double negativity(const DensityMatrix& rho, Mode target) {
  const ComplexMatrix pt = partial_transpose(rho, target);
  const Spectrum s = hermitian_eigenvalues(pt);

  double tn = 0.0;
  for (double e : s.eigenvalues) tn += std::abs(e);
  const double via_trace_norm = tn - 1.0;
  const double via_negative_mass = 2.0 * s.negative_mass(pt.frobenius_norm());

  if (std::abs(via_trace_norm - via_negative_mass) >
      kTol.negativity_consistency) {
    throw std::runtime_error(
        "negativity: trace-norm and negative-eigenvalue formulations "
        "disagree; eigensolver defect");
  }
  return via_trace_norm;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).eigenvalues.front();
}

}  // namespace unruh
