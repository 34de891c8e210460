#pragma once

#include <span>

#include "algas/spectral.hpp"

namespace algas {

/// Gauss-Legendre nodes mapped affinely into (eta1, eta2); discretizes
/// L^2(Sigma_1) in the real band coordinate (lambda = i s).
struct NystromGrid {
  int m = 0;
  std::vector<double> svals;
  std::vector<double> weights;
};

NystromGrid make_nystrom_grid(const SpectralBand& band, int m);

/// Symmetrized kernel samples entry(j,k) = sqrt(w_j w_k) K_{n,t}(i s_k; i s_j).
/// Real (for every t) and symmetric; the complex line measure is NOT folded in
/// here -- see fredholm_det.
struct GasKernelMatrix {
  int n = 0;
  double t = 0.0;
  ComplexMatrix entries;
};

GasKernelMatrix kernel_matrix(const SpectralBand& band, const ReflectionCoefficient& r,
                              const NystromGrid& grid, int n, double t);

/// Nystrom value of det(Id + K_{n,t}) on L^2(Sigma_1).
///
/// Measure bookkeeping, folded exactly once: parametrizing lambda = i s turns
/// the line element into i ds, and the kernel's leading minus sign makes the
/// sampled values positive, so
///     det(Id + K_{n,t}) = det(I - i W^{1/2} Khat W^{1/2})
/// with Khat the (positive, real symmetric) entries of kernel_matrix. This
/// orientation reproduces lim_N det(I_N - i Psi(n,t)) and decays to 1 as
/// n -> +infinity.
Complex fredholm_det(const SpectralBand& band, const ReflectionCoefficient& r,
                     const NystromGrid& grid, int n, double t);

/// Soliton gas solution: q_n(t) = i^{n+1} e^{2it} Im Tr[(Id+K_{n+1,t})^{-1} K'_{n+1,t}]
/// where K' carries the exact t-derivative factor (i/2)(zeta+s+1/zeta+1/s).
Complex q_gas(const SpectralBand& band, const ReflectionCoefficient& r, const NystromGrid& grid,
              int n, double t);

/// prod_{k>=n}(1+|q_k|^2) = 1 / Re(det(Id+K_{n+2,t}) / det(Id+K_{n,t})).
double c_gas(const SpectralBand& band, const ReflectionCoefficient& r, const NystromGrid& grid,
             int n, double t);

struct ConvergenceRow {
  int m = 0;
  Complex det;
  double diff = 0.0;   // |det_m - det_{previous m}|; 0 for the first row
  bool stagnated = false;  // non-monotone successive differences
};

std::vector<ConvergenceRow> convergence_report(const SpectralBand& band,
                                               const ReflectionCoefficient& r, int n, double t,
                                               std::span<const int> m_list);

}  // namespace algas
