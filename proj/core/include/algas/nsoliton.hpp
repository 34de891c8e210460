#pragma once

#include "algas/spectral.hpp"

namespace algas {

/// d_j(n,t) = sqrt(Lambda_j lambda_j^{-n-2} exp(t(1/lambda_j - lambda_j))),
/// assembled in log space. Throws OverflowError when any |log d_j| > 300;
/// the caller must shrink |n|, |t| or use the determinant-ratio paths.
std::vector<double> dvec(const SolitonEnsemble& ens, int n, double t);

/// Psi_jk = d_j d_k / (1 - 1/(lambda_j lambda_k)), real symmetric.
ComplexMatrix psi_matrix(const std::vector<double>& d, const std::vector<double>& lambdas);

/// tau(eta; n, t) = det(I_N - eta Psi(n,t)).
Complex tau_function(const SolitonEnsemble& ens, int n, double t, Complex eta);

/// Exact N-soliton solution through the tau-function route:
/// q_n(t) = i^{n+1} e^{2it} d^T D (I + Psi^2)^{-1} d evaluated at site n+1.
Complex q_nsoliton(const SolitonEnsemble& ens, int n, double t);

/// Same solution through the first-row linear system
/// [[I, -Psi], [Psi, I]] (alpha; beta) = (d; 0); independent of q_nsoliton's
/// algebra and used to cross-check it.
Complex q_direct(const SolitonEnsemble& ens, int n, double t);

/// c_n = prod_{k>=n} (1+|q_k|^2) = 1 / Re(tau(i; n+2, t) / tau(i; n, t)).
double c_nsoliton(const SolitonEnsemble& ens, int n, double t);

}  // namespace algas
