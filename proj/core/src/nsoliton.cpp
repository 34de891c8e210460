#include "algas/nsoliton.hpp"

#include <cmath>

namespace algas {

namespace {

// i^m for integer m, exact.
Complex unit_i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

ComplexMatrix id_minus(const ComplexMatrix& psi, Complex eta) {
  const int n = psi.rows();
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = (i == j ? 1.0 : 0.0) - eta * psi.at(i, j);
  return a;
}

}  // namespace

std::vector<double> dvec(const SolitonEnsemble& ens, int n, double t) {
  std::vector<double> d(ens.lambdas.size());
  for (size_t j = 0; j < d.size(); ++j) {
    const double lam = ens.lambdas[j];
    const double logd =
        0.5 * (std::log(ens.norms[j]) + (-n - 2.0) * std::log(lam) + t * (1.0 / lam - lam));
    if (std::abs(logd) > 300.0)
      throw OverflowError("dvec: |log d_j| > 300 at j=" + std::to_string(j + 1) +
                          "; shrink |n|, |t| or use the determinant-ratio paths");
    d[j] = std::exp(logd);
  }
  return d;
}

ComplexMatrix psi_matrix(const std::vector<double>& d, const std::vector<double>& lambdas) {
  if (d.size() != lambdas.size()) throw std::invalid_argument("psi_matrix: length mismatch");
  const int n = static_cast<int>(d.size());
  ComplexMatrix psi(std::max(n, 1), std::max(n, 1));
  if (n == 0) return ComplexMatrix(1, 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      psi.at(j, k) = d[j] * d[k] / (1.0 - 1.0 / (lambdas[j] * lambdas[k]));
  return psi;
}

Complex tau_function(const SolitonEnsemble& ens, int n, double t, Complex eta) {
  if (ens.size() == 0) return 1.0;  // empty determinant
  if (eta == Complex{}) return 1.0;
  const auto d = dvec(ens, n, t);
  return lu_det(id_minus(psi_matrix(d, ens.lambdas), eta));
}

Complex q_nsoliton(const SolitonEnsemble& ens, int n, double t) {
  const int N = ens.size();
  if (N == 0) return 0.0;
  const auto d = dvec(ens, n + 1, t);
  const auto psi = psi_matrix(d, ens.lambdas);
  // I + Psi^2, real symmetric positive definite.
  ComplexMatrix a = psi * psi;
  for (int i = 0; i < N; ++i) a.at(i, i) += 1.0;
  std::vector<Complex> rhs(d.begin(), d.end());
  const auto v = lu_solve(a, rhs);
  Complex bracket = 0.0;
  for (int j = 0; j < N; ++j) bracket += d[j] * ens.lambdas[j] * v[j];
  return unit_i_pow(n + 1) * std::exp(Complex(0.0, 2.0 * t)) * bracket;
}

Complex q_direct(const SolitonEnsemble& ens, int n, double t) {
  const int N = ens.size();
  if (N == 0) return 0.0;
  const auto d = dvec(ens, n + 1, t);
  const auto psi = psi_matrix(d, ens.lambdas);
  ComplexMatrix sys(2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    sys.at(i, i) = 1.0;
    sys.at(N + i, N + i) = 1.0;
    for (int j = 0; j < N; ++j) {
      sys.at(i, N + j) = -psi.at(i, j);
      sys.at(N + i, j) = psi.at(i, j);
    }
  }
  std::vector<Complex> rhs(2 * N);
  for (int i = 0; i < N; ++i) rhs[i] = d[i];
  std::vector<Complex> sol;
  try {
    sol = lu_solve(sys, rhs);
  } catch (const SingularMatrixError&) {
    // I + Psi^2 is positive definite, so a singular block system signals
    // numerical breakdown upstream (d overflow).
    throw OverflowError("q_direct: block system numerically singular");
  }
  Complex acc = 0.0;
  for (int j = 0; j < N; ++j) acc += ens.lambdas[j] * d[j] * sol[j];
  return unit_i_pow(n + 1) * std::exp(Complex(0.0, 2.0 * t)) * acc;
}

double c_nsoliton(const SolitonEnsemble& ens, int n, double t) {
  if (ens.size() == 0) return 1.0;
  const Complex ratio =
      tau_function(ens, n + 2, t, Complex(0.0, 1.0)) / tau_function(ens, n, t, Complex(0.0, 1.0));
  const double re = ratio.real();
  if (std::abs(re) < 1e-14) throw std::runtime_error("c_nsoliton: vanishing determinant ratio");
  return 1.0 / re;
}

}  // namespace algas
