#include "algas/fredholm.hpp"

#include <cmath>

namespace algas {

namespace {

Complex unit_i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// K_{n,t}(i b; i a) in the real band coordinates: positive for a,b in the band.
double kernel_value(const ReflectionCoefficient& r, int n, double t, double a, double b) {
  const double pw = std::pow(a * b, -0.5 * n);
  const double ex = std::exp(-0.5 * t * (a + b - 1.0 / a - 1.0 / b));
  return -std::sqrt(r(a) * r(b)) * pw * ex / (2.0 * M_PI * (1.0 - a * b));
}

}  // namespace

NystromGrid make_nystrom_grid(const SpectralBand& band, int m) {
  if (m < 1) throw std::invalid_argument("make_nystrom_grid: m must be >= 1");
  const QuadratureRule rule = gauss_legendre(m);
  NystromGrid grid;
  grid.m = m;
  grid.svals.resize(m);
  grid.weights.resize(m);
  const double mid = 0.5 * (band.eta1 + band.eta2);
  const double rad = 0.5 * (band.eta2 - band.eta1);
  for (int i = 0; i < m; ++i) {
    grid.svals[i] = mid + rad * rule.nodes[i];
    grid.weights[i] = rad * rule.weights[i];
  }
  return grid;
}

GasKernelMatrix kernel_matrix(const SpectralBand& band, const ReflectionCoefficient& r,
                              const NystromGrid& grid, int n, double t) {
  (void)band;
  GasKernelMatrix out;
  out.n = n;
  out.t = t;
  out.entries = ComplexMatrix(grid.m, grid.m);
  for (int j = 0; j < grid.m; ++j)
    for (int k = j; k < grid.m; ++k) {
      const double v = std::sqrt(grid.weights[j] * grid.weights[k]) *
                       kernel_value(r, n, t, grid.svals[j], grid.svals[k]);
      if (std::abs(v) > 1e120)
        throw OverflowError("kernel_matrix: entry overflow; reduce |n| or t");
      out.entries.at(j, k) = v;
      out.entries.at(k, j) = v;
    }
  return out;
}

Complex fredholm_det(const SpectralBand& band, const ReflectionCoefficient& r,
                     const NystromGrid& grid, int n, double t) {
  const GasKernelMatrix km = kernel_matrix(band, r, grid, n, t);
  ComplexMatrix a(grid.m, grid.m);
  const Complex fold(0.0, -1.0);
  for (int i = 0; i < grid.m; ++i)
    for (int j = 0; j < grid.m; ++j)
      a.at(i, j) = (i == j ? 1.0 : 0.0) + fold * km.entries.at(i, j);
  return lu_det(a);
}

Complex q_gas(const SpectralBand& band, const ReflectionCoefficient& r, const NystromGrid& grid,
              int n, double t) {
  const GasKernelMatrix km = kernel_matrix(band, r, grid, n + 1, t);
  const int m = grid.m;
  const Complex fold(0.0, -1.0);
  ComplexMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a.at(i, j) = (i == j ? 1.0 : 0.0) + fold * km.entries.at(i, j);
  const LuFactor lu(std::move(a));
  if (lu.singular()) throw std::runtime_error("q_gas: near-singular resolvent");

  // Exact t-derivative of the kernel: factor (i/2)(zeta+s+1/zeta+1/s), which is
  // -(a+b-1/a-1/b)/2 in band coordinates.
  double trace_im = 0.0;
  std::vector<Complex> col(m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const double c =
          -0.5 * (grid.svals[i] + grid.svals[j] - 1.0 / grid.svals[i] - 1.0 / grid.svals[j]);
      col[i] = fold * c * km.entries.at(i, j);
    }
    trace_im += lu.solve(col)[j].imag();
  }
  return unit_i_pow(n + 1) * std::exp(Complex(0.0, 2.0 * t)) * trace_im;
}

double c_gas(const SpectralBand& band, const ReflectionCoefficient& r, const NystromGrid& grid,
             int n, double t) {
  const Complex ratio =
      fredholm_det(band, r, grid, n + 2, t) / fredholm_det(band, r, grid, n, t);
  const double re = ratio.real();
  if (std::abs(re) < 1e-14) throw std::runtime_error("c_gas: vanishing determinant ratio");
  return 1.0 / re;
}

std::vector<ConvergenceRow> convergence_report(const SpectralBand& band,
                                               const ReflectionCoefficient& r, int n, double t,
                                               std::span<const int> m_list) {
  for (size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1])
      throw std::invalid_argument("convergence_report: m_list must be increasing");
  std::vector<ConvergenceRow> rows;
  rows.reserve(m_list.size());
  for (const int m : m_list) {
    ConvergenceRow row;
    row.m = m;
    row.det = fredholm_det(band, r, make_nystrom_grid(band, m), n, t);
    if (!rows.empty()) {
      row.diff = std::abs(row.det - rows.back().det);
      if (rows.size() > 1 && rows.back().diff > 0.0 && row.diff > rows.back().diff)
        row.stagnated = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace algas
