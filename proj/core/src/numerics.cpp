#include "algas/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace algas {

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: m must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_m.
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = m * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[m - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;  // exact center node
  return rule;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix eye(n, n);
  for (int i = 0; i < n; ++i) eye.at(i, i) = 1.0;
  return eye;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

LuFactor::LuFactor(ComplexMatrix a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LuFactor: matrix must be square");
  const int n = lu_.rows();
  perm_.resize(n);
  for (int i = 0; i < n; ++i) perm_[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu_.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu_.at(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(lu_.at(col, j), lu_.at(piv, j));
      std::swap(perm_[col], perm_[piv]);
      sign_ = -sign_;
    }
    const Complex p = lu_.at(col, col);
    if (best == 0.0) {
      singular_ = true;
      pivots_positive_ = false;
      continue;
    }
    if (!(p.real() > 0.0) || std::abs(p.imag()) > 1e-10 * std::abs(p)) pivots_positive_ = false;
    for (int r = col + 1; r < n; ++r) {
      const Complex f = lu_.at(r, col) / p;
      lu_.at(r, col) = f;
      if (f == Complex{}) continue;
      for (int j = col + 1; j < n; ++j) lu_.at(r, j) -= f * lu_.at(col, j);
    }
  }
}

Complex LuFactor::det() const {
  Complex d = static_cast<double>(sign_);
  for (int i = 0; i < lu_.rows(); ++i) d *= lu_.at(i, i);
  return d;
}

std::vector<Complex> LuFactor::solve(std::vector<Complex> b) const {
  const int n = lu_.rows();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("LuFactor::solve: size mismatch");
  if (singular_) throw SingularMatrixError("LuFactor::solve: singular matrix");
  std::vector<Complex> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu_.at(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu_.at(i, j) * x[j];
    x[i] /= lu_.at(i, i);
  }
  return x;
}

Complex lu_det(const ComplexMatrix& a) { return LuFactor(a).det(); }

std::vector<Complex> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b) {
  return LuFactor(a).solve(b);
}

namespace {

Complex panel_gauss(const std::function<Complex(double)>& f, double a, double b,
                    const QuadratureRule& rule) {
  const double mid = 0.5 * (a + b);
  const double rad = 0.5 * (b - a);
  Complex acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + rad * rule.nodes[i]);
  return acc * rad;
}

struct AdaptiveState {
  const QuadratureRule& lo;
  const QuadratureRule& hi;
  int panels_left;
};

Complex adapt_rec(const std::function<Complex(double)>& f, double a, double b, double tol,
                  AdaptiveState& st, int depth) {
  const Complex coarse = panel_gauss(f, a, b, st.lo);
  const Complex fine = panel_gauss(f, a, b, st.hi);
  const double err = std::abs(fine - coarse);
  if (err <= tol || depth > 48) {
    if (depth > 48 && err > tol)
      throw std::runtime_error("adaptive_quad: recursion depth exhausted without convergence");
    return fine;
  }
  if (--st.panels_left <= 0)
    throw std::runtime_error("adaptive_quad: panel budget exceeded without convergence");
  const double mid = 0.5 * (a + b);
  return adapt_rec(f, a, mid, 0.5 * tol, st, depth + 1) +
         adapt_rec(f, mid, b, 0.5 * tol, st, depth + 1);
}

}  // namespace

Complex adaptive_quad(const std::function<Complex(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("adaptive_quad: need a < b");
  if (!(tol > 0)) throw std::invalid_argument("adaptive_quad: need tol > 0");
  static const QuadratureRule lo = gauss_legendre(12);
  static const QuadratureRule hi = gauss_legendre(25);
  AdaptiveState st{lo, hi, 200000};
  return adapt_rec(f, a, b, tol, st, 0);
}

}  // namespace algas
