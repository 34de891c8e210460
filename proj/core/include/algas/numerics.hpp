#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace algas {

using Complex = std::complex<double>;

/// Thrown when a quantity leaves the double-precision window the caller can
/// act on (shrink |n|, |t| or switch to a determinant-ratio path).
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes/weights on [-1,1]. Nodes are strictly increasing and symmetric
/// about 0; weights sum to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with m points, exact on polynomials of degree 2m-1.
/// Nodes are Newton-refined roots of P_m with 1e-15 stopping.
QuadratureRule gauss_legendre(int m);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("ComplexMatrix: nonpositive dims");
  }
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Complex& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// LU factorization with row partial pivoting. Kept so a factorization can be
/// reused for determinants and several right-hand sides.
class LuFactor {
 public:
  explicit LuFactor(ComplexMatrix a);

  Complex det() const;
  std::vector<Complex> solve(std::vector<Complex> b) const;
  bool singular() const { return singular_; }
  /// All pivots had positive real part and negligible imaginary part
  /// (Cholesky-style positivity witness for Hermitian positive definite input).
  bool pivots_positive() const { return pivots_positive_; }

 private:
  ComplexMatrix lu_;
  std::vector<int> perm_;
  int sign_ = 1;
  bool singular_ = false;
  bool pivots_positive_ = true;
};

/// Determinant via partial-pivot LU. Reports singular-to-working-precision
/// input through SingularMatrixError only for exactly-zero pivots; tiny
/// pivots simply propagate into the value.
Complex lu_det(const ComplexMatrix& a);

/// Solve A x = b via partial-pivot LU. Throws SingularMatrixError when a
/// pivot underflows to zero at working precision.
std::vector<Complex> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b);

/// Adaptive Gauss quadrature of f over [a,b] to absolute tolerance tol.
/// Endpoint inverse-square-root singularities must be removed by the caller
/// with an explicit substitution before calling. Throws when the panel
/// budget is exhausted without convergence.
Complex adaptive_quad(const std::function<Complex(double)>& f, double a, double b, double tol);

}  // namespace algas
