#pragma once

#include <string>
#include <vector>

#include "algas/numerics.hpp"

namespace algas {

/// The band endpoints: Sigma_1 = i(eta1, eta2), Sigma_2 = i(1/eta2, 1/eta1),
/// with 1 < eta1 < eta2.
struct SpectralBand {
  double eta1 = 0.0;
  double eta2 = 0.0;

  SpectralBand(double e1, double e2) : eta1(e1), eta2(e2) {
    if (!(1.0 < eta1 && eta1 < eta2))
      throw std::invalid_argument("SpectralBand: need 1 < eta1 < eta2");
  }
};

/// Positive weight r on the band, evaluated at i*s in the real band
/// coordinate s in [eta1, eta2]. Positivity is enforced at construction.
class ReflectionCoefficient {
 public:
  enum class Kind { Constant, Polynomial, Tabulated };

  static ReflectionCoefficient constant(double value);
  /// Polynomial in the real band coordinate s (lambda = i s): sum c_j s^j.
  static ReflectionCoefficient polynomial(std::vector<double> coeffs, const SpectralBand& band);
  /// Tabulated samples (s_i, r_i) on [eta1, eta2], monotone cubic interpolated;
  /// rejected at construction if any interpolated value is <= 0.
  static ReflectionCoefficient tabulated(std::vector<double> s, std::vector<double> r,
                                         const SpectralBand& band);

  double operator()(double s) const;
  Kind kind() const { return kind_; }

 private:
  ReflectionCoefficient() = default;
  Kind kind_ = Kind::Constant;
  double value_ = 1.0;
  std::vector<double> coeffs_;
  std::vector<double> xs_, ys_, slopes_;  // Fritsch-Carlson data
};

struct LatticePoint {
  int n = 0;
  double t = 0.0;
};

/// Discrete eigenvalues lambda_j > 1 (strictly increasing) with norming
/// constants Lambda_j > 0.
struct SolitonEnsemble {
  std::vector<double> lambdas;
  std::vector<double> norms;

  int size() const { return static_cast<int>(lambdas.size()); }
};

/// phi(lambda; n, t) = -i t (lambda + 1/lambda - 2) + n log(lambda), with the
/// logarithm branch cut along the negative imaginary axis (arg in (-pi/2, 3pi/2]).
Complex phase_phi(Complex lambda, int n, double t);

/// Branch of log used by phase_phi.
Complex log_cut_negative_imag(Complex lambda);

/// lambda_j = eta1 + (j-1)(eta2-eta1)/N,  Lambda_j = r(i lambda_j) / (2 pi N).
SolitonEnsemble sample_spectrum(const SpectralBand& band, const ReflectionCoefficient& r, int N);

/// Problem definition: band + reflection coefficient.
struct Problem {
  SpectralBand band;
  ReflectionCoefficient reflection;
};

/// Load {"eta1":..., "eta2":..., "reflection":{"kind":..., "params":...}} and
/// validate. Throws std::invalid_argument with a diagnostic on bad input.
Problem load_problem(const std::string& path);
Problem parse_problem(const std::string& json_text);

}  // namespace algas
