#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <map>

#include "algas/specfun.hpp"
#include "algas/spectral.hpp"

namespace algas {

/// Branch points {b1 < b2 < b3 < b4} on the positive imaginary axis. The two
/// cuts are i(b3,b4) and i(b1,b2).
using BranchPoints = std::array<double, 4>;

BranchPoints branch_points_t0(const SpectralBand& band);
BranchPoints branch_points_ray(const SpectralBand& band, double alpha);

/// R(lambda) = sqrt(prod (lambda - i b_j)) on the principal sheet:
/// R ~ -lambda^2 at infinity, R(0) = 1, cuts on i(b1,b2) u i(b3,b4),
/// R(lambda) = -lambda^2 conj(R(1/conj(lambda))).
Complex R_eval(Complex lambda, const BranchPoints& bp);

enum class Side { Left, Right };  // Left = Re lambda < 0 ("+" side of upward cuts)

/// One-sided boundary value of R at lambda = i*s on a cut.
Complex R_side(double s, Side side, const BranchPoints& bp);

/// kappa1 = 2(2 Pi(l1^2,k)/K(k) - 1), the gap-period-killing constant of the
/// t=0 g-function.
double kappa1_const(const SpectralBand& band);

/// Everything Theorem-1.2-shaped evaluation needs at t=0.
struct GasConstantsT0 {
  double k = 0.0;        // modulus l1/l2
  double l1 = 0.0, l2 = 0.0;
  double kappa1 = 0.0;
  double Omega = 0.0;    // b-period of dg (i * ccw loop around Sigma_1)
  double Delta = 0.0;    // phase constant of the delta-function construction
  Complex tau_period;    // i K(k') / (2 K(k)), the normalized b-period
  double k_landen = 0.0; // 2 sqrt(k)/(1+k); jacobi_nd modulus matching tau_period
  double amp = 0.0;      // (sqrt(eta2/eta1) - sqrt(eta1/eta2)) / 2
};

GasConstantsT0 gas_constants_t0(const SpectralBand& band, const ReflectionCoefficient& r);

double omega_t0(const SpectralBand& band);
double delta_t0(const SpectralBand& band, const ReflectionCoefficient& r);

/// Raw loop values i * (ccw contour integral of dg around the upper cut);
/// omega_* are their real parts, the imaginary parts witness realness.
Complex omega_loop_t0(const SpectralBand& band);

/// Delta through its defining boundedness ratio
/// 2i int_{Sigma_1} ln r / R_+ ds / int_gap ds/R, by complex quadrature;
/// an independent oracle for the closed-form delta_t0.
Complex delta_t0_defining_ratio(const SpectralBand& band, const ReflectionCoefficient& r);
/// Ray analogue over i(eta1, alpha).
Complex delta_ray_defining_ratio(double alpha, const SpectralBand& band,
                                 const ReflectionCoefficient& r);

/// t=0 g-function, quadrature along cut-avoiding paths from i eta2.
Complex g_eval_t0(Complex lambda, const SpectralBand& band);
/// One-sided boundary value at lambda = i*y.
Complex g_t0_side(double y, Side side, const SpectralBand& band);

/// Abel map value A(0) = -(1/4)(1 + F(l2, k)/K(k)).
double abel_A0(const SpectralBand& band);

/// Appendix-B ratio N(alpha)/D(alpha); strictly decreasing on (eta1, eta2)
/// with ND(eta1+) = -(eta1 - 1/eta1)/ln eta1 and ND(eta2) = xi_crit.
double ND_ratio(double alpha, const SpectralBand& band);

double xi_crit(const SpectralBand& band);

/// Unique alpha(xi) in (eta1, eta2) with ND_ratio(alpha) = xi, by bisection to
/// |interval| < 1e-12. Requires xi strictly inside (xi_crit, -(eta1-1/eta1)/ln eta1).
double solve_alpha(double xi, const SpectralBand& band);

/// Ray g-function linear coefficients: c1 real, c0 purely imaginary, fixed by
/// the O(1/lambda) matching at infinity and the vanishing a-period.
struct CCoeffs {
  double c1 = 0.0;
  Complex c0;
};
CCoeffs c_coeffs(double xi, const SpectralBand& band);

/// Saddle point of the ray phase: lambda0 + 1/lambda0 = (c1 + sqrt(c1^2 + 4(-i c0 + 2)))/2.
double lambda0(double xi, const SpectralBand& band);

/// All constants of the modulated (H_I) / constant (T_II, H_II) wave.
struct RayConstants {
  double xi = 0.0;
  double alpha = 0.0;    // alpha(xi) in H_I, eta2 otherwise
  double k_xi = 0.0;     // l1 (alpha+1)/(alpha-1)
  double c1 = 0.0;
  Complex c0;
  double lambda0 = 0.0;
  double Omega = 0.0;
  double Delta = 0.0;
  double xi_critical = 0.0;
  Complex tau_period;    // i K(k_xi') / (2 K(k_xi))
  double k_landen = 0.0;
  double amp = 0.0;      // (sqrt(alpha/eta1) - sqrt(eta1/alpha)) / 2
};

RayConstants ray_constants(double xi, const SpectralBand& band, const ReflectionCoefficient& r);

std::pair<double, double> omega_delta_ray(double xi, const SpectralBand& band,
                                          const ReflectionCoefficient& r);

Complex g_eval_ray(Complex lambda, const RayConstants& rc, const SpectralBand& band);
Complex g_ray_side(double y, Side side, const RayConstants& rc, const SpectralBand& band);

/// lim_{lambda->infinity} (g(lambda) - phi(lambda)/(2t)); its imaginary part
/// equals -(1 + pi xi / 4).
Complex g_infinity_ray(const RayConstants& rc, const SpectralBand& band);

/// Vanishing-a-period witness: the straight gap integral of dg (should be ~0).
Complex a_period_t0(const SpectralBand& band);
Complex a_period_ray(const RayConstants& rc, const SpectralBand& band);

enum class Region { FastDecay, TransitionI, HyperellipticI, TransitionII, HyperellipticII };

struct RegionLabel {
  Region region = Region::FastDecay;
  int m = 0;  // Laguerre window index; meaningful for TransitionI only

  bool operator==(const RegionLabel&) const = default;
};

std::string to_string(const RegionLabel& label);

/// Classify (n+1, t). The T_II band |xi - xi_crit| < C t^{-2/3} takes
/// precedence; T_I windows in u = xi + (eta1-1/eta1)/ln eta1 are
/// [-(2m+1)c_t, -(2m-1)c_t) with c_t = max(ln t,0)/(t ln eta1), shared edges
/// assigned to the smaller m, and capped so the T_I strip stays within the
/// upper half of (xi_crit, -(eta1-1/eta1)/ln eta1).
RegionLabel classify_region(int n, double t, const SpectralBand& band, double C = 1.0);

/// Leading term of q_n(0) as n -> -infinity (nd form; the modulus fed to
/// jacobi_nd is the ascending-Landen partner of k so that it reproduces the
/// theta quotient at the surface half-period).
Complex q_asym_t0(int n, const SpectralBand& band, const ReflectionCoefficient& r);

struct RayAsym {
  Complex value;
  double error_scale = 0.0;
  RegionLabel label;
};

/// Leading term of q_n(t) for t -> +infinity in every region of the (n+1,t)
/// plane, with the paper's error scale.
RayAsym q_asym_ray(int n, double t, const SpectralBand& band, const ReflectionCoefficient& r,
                   double C = 1.0);

/// Theta-quotient form of Z^inf_12(0): (kappa(0)-1/kappa(0))/2 *
/// theta(x/2pi + 1/2) theta(0) / (theta(1/2) theta(x/2pi)) at the surface
/// half-period. Throws when the phase hits the theta zero lattice.
Complex z_inf_12_theta(double phase_arg, const GasConstantsT0& c);
Complex z_inf_12_theta(double phase_arg, const RayConstants& c, const SpectralBand& band);

/// Thread-safe per-xi cache of ray constants (root-find + quadratures are the
/// expensive step); read-only after insertion.
class RayCache {
 public:
  RayCache(SpectralBand band, ReflectionCoefficient r) : band_(band), r_(std::move(r)) {}
  const RayConstants& get(double xi);
  const SpectralBand& band() const { return band_; }
  const ReflectionCoefficient& reflection() const { return r_; }

 private:
  SpectralBand band_;
  ReflectionCoefficient r_;
  std::mutex mu_;
  std::map<double, std::unique_ptr<RayConstants>> cache_;
};

}  // namespace algas
