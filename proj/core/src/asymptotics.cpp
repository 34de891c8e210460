#include "algas/asymptotics.hpp"

#include <cmath>

namespace algas {

namespace {

const Complex kImag(0.0, 1.0);

Complex unit_i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// sqrt with the branch cut along the negative imaginary direction,
// arg in (-pi/2, 3pi/2].
Complex sqrt_down(Complex z) {
  double th = std::arg(z);
  if (th <= -M_PI_2) th += 2.0 * M_PI;
  return std::polar(std::sqrt(std::abs(z)), 0.5 * th);
}

double lval(double x) { return (x - 1.0) / (x + 1.0); }

// --- fixed-node quadrature machinery ------------------------------------

const QuadratureRule& leg_rule() {
  static const QuadratureRule rule = gauss_legendre(96);
  return rule;
}

enum class EndSub { None, AtA, AtB };

// Integrate f along the straight segment [a,b], optionally removing an
// inverse-square-root endpoint singularity with the u^2 substitution.
Complex integrate_leg(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                      EndSub sub = EndSub::None) {
  const QuadratureRule& rule = leg_rule();
  Complex acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double w = 0.5 * rule.weights[i];
    switch (sub) {
      case EndSub::None:
        acc += w * f(a + (b - a) * u) * (b - a);
        break;
      case EndSub::AtA:
        acc += w * f(a + (b - a) * (u * u)) * 2.0 * (b - a) * u;
        break;
      case EndSub::AtB:
        acc += w * f(b + (a - b) * (u * u)) * 2.0 * (b - a) * u;
        break;
    }
  }
  return acc;
}

// Integral over the gap segment i(b2, b3) with both sqrt endpoints removed by
// s = b2 + (b3-b2) sin^2(theta).
Complex gap_integral(const std::function<Complex(Complex)>& f, double lo, double hi) {
  const QuadratureRule& rule = leg_rule();
  Complex acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = M_PI_2 * 0.5 * (rule.nodes[i] + 1.0);
    const double w = M_PI_2 * 0.5 * rule.weights[i];
    const double sn = std::sin(th), cs = std::cos(th);
    const double s = lo + (hi - lo) * sn * sn;
    acc += w * f(Complex(0.0, s)) * kImag * (hi - lo) * 2.0 * sn * cs;
  }
  return acc;
}

// Band integral int_lo^hi f(s) / |R_+(i s)| ds with the sin^2 substitution
// absorbing both inverse-square-root endpoints of |R_+|.
double band_over_absR(const std::function<double(double)>& f, double lo, double hi,
                      const BranchPoints& bp) {
  const QuadratureRule& rule = leg_rule();
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = M_PI_2 * 0.5 * (rule.nodes[i] + 1.0);
    const double w = M_PI_2 * 0.5 * rule.weights[i];
    const double sn = std::sin(th);
    const double s = lo + (hi - lo) * sn * sn;
    // |R_+(is)| = sqrt(prod |s - b_j|); the (s-lo)(hi-s) factor cancels the
    // substitution Jacobian ds = (hi-lo) 2 sin cos dth, leaving weight 2.
    double rest = 1.0;
    for (const double b : bp)
      if (b < lo - 1e-15 || b > hi + 1e-15) rest *= std::abs(s - b);
    acc += w * f(s) * 2.0 / std::sqrt(rest);
  }
  return acc;
}

// Closed-contour integral over an ellipse around the segment i(ylo, yhi),
// counterclockwise; spectrally accurate trapezoid rule.
Complex ellipse_loop(const std::function<Complex(Complex)>& f, double ylo, double yhi,
                     double clear_below) {
  const double cy = 0.5 * (ylo + yhi);
  const double half = 0.5 * (yhi - ylo);
  const double ry = half + 0.45 * clear_below;
  const double rx = 0.6 * ry;
  const int M = 600;
  Complex acc = 0.0;
  for (int i = 0; i < M; ++i) {
    const double th = 2.0 * M_PI * i / M;
    const Complex z(rx * std::cos(th), cy + ry * std::sin(th));
    const Complex dz(-rx * std::sin(th), ry * std::cos(th));
    acc += f(z) * dz;
  }
  return acc * (2.0 * M_PI / M);
}

// Path from the top branch point i*btop to lambda, avoiding both cuts:
// i*btop --(sqrt sub)--> X + i*btop --> X + i*Im(lambda) --> lambda, with X on
// the side of Re(lambda) (Right for targets on the axis).
Complex path_from_top(const std::function<Complex(Complex)>& dg, double btop, Complex lambda,
                      Side side_hint, bool sub_at_target) {
  const double side = (lambda.real() > 0.0 || (lambda.real() == 0.0 && side_hint == Side::Right))
                          ? 1.0
                          : -1.0;
  const double X = side * (btop + 0.8 * std::max(1.0, std::abs(lambda.real())));
  const Complex p1(X, btop);
  const Complex p2(X, lambda.imag());
  Complex acc = integrate_leg(dg, Complex(0.0, btop), p1, EndSub::AtA);
  acc += integrate_leg(dg, p1, p2);
  acc += integrate_leg(dg, p2, lambda, sub_at_target ? EndSub::AtB : EndSub::None);
  return acc;
}

std::function<Complex(Complex)> dg_t0_fn(const SpectralBand& band) {
  const BranchPoints bp = branch_points_t0(band);
  const double kap = kappa1_const(band);
  return [bp, kap](Complex s) {
    return -0.5 * (s - 1.0 / s - kImag * kap) / R_eval(s, bp);
  };
}

std::function<Complex(Complex)> dg_ray_fn(const RayConstants& rc, const SpectralBand& band) {
  const BranchPoints bp = branch_points_ray(band, rc.alpha);
  const double c1 = rc.c1;
  const Complex c0 = rc.c0;
  return [bp, c1, c0](Complex s) {
    return 0.5 * (kImag * (s * s + 1.0 / (s * s)) + c1 * (s - 1.0 / s) + c0) / R_eval(s, bp);
  };
}

double etabar_of(const SpectralBand& band) {
  return (band.eta1 - 1.0 / band.eta1) / std::log(band.eta1);
}

Complex half_period_tau(double k) {
  return Complex(0.0, ellip_K(std::sqrt(1.0 - k * k)) / (2.0 * ellip_K(k)));
}

}  // namespace

BranchPoints branch_points_t0(const SpectralBand& band) {
  return {1.0 / band.eta2, 1.0 / band.eta1, band.eta1, band.eta2};
}

BranchPoints branch_points_ray(const SpectralBand& band, double alpha) {
  return {1.0 / alpha, 1.0 / band.eta1, band.eta1, alpha};
}

Complex R_eval(Complex lambda, const BranchPoints& bp) {
  Complex p = 1.0;
  for (const double b : bp) p *= sqrt_down(lambda - Complex(0.0, b));
  return -p;
}

Complex R_side(double s, Side side, const BranchPoints& bp) {
  Complex p = 1.0;
  for (const double b : bp) {
    const double th = (b > s) ? (side == Side::Left ? 1.5 * M_PI : -M_PI_2) : M_PI_2;
    p *= std::polar(std::sqrt(std::abs(s - b)), 0.5 * th);
  }
  return -p;
}

double kappa1_const(const SpectralBand& band) {
  const double l1 = lval(band.eta1), l2 = lval(band.eta2);
  const double k = l1 / l2;
  return 2.0 * (2.0 * ellip_Pi(l1 * l1, k) / ellip_K(k) - 1.0);
}

Complex omega_loop_t0(const SpectralBand& band) {
  const auto dg = dg_t0_fn(band);
  const Complex loop =
      ellipse_loop(dg, band.eta1, band.eta2,
                   0.5 * (band.eta1 + band.eta2) - 0.5 * (band.eta2 - band.eta1) - 1.0 / band.eta1);
  return kImag * loop;
}

double omega_t0(const SpectralBand& band) { return omega_loop_t0(band).real(); }

double delta_t0(const SpectralBand& band, const ReflectionCoefficient& r) {
  const BranchPoints bp = branch_points_t0(band);
  const double l1 = lval(band.eta1), l2 = lval(band.eta2);
  const double k = l1 / l2;
  const double integral =
      band_over_absR([&r](double s) { return std::log(r(s)); }, band.eta1, band.eta2, bp);
  return -2.0 * l2 * integral / (std::sqrt((1.0 - l1 * l1) * (1.0 - l2 * l2)) * ellip_K(k));
}

namespace {

Complex delta_defining_ratio_impl(double top, const BranchPoints& bp, const SpectralBand& band,
                                  const ReflectionCoefficient& r) {
  // Numerator 2i int_{i eta1}^{i top} ln r / R_+ ds with the one-sided boundary
  // value of R and the sqrt endpoints removed by the sin^2 substitution.
  const QuadratureRule& rule = leg_rule();
  Complex num = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = M_PI_2 * 0.5 * (rule.nodes[i] + 1.0);
    const double w = M_PI_2 * 0.5 * rule.weights[i];
    const double sn = std::sin(th), cs = std::cos(th);
    const double b = band.eta1 + (top - band.eta1) * sn * sn;
    const Complex h = R_side(b, Side::Left, bp) / ((top - band.eta1) * sn * cs);
    num += w * std::log(r(b)) * 2.0 / h;
  }
  num *= 2.0 * kImag * kImag;  // 2i and the i from ds
  const Complex den =
      gap_integral([&bp](Complex s) { return 1.0 / R_eval(s, bp); }, 1.0 / band.eta1, band.eta1);
  return num / den;
}

}  // namespace

Complex delta_t0_defining_ratio(const SpectralBand& band, const ReflectionCoefficient& r) {
  return delta_defining_ratio_impl(band.eta2, branch_points_t0(band), band, r);
}

Complex delta_ray_defining_ratio(double alpha, const SpectralBand& band,
                                 const ReflectionCoefficient& r) {
  return delta_defining_ratio_impl(alpha, branch_points_ray(band, alpha), band, r);
}

Complex g_eval_t0(Complex lambda, const SpectralBand& band) {
  return path_from_top(dg_t0_fn(band), band.eta2, lambda, Side::Right, false);
}

Complex g_t0_side(double y, Side side, const SpectralBand& band) {
  const bool at_branch =
      std::abs(y - band.eta1) < 1e-13 || std::abs(y - 1.0 / band.eta1) < 1e-13 ||
      std::abs(y - 1.0 / band.eta2) < 1e-13;
  return path_from_top(dg_t0_fn(band), band.eta2, Complex(0.0, y), side, at_branch);
}

double abel_A0(const SpectralBand& band) {
  const double l1 = lval(band.eta1), l2 = lval(band.eta2);
  const double k = l1 / l2;
  return -0.25 * (1.0 + ellip_F(l2, k) / ellip_K(k));
}

GasConstantsT0 gas_constants_t0(const SpectralBand& band, const ReflectionCoefficient& r) {
  GasConstantsT0 c;
  c.l1 = lval(band.eta1);
  c.l2 = lval(band.eta2);
  c.k = c.l1 / c.l2;
  c.kappa1 = kappa1_const(band);
  c.Omega = omega_t0(band);
  c.Delta = delta_t0(band, r);
  c.tau_period = half_period_tau(c.k);
  c.k_landen = landen_ascend(c.k);
  c.amp = 0.5 * (std::sqrt(band.eta2 / band.eta1) - std::sqrt(band.eta1 / band.eta2));
  return c;
}

namespace {

// Gap ratio int (s^2 + s^-2)/R / int 1/R in Appendix-B closed form.
double gap_ratio_J(double alpha, const SpectralBand& band) {
  const double l1 = lval(band.eta1);
  const double k = l1 * (alpha + 1.0) / (alpha - 1.0);
  const double K = ellip_K(k), E = ellip_E(k), P = ellip_Pi(l1 * l1, k);
  return 2.0 + (8.0 * l1 * l1 / ((k * k - l1 * l1) * (l1 * l1 - 1.0))) *
                   (E / K + (k * k - l1 * l1) / (l1 * l1) -
                    (k * k - l1 * l1 * l1 * l1) / (l1 * l1) * P / K);
}

double D_of(double alpha, const SpectralBand& band) {
  const double l1 = lval(band.eta1);
  const double k = l1 * (alpha + 1.0) / (alpha - 1.0);
  return alpha + 1.0 / alpha + 2.0 - 4.0 * ellip_Pi(l1 * l1, k) / ellip_K(k);
}

}  // namespace

double ND_ratio(double alpha, const SpectralBand& band) {
  if (!(alpha > band.eta1) || !(alpha <= band.eta2))
    throw std::domain_error("ND_ratio: alpha must lie in (eta1, eta2]");
  const double D = D_of(alpha, band);
  const double N = -alpha * alpha - 1.0 / (alpha * alpha) +
                   0.5 * (alpha + 1.0 / alpha + band.eta1 + 1.0 / band.eta1) * D +
                   gap_ratio_J(alpha, band);
  return N / D;
}

double xi_crit(const SpectralBand& band) {
  const double e2 = band.eta2;
  const double num = -e2 * e2 - 1.0 / (e2 * e2) + gap_ratio_J(e2, band);
  const double den = D_of(e2, band);
  return 0.5 * (band.eta1 + 1.0 / band.eta1 + e2 + 1.0 / e2) + num / den;
}

double solve_alpha(double xi, const SpectralBand& band) {
  const double lo_xi = xi_crit(band);
  const double hi_xi = -etabar_of(band);
  if (!(xi > lo_xi) || !(xi < hi_xi))
    throw std::domain_error("solve_alpha: xi outside (xi_crit, -(eta1-1/eta1)/ln eta1)");
  double lo = band.eta1 * (1.0 + 1e-14), hi = band.eta2;
  // ND_ratio decreases from hi_xi to lo_xi on (eta1, eta2].
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (ND_ratio(mid, band) > xi ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CCoeffs c_coeffs(double xi, const SpectralBand& band) {
  const double alpha = (xi <= xi_crit(band)) ? band.eta2 : solve_alpha(xi, band);
  CCoeffs c;
  c.c1 = -xi + 0.5 * (band.eta1 + 1.0 / band.eta1 + alpha + 1.0 / alpha);
  const BranchPoints bp = branch_points_ray(band, alpha);
  const double c1 = c.c1;
  const Complex num = gap_integral(
      [&bp, c1](Complex s) {
        return (kImag * (s * s + 1.0 / (s * s)) + c1 * (s - 1.0 / s)) / R_eval(s, bp);
      },
      1.0 / band.eta1, band.eta1);
  const Complex den =
      gap_integral([&bp](Complex s) { return 1.0 / R_eval(s, bp); }, 1.0 / band.eta1, band.eta1);
  c.c0 = -num / den;
  return c;
}

double lambda0(double xi, const SpectralBand& band) {
  const CCoeffs c = c_coeffs(xi, band);
  const double q = (-kImag * c.c0).real() + 2.0;  // -i c0 + 2, real
  const double disc = c.c1 * c.c1 + 4.0 * q;
  if (disc < 0.0) throw std::domain_error("lambda0: no real saddle");
  const double x = 0.5 * (c.c1 + std::sqrt(disc));
  if (x < 2.0) throw std::domain_error("lambda0: saddle off the real lattice circle");
  return 0.5 * (x + std::sqrt(x * x - 4.0));
}

namespace {

double delta_ray_value(double alpha, const SpectralBand& band, const ReflectionCoefficient& r) {
  const BranchPoints bp = branch_points_ray(band, alpha);
  const double l1 = lval(band.eta1), la = lval(alpha);
  const double kx = l1 / la;
  if (alpha - band.eta1 < 1e-12) return 0.0;  // collapsing cut
  const double integral =
      band_over_absR([&r](double s) { return std::log(r(s)); }, band.eta1, alpha, bp);
  return -2.0 * la * integral / (std::sqrt((1.0 - l1 * l1) * (1.0 - la * la)) * ellip_K(kx));
}

}  // namespace

RayConstants ray_constants(double xi, const SpectralBand& band, const ReflectionCoefficient& r) {
  RayConstants rc;
  rc.xi = xi;
  rc.xi_critical = xi_crit(band);
  rc.alpha = (xi <= rc.xi_critical) ? band.eta2 : solve_alpha(xi, band);
  const CCoeffs cc = c_coeffs(xi, band);
  rc.c1 = cc.c1;
  rc.c0 = cc.c0;
  rc.k_xi = lval(band.eta1) / lval(rc.alpha);
  {
    const double q = (-kImag * rc.c0).real() + 2.0;
    const double disc = rc.c1 * rc.c1 + 4.0 * q;
    const double x = 0.5 * (rc.c1 + std::sqrt(std::max(disc, 0.0)));
    rc.lambda0 = (x >= 2.0) ? 0.5 * (x + std::sqrt(x * x - 4.0)) : rc.alpha;
  }
  const auto dg = dg_ray_fn(rc, band);
  rc.Omega = (kImag * ellipse_loop(dg, band.eta1, rc.alpha,
                                   0.5 * (band.eta1 + rc.alpha) -
                                       0.5 * (rc.alpha - band.eta1) - 1.0 / band.eta1))
                 .real();
  rc.Delta = delta_ray_value(rc.alpha, band, r);
  rc.tau_period = half_period_tau(rc.k_xi);
  rc.k_landen = landen_ascend(rc.k_xi);
  rc.amp = 0.5 * (std::sqrt(rc.alpha / band.eta1) - std::sqrt(band.eta1 / rc.alpha));
  return rc;
}

std::pair<double, double> omega_delta_ray(double xi, const SpectralBand& band,
                                          const ReflectionCoefficient& r) {
  const RayConstants rc = ray_constants(xi, band, r);
  return {rc.Omega, rc.Delta};
}

Complex g_eval_ray(Complex lambda, const RayConstants& rc, const SpectralBand& band) {
  return path_from_top(dg_ray_fn(rc, band), rc.alpha, lambda, Side::Right, false);
}

Complex g_ray_side(double y, Side side, const RayConstants& rc, const SpectralBand& band) {
  const bool at_branch = std::abs(y - band.eta1) < 1e-13 ||
                         std::abs(y - 1.0 / band.eta1) < 1e-13 ||
                         std::abs(y - 1.0 / rc.alpha) < 1e-13;
  return path_from_top(dg_ray_fn(rc, band), rc.alpha, Complex(0.0, y), side, at_branch);
}

Complex g_infinity_ray(const RayConstants& rc, const SpectralBand& band) {
  const auto dg = dg_ray_fn(rc, band);
  const double xi = rc.xi;
  const auto phi_half = [xi](Complex lam) {
    return 0.5 * (-kImag * (lam + 1.0 / lam - 2.0) + xi * std::log(lam));
  };
  const auto dphi_half = [xi](Complex lam) {
    return 0.5 * (-kImag * (1.0 - 1.0 / (lam * lam)) + xi / lam);
  };
  const double X0 = 8.0 * band.eta2;
  // g(X0) along the canonical path, then the tail of (dg - dphi/2t) mapped to
  // a finite interval by x = X0/u.
  Complex acc = path_from_top(dg, rc.alpha, Complex(X0, 0.0), Side::Right, false);
  acc -= phi_half(Complex(X0, 0.0));
  const QuadratureRule& rule = leg_rule();
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double w = 0.5 * rule.weights[i];
    const Complex x(X0 / u, 0.0);
    acc += w * (dg(x) - dphi_half(x)) * X0 / (u * u);
  }
  return acc;
}

Complex a_period_t0(const SpectralBand& band) {
  return gap_integral(dg_t0_fn(band), 1.0 / band.eta1, band.eta1);
}

Complex a_period_ray(const RayConstants& rc, const SpectralBand& band) {
  return gap_integral(dg_ray_fn(rc, band), 1.0 / band.eta1, band.eta1);
}

std::string to_string(const RegionLabel& label) {
  switch (label.region) {
    case Region::FastDecay: return "fast_decay";
    case Region::TransitionI: return "T_I(" + std::to_string(label.m) + ")";
    case Region::HyperellipticI: return "H_I";
    case Region::TransitionII: return "T_II";
    case Region::HyperellipticII: return "H_II";
  }
  return "?";
}

RegionLabel classify_region(int n, double t, const SpectralBand& band, double C) {
  if (!(t > 0.0)) throw std::domain_error("classify_region: t must be positive");
  const double xi = (n + 1.0) / t;
  const double eb = etabar_of(band);
  const double xc = xi_crit(band);
  if (std::abs(xi - xc) < C * std::pow(t, -2.0 / 3.0)) return {Region::TransitionII, 0};
  const double u = xi + eb;
  const double ct = std::max(std::log(t), 0.0) / (t * std::log(band.eta1));
  const double strip_cap = 0.5 * (-eb - xc);  // half the H_I interval
  if (ct > 0.0 && u < ct) {
    if (u >= -ct) return {Region::TransitionI, 0};
    const double v = -u / ct;
    const int m = static_cast<int>(std::ceil(0.5 * (v - 1.0) - 1e-12));
    if ((2.0 * m + 1.0) * ct <= strip_cap) return {Region::TransitionI, m};
  }
  if (xi > -eb) return {Region::FastDecay, 0};
  if (xi > xc) return {Region::HyperellipticI, 0};
  return {Region::HyperellipticII, 0};
}

Complex q_asym_t0(int n, const SpectralBand& band, const ReflectionCoefficient& r) {
  const GasConstantsT0 c = gas_constants_t0(band, r);
  const double x = (n + 1.0) * c.Omega + c.Delta;
  const double K1 = ellip_K(c.k_landen);
  return unit_i_pow(n + 1) * c.amp * jacobi_nd(K1 * x / M_PI, c.k_landen);
}

RayAsym q_asym_ray(int n, double t, const SpectralBand& band, const ReflectionCoefficient& r,
                   double C) {
  RayAsym out;
  out.label = classify_region(n, t, band, C);
  const double xi = (n + 1.0) / t;
  const double u = xi + etabar_of(band);
  switch (out.label.region) {
    case Region::FastDecay:
      out.value = 0.0;
      out.error_scale = std::exp(-t * u * std::log(band.eta1));
      return out;
    case Region::TransitionI: {
      out.value = 0.0;
      const int m = out.label.m;
      const double e1 = (2.0 * m - 1.0) * std::log(t) + t * u * std::log(band.eta1);
      const double e2 = -(2.0 * m + 1.0) * std::log(t) - t * u * std::log(band.eta1);
      out.error_scale = std::exp(std::min(e1, e2));
      return out;
    }
    case Region::HyperellipticI:
    case Region::TransitionII:
    case Region::HyperellipticII: {
      const RayConstants rc = ray_constants(xi, band, r);
      const double x = t * rc.Omega + rc.Delta;
      out.value = unit_i_pow(n + 1) * std::exp(Complex(0.0, 2.0 * t)) * rc.amp *
                  theta_nd_ratio(x / (2.0 * M_PI), rc.tau_period);
      out.error_scale = (out.label.region == Region::TransitionII) ? std::pow(t, -1.0 / 3.0)
                                                                   : 1.0 / t;
      return out;
    }
  }
  return out;
}

Complex z_inf_12_theta(double phase_arg, const GasConstantsT0& c) {
  // kappa(0) - 1/kappa(0) = sqrt(eta2/eta1) - sqrt(eta1/eta2) = 2 amp.
  return c.amp * theta_nd_ratio(phase_arg / (2.0 * M_PI), c.tau_period);
}

Complex z_inf_12_theta(double phase_arg, const RayConstants& c, const SpectralBand& band) {
  (void)band;
  return c.amp * theta_nd_ratio(phase_arg / (2.0 * M_PI), c.tau_period);
}

const RayConstants& RayCache::get(double xi) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(xi);
  if (it == cache_.end())
    it = cache_.emplace(xi, std::make_unique<RayConstants>(ray_constants(xi, band_, r_))).first;
  return *it->second;
}

}  // namespace algas
