#include "algas/specfun.hpp"

#include <cmath>

namespace algas {

namespace {
constexpr double kCarlsonTol = 1e-14;

void require_modulus(double k, double hi_open) {
  if (!(k >= 0.0) || !(k < hi_open)) throw std::domain_error("elliptic: modulus out of range [0,1)");
}
}  // namespace

double carlson_rf(double x, double y, double z) {
  double xt = x, yt = y, zt = z;
  double mu = 0, dx = 0, dy = 0, dz = 0;
  do {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    mu = (xt + yt + zt) / 3.0;
    dx = (mu - xt) / mu;
    dy = (mu - yt) / mu;
    dz = (mu - zt) / mu;
  } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kCarlsonTol);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double carlson_rd(double x, double y, double z) {
  double xt = x, yt = y, zt = z;
  double sum = 0.0, fac = 1.0;
  double mu = 0, dx = 0, dy = 0, dz = 0;
  do {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (zt + lam));
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    mu = (xt + yt + 3.0 * zt) / 5.0;
    dx = (mu - xt) / mu;
    dy = (mu - yt) / mu;
    dz = (mu - zt) / mu;
  } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kCarlsonTol);
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee) +
              dz * (1.0 / 6.0 * ee + dz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * dz * ea))) /
             (mu * std::sqrt(mu));
}

double carlson_rc(double x, double y) {
  double xt = x, yt = y;
  double mu = 0, s = 0;
  do {
    const double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    mu = (xt + 2.0 * yt) / 3.0;
    s = (yt - xt) / (3.0 * mu);
  } while (std::abs(s) > kCarlsonTol);
  return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / std::sqrt(mu);
}

double carlson_rj(double x, double y, double z, double p) {
  double xt = x, yt = y, zt = z, pt = p;
  double sum = 0.0, fac = 1.0;
  double mu = 0, dx = 0, dy = 0, dz = 0, dp = 0;
  do {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    const double alpha = pt * (sx + sy + sz) + sx * sy * sz;
    const double beta = pt * (pt + lam) * (pt + lam);
    sum += fac * carlson_rc(alpha * alpha, beta);
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    pt = 0.25 * (pt + lam);
    mu = (xt + yt + zt + 2.0 * pt) / 5.0;
    dx = (mu - xt) / mu;
    dy = (mu - yt) / mu;
    dz = (mu - zt) / mu;
    dp = (mu - pt) / mu;
  } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) > kCarlsonTol);
  const double ea = dx * (dy + dz) + dy * dz;
  const double eb = dx * dy * dz;
  const double ec = dp * dp;
  const double ed = ea - 3.0 * ec;
  const double ee = eb + 2.0 * dp * (ea - ec);
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * ee) +
              eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * 3.0 / 26.0)) +
              dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0) - 1.0 / 3.0 * dp * ec) /
             (mu * std::sqrt(mu));
}

double ellip_K(double k) {
  require_modulus(k, 1.0);
  return carlson_rf(0.0, 1.0 - k * k, 1.0);
}

double ellip_E(double k) {
  require_modulus(k, 1.0);
  const double kp2 = 1.0 - k * k;
  return carlson_rf(0.0, kp2, 1.0) - (k * k / 3.0) * carlson_rd(0.0, kp2, 1.0);
}

double ellip_F(double m, double k) {
  require_modulus(k, 1.0);
  if (!(m >= 0.0) || !(m <= 1.0)) throw std::domain_error("ellip_F: limit m out of [0,1]");
  if (m == 0.0) return 0.0;
  return m * carlson_rf(1.0 - m * m, 1.0 - k * k * m * m, 1.0);
}

double ellip_Pi(double alpha2, double k) {
  require_modulus(k, 1.0);
  if (!(alpha2 < 1.0)) throw std::domain_error("ellip_Pi: characteristic alpha^2 must be < 1");
  const double kp2 = 1.0 - k * k;
  return carlson_rf(0.0, kp2, 1.0) + (alpha2 / 3.0) * carlson_rj(0.0, kp2, 1.0, 1.0 - alpha2);
}

int theta3_truncation(double im_tau) {
  return static_cast<int>(std::ceil(std::sqrt(36.0 / (M_PI * im_tau)))) + 2;
}

Complex theta3(Complex z, Complex tau) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("theta3: Im tau must be positive");
  const int L = theta3_truncation(tau.imag());
  const Complex two_pi_i(0.0, 2.0 * M_PI);
  const Complex pi_i(0.0, M_PI);
  Complex acc = 1.0;  // l = 0
  for (int l = 1; l <= L; ++l) {
    const Complex common = std::exp(pi_i * static_cast<double>(l) * static_cast<double>(l) * tau);
    acc += common * (std::exp(two_pi_i * static_cast<double>(l) * z) +
                     std::exp(-two_pi_i * static_cast<double>(l) * z));
  }
  return acc;
}

double theta_nd_ratio(double z, Complex tau) {
  const Complex num = theta3(0.0, tau) * theta3(Complex(z + 0.5, 0.0), tau);
  const Complex den = theta3(Complex(0.5, 0.0), tau) * theta3(Complex(z, 0.0), tau);
  if (std::abs(den) < 1e-13 * std::abs(num))
    throw std::domain_error("theta_nd_ratio: theta zero in denominator");
  return (num / den).real();
}

double jacobi_nd(double z, double k) {
  if (!(k > 0.0) || !(k < 1.0)) throw std::domain_error("jacobi_nd: modulus must lie in (0,1)");
  const double K = ellip_K(k);
  const double Kp = ellip_K(std::sqrt(1.0 - k * k));
  return theta_nd_ratio(z / (2.0 * K), Complex(0.0, Kp / K));
}

double landen_ascend(double k) { return 2.0 * std::sqrt(k) / (1.0 + k); }

}  // namespace algas
