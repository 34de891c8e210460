#pragma once

#include "algas/numerics.hpp"

namespace algas {

// Complete and incomplete Legendre elliptic integrals, modulus convention:
//   K(k) = int_0^1 ds / sqrt((1-s^2)(1-k^2 s^2))
//   E(k) = int_0^1 sqrt((1-k^2 s^2)/(1-s^2)) ds
//   F(m,k) = int_0^m ds / sqrt((1-s^2)(1-k^2 s^2)),        m in [0,1]
//   Pi(a2,k) = int_0^1 ds / ((1-a2 s^2) sqrt((1-s^2)(1-k^2 s^2)))
// Evaluated through Carlson symmetric forms.
double ellip_K(double k);
double ellip_E(double k);
double ellip_F(double m, double k);
double ellip_Pi(double alpha2, double k);

// Carlson symmetric integrals (exposed for tests).
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);
double carlson_rc(double x, double y);

/// Riemann theta function  theta(z,tau) = sum_l exp(2 pi i l z + pi i l^2 tau),
/// truncated so the tail is below 1e-15 relative (requires Im tau > 0).
Complex theta3(Complex z, Complex tau);
/// Truncation half-length used by theta3 (exposed for the tail tests).
int theta3_truncation(double im_tau);

/// theta(0)theta(z+1/2) / (theta(1/2)theta(z)) for real z -- the theta-quotient
/// behind every leading-order wave amplitude here. With tau = i K(k')/K(k)
/// this is the classical nd(2K(k)z, k); the asymptotic formulas feed it the
/// half-period tau = i K(k')/(2K(k)) of the underlying genus-1 surface, which
/// is the same quotient at the ascending-Landen modulus 2 sqrt(k)/(1+k).
double theta_nd_ratio(double z, Complex tau);

/// Jacobi nd = 1/dn, classical convention: nd(0,k)=1, nd(K(k),k)=1/sqrt(1-k^2),
/// period 2K(k). Computed as the theta quotient at tau = i K(k')/K(k).
double jacobi_nd(double z, double k);

/// Ascending Landen modulus 2 sqrt(k)/(1+k); the modulus at which jacobi_nd
/// reproduces the theta quotient taken at the surface half-period.
double landen_ascend(double k);

}  // namespace algas
