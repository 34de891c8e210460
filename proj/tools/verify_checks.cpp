#include "verify_checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "algas/asymptotics.hpp"
#include "algas/fredholm.hpp"
#include "algas/nsoliton.hpp"

namespace algas::verify {

namespace {

SpectralBand default_band() { return SpectralBand(1.5, 2.5); }
ReflectionCoefficient unit_r() { return ReflectionCoefficient::constant(1.0); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// AL equation residual with a central-difference time derivative.
double al_residual(const std::function<Complex(int, double)>& q, int n, double t, double h) {
  const Complex qdot = (q(n, t + h) - q(n, t - h)) / (2.0 * h);
  const Complex qc = q(n, t), qp = q(n + 1, t), qm = q(n - 1, t);
  return std::abs(Complex(0.0, 1.0) * qdot -
                  (qp - 2.0 * qc + qm + std::norm(qc) * (qp + qm)));
}

CheckResult criterion_one_soliton() {
  CheckResult res{"one_soliton_amplitude", false, 0.0, 5e-2, ""};
  SolitonEnsemble ens;
  ens.lambdas = {2.0};
  ens.norms = {0.3};
  double best = 0.0;
  for (int n = -30; n <= 30; ++n) best = std::max(best, std::abs(q_nsoliton(ens, n, 0.0)));
  const double lattice_max = best;
  // Tighten by scanning the continuous envelope through t-shifts (the
  // envelope drifts across lattice sites as t varies).
  for (double t = 0.0; t <= 6.0; t += 0.05)
    for (int n = -30; n <= 30; ++n) best = std::max(best, std::abs(q_nsoliton(ens, n, t)));
  const double target = std::sinh(2.0 * std::log(2.0)) / 2.0;  // 0.9375
  res.measured = std::abs(best - target);
  res.pass = res.measured <= res.threshold;
  res.detail = "max|q|=" + fmt(best) + " (t=0 lattice max " + fmt(lattice_max) +
               "), target " + fmt(target);
  return res;
}

CheckResult criterion_tau_recurrence() {
  CheckResult res{"tau_recurrence", false, 0.0, 1e-10, ""};
  std::mt19937 rng(20250810);
  std::uniform_real_distribution<double> ulam(1.1, 3.0), unorm(0.1, 1.0), ueta(-0.8, 0.8);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 1 + static_cast<int>(rng() % 8);
    SolitonEnsemble ens;
    ens.lambdas.resize(N);
    ens.norms.resize(N);
    for (int j = 0; j < N; ++j) {
      ens.lambdas[j] = ulam(rng);
      ens.norms[j] = unorm(rng);
    }
    std::sort(ens.lambdas.begin(), ens.lambdas.end());
    const int n = static_cast<int>(rng() % 5) - 2;
    const double t = 0.25 * (rng() % 5);
    const Complex eta(ueta(rng), ueta(rng));
    const Complex lhs = tau_function(ens, n + 2, t, eta) / tau_function(ens, n, t, eta);
    const auto d = dvec(ens, n, t);
    const auto psi = psi_matrix(d, ens.lambdas);
    ComplexMatrix a(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) a.at(i, j) = (i == j ? 1.0 : 0.0) - eta * psi.at(i, j);
    const auto v = lu_solve(a, std::vector<Complex>(d.begin(), d.end()));
    Complex quad = 0.0;
    for (int j = 0; j < N; ++j) quad += d[j] * v[j];
    const Complex rhs = 1.0 + eta * quad;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = "20 random ensembles, N <= 8";
  return res;
}

CheckResult criterion_path_equivalence() {
  CheckResult res{"path_equivalence", false, 0.0, 1e-9, ""};
  const auto band = default_band();
  const auto ens = sample_spectrum(band, unit_r(), 5);
  double worst = 0.0;
  for (int n = -2; n <= 2; ++n)
    for (int it = 0; it < 5; ++it) {
      const double t = 0.25 * it;
      worst = std::max(worst, std::abs(q_nsoliton(ens, n, t) - q_direct(ens, n, t)));
    }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = "5x5 grid, N=5";
  return res;
}

CheckResult criterion_al_residual() {
  CheckResult res{"al_residual", false, 0.0, 1e-5, ""};
  const auto band = default_band();
  const auto r = unit_r();
  const auto ens = sample_spectrum(band, r, 4);
  const auto grid = make_nystrom_grid(band, 96);
  const auto q_ns = [&](int n, double t) { return q_nsoliton(ens, n, t); };
  const auto q_fr = [&](int n, double t) { return q_gas(band, r, grid, n, t); };
  double worst = 0.0;
  for (int n = -2; n <= 2; ++n)
    for (const double t : {0.3, 0.6}) {
      worst = std::max(worst, al_residual(q_ns, n, t, 1e-4));
      worst = std::max(worst, al_residual(q_fr, n, t, 1e-4));
    }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = "10 interior points, nsoliton N=4 and fredholm m=96";
  return res;
}

CheckResult criterion_n_to_gas() {
  CheckResult res{"nsoliton_to_gas_convergence", false, 0.0, 1e-3, ""};
  const auto band = default_band();
  const auto r = unit_r();
  const auto grid = make_nystrom_grid(band, 96);
  const Complex qg = q_gas(band, r, grid, -3, 0.3);
  double prev = 1e300;
  bool monotone = true;
  double last = 0.0;
  std::string seq;
  for (const int N : {50, 100, 200, 400}) {
    const Complex qn = q_nsoliton(sample_spectrum(band, r, N), -3, 0.3);
    last = std::abs(qn - qg);
    seq += " " + fmt(last);
    if (last >= prev) monotone = false;
    prev = last;
  }
  res.measured = last;
  res.pass = monotone && last <= res.threshold;
  res.detail = "errors:" + seq + (monotone ? " (monotone)" : " (NOT monotone)");
  return res;
}

CheckResult criterion_conservation() {
  CheckResult res{"conservation", false, 0.0, 1e-6, ""};
  const auto band = default_band();
  const auto r = unit_r();
  const auto ens = sample_spectrum(band, r, 6);
  const auto grid = make_nystrom_grid(band, 96);
  double worst = 0.0, worst_exact = 0.0;
  for (const int n : {-2, 0, 2})
    for (const double t : {0.2, 0.7}) {
      const double cn = c_nsoliton(ens, n, t);
      const double cn1 = c_nsoliton(ens, n + 1, t);
      const double q2 = std::norm(q_nsoliton(ens, n, t));
      worst = std::max(worst, std::abs(cn - (1.0 + q2) * cn1));
      const Complex ratio = tau_function(ens, n + 2, t, Complex(0, 1)) /
                            tau_function(ens, n, t, Complex(0, 1));
      worst_exact = std::max(worst_exact, std::abs(ratio.real() - 1.0 / cn));
      const double gn = c_gas(band, r, grid, n, t);
      const double gn1 = c_gas(band, r, grid, n + 1, t);
      const double gq2 = std::norm(q_gas(band, r, grid, n, t));
      worst = std::max(worst, std::abs(gn - (1.0 + gq2) * gn1));
    }
  res.measured = std::max(worst, worst_exact * 1e4);  // exact identity at 1e-10
  res.pass = worst <= 1e-6 && worst_exact <= 1e-10;
  res.detail = "telescoping " + fmt(worst) + ", exact tau identity " + fmt(worst_exact);
  return res;
}

CheckResult criterion_det_reality() {
  CheckResult res{"determinant_reality_t0", false, 0.0, 1e-12, ""};
  const auto band = default_band();
  const auto r = unit_r();
  const auto grid = make_nystrom_grid(band, 96);
  double worst = 0.0;
  int worst_n = 0;
  for (int n = -20; n <= 20; ++n) {
    const Complex det = fredholm_det(band, r, grid, n, 0.0);
    const double rel = std::abs(det.imag()) / std::max(1.0, std::abs(det));
    if (rel > worst) {
      worst = rel;
      worst_n = n;
    }
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = "max |Im det|/max(1,|det|) at n=" + std::to_string(worst_n);
  return res;
}

CheckResult criterion_g_periods() {
  CheckResult res{"g_function_periods", false, 0.0, 1e-8, ""};
  const auto band = default_band();
  const auto r = unit_r();
  double worst_a = std::abs(a_period_t0(band));
  const double xc = xi_crit(band);
  const double eb = (band.eta1 - 1.0 / band.eta1) / std::log(band.eta1);
  double worst_im_g = 0.0, worst_omdel = 0.0;
  for (const double xi : {xc - 0.5, 0.5 * (xc + (-eb))}) {
    const RayConstants rc = ray_constants(xi, band, r);
    worst_a = std::max(worst_a, std::abs(a_period_ray(rc, band)));
    worst_im_g = std::max(worst_im_g,
                          std::abs(g_infinity_ray(rc, band).imag() - (-(1.0 + M_PI * xi / 4.0))));
  }
  // Realness of Omega via the raw loop value and of Delta via the defining
  // complex-quadrature ratio with a nonconstant r.
  worst_omdel = std::abs(omega_loop_t0(band).imag());
  const auto r_poly = ReflectionCoefficient::polynomial({1.0, 1.0}, band);  // r(is) = 1 + s
  const Complex delta_def = delta_t0_defining_ratio(band, r_poly);
  worst_omdel = std::max(worst_omdel, std::abs(delta_def.imag()));
  worst_omdel = std::max(worst_omdel, std::abs(delta_def.real() - delta_t0(band, r_poly)) * 1e-2);
  const bool pass = worst_a <= 1e-8 && worst_im_g <= 1e-8 && worst_omdel <= 1e-10;
  res.measured = std::max({worst_a, worst_im_g, worst_omdel * 1e2});
  res.pass = pass;
  res.detail = "a-period " + fmt(worst_a) + ", Im g_inf err " + fmt(worst_im_g) +
               ", Omega/Delta realness " + fmt(worst_omdel);
  return res;
}

CheckResult criterion_appendix_b() {
  CheckResult res{"appendix_b_consistency", false, 0.0, 1e-10, ""};
  const auto band = default_band();
  const double xc = xi_crit(band);
  double worst = std::abs(xc - ND_ratio(band.eta2, band));
  bool monotone = true;
  double prev = 1e300;
  for (int i = 1; i <= 200; ++i) {
    const double a = band.eta1 + (band.eta2 - band.eta1) * i / 201.0;
    const double v = ND_ratio(a, band);
    if (v >= prev) monotone = false;
    prev = v;
  }
  const double eb = (band.eta1 - 1.0 / band.eta1) / std::log(band.eta1);
  for (int i = 1; i <= 20; ++i) {
    const double xi = xc + ((-eb) - xc) * i / 21.0;
    const double alpha = solve_alpha(xi, band);
    worst = std::max(worst, std::abs(ND_ratio(alpha, band) - xi));
  }
  res.measured = worst;
  res.pass = monotone && worst <= res.threshold;
  res.detail = std::string("xi_crit identity + 20 residuals") +
               (monotone ? ", ND monotone" : ", ND NOT monotone");
  return res;
}

CheckResult criterion_theta_nd() {
  CheckResult res{"theta_nd_identity", false, 0.0, 1e-10, ""};
  const auto band = default_band();
  const auto r = unit_r();
  const GasConstantsT0 c = gas_constants_t0(band, r);
  const RayConstants rc = ray_constants(xi_crit(band) - 0.5, band, r);
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uphase(-5.0, 5.0);
  double worst = 0.0;
  const double K1 = ellip_K(c.k_landen);
  const double K1r = ellip_K(rc.k_landen);
  for (int i = 0; i < 20; ++i) {
    const double x = uphase(rng);
    const double nd_form = c.amp * jacobi_nd(K1 * x / M_PI, c.k_landen);
    worst = std::max(worst, std::abs(z_inf_12_theta(x, c).real() - nd_form));
    const double nd_ray = rc.amp * jacobi_nd(K1r * x / M_PI, rc.k_landen);
    worst = std::max(worst, std::abs(z_inf_12_theta(x, rc, band).real() - nd_ray));
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = "20 random phases, t=0 and ray constant sets";
  return res;
}

CheckResult criterion_large_n() {
  CheckResult res{"large_n_asymptotics", false, 0.0, 0.0, ""};
  const SpectralBand band(1.3, 1.8);
  const auto r = unit_r();
  const auto grid = make_nystrom_grid(band, 140);
  const Complex a20 = q_asym_t0(-20, band, r);
  const Complex a40 = q_asym_t0(-40, band, r);
  const double e20 = std::abs(q_gas(band, r, grid, -20, 0.0) - a20);
  const double e40 = std::abs(q_gas(band, r, grid, -40, 0.0) - a40);
  const double ratio = e20 / e40;
  const bool ratio_ok = ratio >= 1.3 && ratio <= 6.0;
  const bool abs_ok = e40 < 0.1 * std::abs(a40);
  res.measured = ratio;
  res.threshold = 6.0;
  res.pass = ratio_ok && abs_ok;
  res.detail = "errors " + fmt(e20) + " -> " + fmt(e40) + ", ratio " + fmt(ratio) +
               ", |leading(-40)| = " + fmt(std::abs(a40));
  return res;
}

CheckResult criterion_large_t() {
  CheckResult res{"large_t_asymptotics_HII", false, 0.0, 6.0, ""};
  const auto r = unit_r();
  const double xi = -3.5;
  const auto run_band = [&](const SpectralBand& band) {
    double errs[2];
    int idx = 0;
    for (const double t : {20.0, 40.0}) {
      const int n = static_cast<int>(std::lround(xi * t)) - 1;
      const auto grid = make_nystrom_grid(band, 220);
      const RayAsym asym = q_asym_ray(n, t, band, r);
      errs[idx++] = std::abs(q_gas(band, r, grid, n, t) - asym.value);
    }
    return std::pair<double, double>(errs[0], errs[1]);
  };
  std::string note;
  for (const SpectralBand band : {SpectralBand(1.3, 1.8), SpectralBand(1.2, 1.5)}) {
    try {
      const auto [e20, e40] = run_band(band);
      const double ratio = e20 / e40;
      note += "band(" + fmt(band.eta1) + "," + fmt(band.eta2) + "): " + fmt(e20) + " -> " +
              fmt(e40) + " ratio " + fmt(ratio) + "; ";
      if (ratio >= 1.3 && ratio <= 6.0) {
        res.measured = ratio;
        res.pass = true;
        res.detail = note + "xi=-3.5, t in {20,40}";
        return res;
      }
      res.measured = ratio;
    } catch (const OverflowError& e) {
      note += std::string("overflow: ") + e.what() + "; ";
    }
  }
  res.detail = note + "no documented parameter set passed";
  return res;
}

CheckResult criterion_fast_decay() {
  CheckResult res{"fast_decay_region", false, 0.0, 0.0, ""};
  const auto band = default_band();
  const auto r = unit_r();
  double q10 = 0.0, q20 = 0.0;
  {
    const auto grid = make_nystrom_grid(band, 96);
    q10 = std::abs(q_gas(band, r, grid, 4, 10.0));   // (n+1)/t = 0.5
    q20 = std::abs(q_gas(band, r, grid, 9, 20.0));
  }
  // "At least geometric": a rate of e^{-0.5 per unit t} over ten units.
  const double bound = q10 * std::exp(-0.5 * 10.0);
  res.measured = q20;
  res.threshold = bound;
  res.pass = q20 <= bound && q10 < 1.0;
  res.detail = "|q(t=10)| = " + fmt(q10) + ", |q(t=20)| = " + fmt(q20) + ", bound " + fmt(bound);
  return res;
}

CheckResult criterion_specfun() {
  CheckResult res{"special_functions", false, 0.0, 1e-11, ""};
  double worst_quad = 0.0;
  for (const double k : {0.3, 0.5, 0.8}) {
    const auto dK = adaptive_quad(
        [k](double th) {
          const double s = std::sin(th);
          return Complex(1.0 / std::sqrt(1.0 - k * k * s * s), 0.0);
        },
        0.0, M_PI_2, 1e-14);
    worst_quad = std::max(worst_quad, std::abs(dK.real() - ellip_K(k)));
    const auto dE = adaptive_quad(
        [k](double th) {
          const double s = std::sin(th);
          return Complex(std::sqrt(1.0 - k * k * s * s), 0.0);
        },
        0.0, M_PI_2, 1e-14);
    worst_quad = std::max(worst_quad, std::abs(dE.real() - ellip_E(k)));
  }
  {
    const double k = 0.5, a2 = 0.3;
    const auto dPi = adaptive_quad(
        [k, a2](double th) {
          const double s = std::sin(th);
          return Complex(1.0 / ((1.0 - a2 * s * s) * std::sqrt(1.0 - k * k * s * s)), 0.0);
        },
        0.0, M_PI_2, 1e-14);
    worst_quad = std::max(worst_quad, std::abs(dPi.real() - ellip_Pi(a2, k)));
    const double m = 0.7;
    const auto dF = adaptive_quad(
        [k](double th) {
          const double s = std::sin(th);
          return Complex(1.0 / std::sqrt(1.0 - k * k * s * s), 0.0);
        },
        0.0, std::asin(m), 1e-14);
    worst_quad = std::max(worst_quad, std::abs(dF.real() - ellip_F(m, k)));
  }
  double worst_leg = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double k = 0.1 * i;
    const double kp = std::sqrt(1.0 - k * k);
    const double lhs = ellip_E(k) * ellip_K(kp) + ellip_E(kp) * ellip_K(k) -
                       ellip_K(k) * ellip_K(kp);
    worst_leg = std::max(worst_leg, std::abs(lhs - M_PI_2));
  }
  const Complex tau(0.0, 0.6647722172508482);
  const double theta_zero = std::abs(theta3((tau + 1.0) / 2.0, tau));
  const bool pass = worst_quad <= 1e-12 && worst_leg <= 1e-11 && theta_zero <= 1e-12;
  res.measured = std::max({worst_quad * 10.0, worst_leg, theta_zero * 10.0});
  res.pass = pass;
  res.detail = "quadrature " + fmt(worst_quad) + ", Legendre " + fmt(worst_leg) +
               ", theta zero " + fmt(theta_zero);
  return res;
}

}  // namespace

CheckResult run_criterion(int index) {
  switch (index) {
    case 1: return criterion_one_soliton();
    case 2: return criterion_tau_recurrence();
    case 3: return criterion_path_equivalence();
    case 4: return criterion_al_residual();
    case 5: return criterion_n_to_gas();
    case 6: return criterion_conservation();
    case 7: return criterion_det_reality();
    case 8: return criterion_g_periods();
    case 9: return criterion_appendix_b();
    case 10: return criterion_theta_nd();
    case 11: return criterion_large_n();
    case 12: return criterion_large_t();
    case 13: return criterion_fast_decay();
    case 14: return criterion_specfun();
    default: throw std::invalid_argument("run_criterion: index must be 1..14");
  }
}

std::vector<std::string> suite_names() {
  return {"identities", "gas", "asymptotics", "specfun", "all"};
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> suites = {
      {"identities", {1, 2, 3, 6}},
      {"gas", {4, 5, 7, 13}},
      {"asymptotics", {8, 9, 11, 12}},
      {"specfun", {10, 14}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) {
    std::string known;
    for (const auto& name : suite_names()) known += (known.empty() ? "" : ", ") + name;
    throw std::invalid_argument("unknown suite '" + suite + "'; available: " + known);
  }
  return it->second;
}

}  // namespace algas::verify
