#include "algas/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace algas {

ReflectionCoefficient ReflectionCoefficient::constant(double value) {
  if (!(value > 0.0)) throw std::invalid_argument("reflection: constant must be positive");
  ReflectionCoefficient r;
  r.kind_ = Kind::Constant;
  r.value_ = value;
  return r;
}

ReflectionCoefficient ReflectionCoefficient::polynomial(std::vector<double> coeffs,
                                                        const SpectralBand& band) {
  if (coeffs.empty()) throw std::invalid_argument("reflection: empty polynomial");
  ReflectionCoefficient r;
  r.kind_ = Kind::Polynomial;
  r.coeffs_ = std::move(coeffs);
  // Positivity on a fine grid over [eta1, eta2].
  for (int i = 0; i <= 2000; ++i) {
    const double s = band.eta1 + (band.eta2 - band.eta1) * i / 2000.0;
    if (!(r(s) > 0.0))
      throw std::invalid_argument("reflection: polynomial not positive on the band");
  }
  return r;
}

ReflectionCoefficient ReflectionCoefficient::tabulated(std::vector<double> s,
                                                       std::vector<double> y,
                                                       const SpectralBand& band) {
  if (s.size() != y.size() || s.size() < 2)
    throw std::invalid_argument("reflection: tabulated needs >= 2 matching samples");
  if (!std::is_sorted(s.begin(), s.end()))
    throw std::invalid_argument("reflection: tabulated abscissae must be increasing");
  if (s.front() > band.eta1 + 1e-12 || s.back() < band.eta2 - 1e-12)
    throw std::invalid_argument("reflection: tabulated samples must cover [eta1, eta2]");

  ReflectionCoefficient r;
  r.kind_ = Kind::Tabulated;
  r.xs_ = std::move(s);
  r.ys_ = std::move(y);

  // Fritsch-Carlson monotone cubic slopes.
  const size_t n = r.xs_.size();
  std::vector<double> h(n - 1), delta(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = r.xs_[i + 1] - r.xs_[i];
    if (!(h[i] > 0)) throw std::invalid_argument("reflection: duplicate abscissae");
    delta[i] = (r.ys_[i + 1] - r.ys_[i]) / h[i];
  }
  r.slopes_.assign(n, 0.0);
  r.slopes_[0] = delta[0];
  r.slopes_[n - 1] = delta[n - 2];
  for (size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0)
      r.slopes_[i] = 0.0;
    else {
      const double w1 = 2 * h[i] + h[i - 1];
      const double w2 = h[i] + 2 * h[i - 1];
      r.slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  for (int i = 0; i <= 2000; ++i) {
    const double ss = band.eta1 + (band.eta2 - band.eta1) * i / 2000.0;
    if (!(r(ss) > 0.0))
      throw std::invalid_argument("reflection: interpolated table not positive on the band");
  }
  return r;
}

double ReflectionCoefficient::operator()(double s) const {
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::Polynomial: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
      return acc;
    }
    case Kind::Tabulated: {
      const auto hi = std::upper_bound(xs_.begin(), xs_.end(), s);
      size_t i = hi == xs_.begin() ? 0 : static_cast<size_t>(hi - xs_.begin()) - 1;
      if (i >= xs_.size() - 1) i = xs_.size() - 2;
      const double h = xs_[i + 1] - xs_[i];
      const double u = (s - xs_[i]) / h;
      const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
      const double h10 = u * (1 - u) * (1 - u);
      const double h01 = u * u * (3 - 2 * u);
      const double h11 = u * u * (u - 1);
      return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
    }
  }
  return value_;
}

Complex log_cut_negative_imag(Complex lambda) {
  double th = std::arg(lambda);
  if (th <= -M_PI_2) th += 2.0 * M_PI;
  return {std::log(std::abs(lambda)), th};
}

Complex phase_phi(Complex lambda, int n, double t) {
  if (lambda == Complex{}) throw std::domain_error("phase_phi: lambda = 0");
  const Complex i(0.0, 1.0);
  return -i * t * (lambda + 1.0 / lambda - 2.0) + static_cast<double>(n) * log_cut_negative_imag(lambda);
}

SolitonEnsemble sample_spectrum(const SpectralBand& band, const ReflectionCoefficient& r, int N) {
  if (N < 1) throw std::invalid_argument("sample_spectrum: N must be >= 1");
  SolitonEnsemble ens;
  ens.lambdas.resize(N);
  ens.norms.resize(N);
  for (int j = 1; j <= N; ++j) {
    const double lam = band.eta1 + (j - 1.0) / N * (band.eta2 - band.eta1);
    ens.lambdas[j - 1] = lam;
    ens.norms[j - 1] = r(lam) / (2.0 * M_PI * N);
  }
  return ens;
}

namespace {

ReflectionCoefficient parse_reflection(const nlohmann::json& j, const SpectralBand& band) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& params = j.at("params");
  if (kind == "constant") return ReflectionCoefficient::constant(params.at("value").get<double>());
  if (kind == "polynomial")
    return ReflectionCoefficient::polynomial(params.at("coeffs").get<std::vector<double>>(), band);
  if (kind == "tabulated")
    return ReflectionCoefficient::tabulated(params.at("s").get<std::vector<double>>(),
                                            params.at("r").get<std::vector<double>>(), band);
  throw std::invalid_argument("problem: unknown reflection kind '" + kind + "'");
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("problem: JSON parse error: ") + e.what());
  }
  try {
    SpectralBand band(j.at("eta1").get<double>(), j.at("eta2").get<double>());
    ReflectionCoefficient r =
        j.contains("reflection") ? parse_reflection(j.at("reflection"), band)
                                 : ReflectionCoefficient::constant(1.0);
    return Problem{band, std::move(r)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("problem: missing or malformed field: ") + e.what());
  }
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("problem: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace algas
