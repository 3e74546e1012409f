#include "scnoise/rates.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace scnoise {

namespace {

constexpr double kPresetWeight = 1.0 / 16.0;

void check_geometry(const LayerStack& stack, double z) {
  stack.validate();
  if (!(z > 0.0) || !std::isfinite(z))
    throw DomainError("atom height z must be positive and finite");
}

RateResult finish(double gamma_field, const QuadratureDiagnostics& diag,
                  const LayerStack& stack, double z, const TransitionSpec& transition,
                  RatePath path) {
  RateResult r;
  r.gamma_field = gamma_field;
  r.n_th = thermal_photon_number(transition.frequency, stack.temperature);
  r.gamma_total = gamma_field * (r.n_th + 1.0);
  r.tau = 1.0 / r.gamma_total;
  r.diagnostics = diag;
  r.path = path;
  const double wavelength = kConstants.c / transition.frequency;
  if (z > wavelength / 100.0) {
    std::ostringstream os;
    os << "z = " << z << " m exceeds 1% of the transition wavelength (" << wavelength
       << " m); the quasi-static rate formulas lose validity";
    r.warnings.push_back(os.str());
  }
  return r;
}

} // namespace

double path_calibration_constant() { return 3.0 * kPi; }

RateResult gamma_isotropic(const LayerStack& stack, double z,
                           const TransitionSpec& transition,
                           const QuadratureSettings& settings) {
  check_geometry(stack, z);
  transition.validate();
  const StackResponse response(stack, transition.angular_frequency());
  for (int l = 0; l < 3; ++l)
    if (!response.eps(l).isotropic())
      throw DomainError("gamma_isotropic requires isotropic layers");

  auto integrand = [&](double K) {
    const double measure = K * K / (4.0 * kPi * kPi);
    return measure * std::exp(-2.0 * K * z) / 2.0 * response.r_te(K).imag();
  };
  const auto q = integrate_semi_infinite(integrand, z, settings);
  return finish(rate_prefactor() * q.value, q.diagnostics, stack, z, transition,
                RatePath::isotropic);
}

complex near_field_integrand(const StackResponse& response, double eta, double z) {
  const auto b = response.scattering(eta);
  const double k1 = response.vacuum_wavenumber();
  return std::exp(-2.0 * eta * z) / (8.0 * kPi) *
         (3.0 * eta * eta * b.bm + b.bn * k1 * k1);
}

RateResult gamma_anisotropic(const LayerStack& stack, double z,
                             const TransitionSpec& transition,
                             const QuadratureSettings& settings) {
  check_geometry(stack, z);
  transition.validate();
  const StackResponse response(stack, transition.angular_frequency());
  auto integrand = [&](double eta) { return near_field_integrand(response, eta, z).imag(); };
  const auto q = integrate_semi_infinite(integrand, z, settings);
  return finish(rate_prefactor() * q.value, q.diagnostics, stack, z, transition,
                RatePath::anisotropic);
}

CurlCurlComponents double_curl_components(const StackResponse& response, double eta,
                                          double z) {
  const double k = response.vacuum_wavenumber();
  const complex h = decaying_sqrt(complex{k * k - eta * eta, 0.0});
  if (h == complex{0.0, 0.0})
    throw DomainError("double-curl integrand: grazing point h = 0");
  const auto b = response.scattering(eta);
  const complex pre = complex{0.0, 1.0} * std::exp(complex{0.0, 2.0} * h * z) / (4.0 * kPi);
  // The perpendicular part carries B_M eta^3 / h; the remaining
  // -(eta / 2h)(h^2 B_M + k^2 B_N) is the parallel part.
  const complex zz = pre * b.bm * eta * eta * eta / h;
  const complex rr = -pre * eta / (2.0 * h) * (h * h * b.bm + k * k * b.bn);
  return {rr, zz};
}

complex double_curl_integrand(const LayerStack& stack, double eta, double z,
                              double omega) {
  if (!(z > 0.0)) throw DomainError("atom height z must be positive");
  return double_curl_components(StackResponse(stack, omega), eta, z).sum();
}

RateResult gamma_general(const LayerStack& stack, double z,
                         const TransitionSpec& transition, SpinOrientation orientation,
                         const QuadratureSettings& settings) {
  check_geometry(stack, z);
  transition.validate();

  double w_parallel = kPresetWeight;
  double w_perpendicular = kPresetWeight;
  if (transition.coupling_mode == CouplingMode::explicit_matrix_elements) {
    const auto& s = *transition.matrix_elements;
    w_parallel = std::norm(s[0]) + std::norm(s[1]);
    w_perpendicular = std::norm(s[2]);
  }
  if (orientation == SpinOrientation::parallel) w_perpendicular = 0.0;
  if (orientation == SpinOrientation::perpendicular) w_parallel = 0.0;

  // 2 mu0 (muB gS)^2 / hbar
  const double prefactor = 16.0 * rate_prefactor();
  if (w_parallel == 0.0 && w_perpendicular == 0.0)
    return finish(0.0, {}, stack, z, transition, RatePath::general);

  const StackResponse response(stack, transition.angular_frequency());
  const double k = response.vacuum_wavenumber();
  auto weighted = [&](double eta) {
    const auto c = double_curl_components(response, eta, z);
    return w_parallel * c.rr.imag() + w_perpendicular * c.zz.imag();
  };
  auto evanescent = [&](double eta) { return eta <= k ? 0.0 : weighted(eta); };
  const double light_line[] = {k};
  auto q = integrate_semi_infinite(evanescent, z, settings, light_line);

  // eta = k sin(theta) removes the 1/h light-line singularity
  std::size_t prop_evaluations = 0;
  auto propagating = [&](double theta) {
    ++prop_evaluations;
    return weighted(k * std::sin(theta)) * k * std::cos(theta);
  };
  double prop_error = 0.0;
  const double prop = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
      propagating, 0.0, 0.5 * kPi * (1.0 - 1e-12), 15, settings.rel_tol, &prop_error);
  q.diagnostics.evaluations += prop_evaluations;
  q.diagnostics.est_error += prop_error;
  return finish(prefactor * (q.value + prop), q.diagnostics, stack, z, transition,
                RatePath::general);
}

RatePath resolve_path(const LayerStack& stack, RatePath path) {
  if (path != RatePath::automatic) return path;
  return stack.has_uniaxial_layer() ? RatePath::anisotropic : RatePath::isotropic;
}

RateResult compute_rate(const LayerStack& stack, double z,
                        const TransitionSpec& transition, RatePath path,
                        SpinOrientation orientation, const QuadratureSettings& settings) {
  switch (resolve_path(stack, path)) {
    case RatePath::isotropic: return gamma_isotropic(stack, z, transition, settings);
    case RatePath::anisotropic: return gamma_anisotropic(stack, z, transition, settings);
    default: return gamma_general(stack, z, transition, orientation, settings);
  }
}

std::string to_string(SpinOrientation o) {
  switch (o) {
    case SpinOrientation::parallel: return "parallel";
    case SpinOrientation::perpendicular: return "perpendicular";
    default: return "random";
  }
}

std::string to_string(RatePath p) {
  switch (p) {
    case RatePath::isotropic: return "isotropic";
    case RatePath::anisotropic: return "anisotropic";
    case RatePath::general: return "general";
    default: return "auto";
  }
}

SpinOrientation parse_orientation(const std::string& s) {
  if (s == "random") return SpinOrientation::random;
  if (s == "parallel") return SpinOrientation::parallel;
  if (s == "perpendicular") return SpinOrientation::perpendicular;
  throw DomainError("unknown spin orientation '" + s + "'");
}

RatePath parse_path(const std::string& s) {
  if (s == "auto") return RatePath::automatic;
  if (s == "isotropic") return RatePath::isotropic;
  if (s == "anisotropic") return RatePath::anisotropic;
  if (s == "general") return RatePath::general;
  throw DomainError("unknown rate path '" + s + "'");
}

} // namespace scnoise
