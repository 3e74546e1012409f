#include "scnoise/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace scnoise {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(v));
}

double vacuum_wavenumber(double omega) { return omega / kConstants.c; }

// i sigma / (eps0 omega), i.e. 2i / (k^2 delta^2) written without delta so
// that sigma = 0 (no normal fluid) is well defined.
complex drude_term(double sigma, double omega) {
  if (sigma == 0.0) return {0.0, 0.0};
  const double k = vacuum_wavenumber(omega);
  const double delta = skin_depth(omega, sigma);
  return {0.0, 2.0 / (k * k * delta * delta)};
}

complex two_fluid_permittivity(const TwoFluidParams& p, double omega, double T) {
  const double sigma_n = sigma_n_of_T(p.sigma_normal, T, p.Tc, p.alpha);
  if (T >= p.Tc) return drude_term(sigma_n, omega);
  const double k = vacuum_wavenumber(omega);
  const double lambda = lambda_of_T(p.lambda0, T, p.Tc, p.alpha);
  return complex{1.0 - 1.0 / (k * k * lambda * lambda), 0.0} +
         drude_term(sigma_n, omega);
}

} // namespace

void DrudeMetalParams::validate() const { require_positive(sigma, "sigma"); }

void TwoFluidParams::validate() const {
  require_positive(lambda0, "lambda0");
  require_positive(Tc, "Tc");
  require_positive(sigma_normal, "sigma_normal");
  require_positive(alpha, "alpha");
}

void UniaxialParams::validate() const {
  transverse.validate();
  longitudinal.validate();
  if (transverse.Tc != longitudinal.Tc)
    throw DomainError("uniaxial superconductor: transverse and longitudinal Tc differ");
}

bool MaterialModel::is_superconductor() const {
  return std::holds_alternative<IsotropicSC>(variant) ||
         std::holds_alternative<UniaxialSC>(variant);
}

std::optional<double> MaterialModel::critical_temperature() const {
  if (auto* iso = std::get_if<IsotropicSC>(&variant)) return iso->params.Tc;
  if (auto* uni = std::get_if<UniaxialSC>(&variant)) return uni->params.transverse.Tc;
  return std::nullopt;
}

std::string MaterialModel::variant_name() const {
  switch (variant.index()) {
    case 0: return "vacuum";
    case 1: return "drude";
    case 2: return "isotropic_sc";
    default: return "uniaxial_sc";
  }
}

void MaterialModel::validate() const {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (!std::is_same_v<T, Vacuum>) m.params.validate();
      },
      variant);
}

MaterialModel make_vacuum() { return {Vacuum{}, "vacuum", {}}; }

MaterialModel make_drude(double sigma, std::string label) {
  MaterialModel m{DrudeMetal{{sigma}}, std::move(label), {}};
  m.validate();
  return m;
}

MaterialModel make_isotropic_sc(TwoFluidParams p, std::string label) {
  MaterialModel m{IsotropicSC{p}, std::move(label), {}};
  m.validate();
  return m;
}

MaterialModel make_uniaxial_sc(UniaxialParams p, std::string label) {
  MaterialModel m{UniaxialSC{p}, std::move(label), {}};
  m.validate();
  return m;
}

double lambda_of_T(double lambda0, double T, double Tc, double alpha) {
  require_positive(lambda0, "lambda0");
  require_positive(Tc, "Tc");
  require_positive(alpha, "alpha");
  if (!(T >= 0.0)) throw DomainError("lambda_of_T: temperature must be non-negative");
  if (T >= Tc)
    throw DomainError("lambda_of_T: penetration depth undefined for T >= Tc");
  return lambda0 / std::sqrt(1.0 - std::pow(T / Tc, alpha));
}

double sigma_n_of_T(double sigma_normal, double T, double Tc, double alpha) {
  require_positive(sigma_normal, "sigma_normal");
  require_positive(Tc, "Tc");
  require_positive(alpha, "alpha");
  if (!(T >= 0.0)) throw DomainError("sigma_n_of_T: temperature must be non-negative");
  if (T >= Tc) return sigma_normal;
  return sigma_normal * std::pow(T / Tc, alpha);
}

double skin_depth(double omega, double sigma) {
  require_positive(omega, "omega");
  require_positive(sigma, "sigma");
  return std::sqrt(2.0 / (omega * kConstants.mu0 * sigma));
}

complex optical_conductivity(const TwoFluidParams& p, double omega, double T) {
  p.validate();
  require_positive(omega, "omega");
  const double mu0 = kConstants.mu0;
  const double sigma_n = sigma_n_of_T(p.sigma_normal, T, p.Tc, p.alpha);
  double re = 0.0;
  if (sigma_n > 0.0) {
    const double delta = skin_depth(omega, sigma_n);
    re = 2.0 / (omega * mu0 * delta * delta);
  }
  double im = 0.0;
  if (T < p.Tc) {
    const double lambda = lambda_of_T(p.lambda0, T, p.Tc, p.alpha);
    im = 1.0 / (omega * mu0 * lambda * lambda);
  }
  return {re, im};
}

PermittivityTensor permittivity(const MaterialModel& material, double omega,
                                double T) {
  require_positive(omega, "omega");
  if (!(T >= 0.0)) throw DomainError("permittivity: temperature must be non-negative");
  material.validate();
  return std::visit(
      [&](const auto& m) -> PermittivityTensor {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Vacuum>) {
          return {};
        } else if constexpr (std::is_same_v<M, DrudeMetal>) {
          const complex e = drude_term(m.params.sigma, omega);
          return {e, e};
        } else if constexpr (std::is_same_v<M, IsotropicSC>) {
          const complex e = two_fluid_permittivity(m.params, omega, T);
          return {e, e};
        } else {
          return {two_fluid_permittivity(m.params.transverse, omega, T),
                  two_fluid_permittivity(m.params.longitudinal, omega, T)};
        }
      },
      material.variant);
}

namespace presets {

MaterialModel vacuum() { return make_vacuum(); }

MaterialModel copper() { return make_drude(kCopperSigma, "copper"); }

MaterialModel niobium() {
  auto m = make_isotropic_sc({35e-9, 8.3, kNiobiumSigmaNormal, 4.0}, "niobium");
  m.validity = {0.140, 700e9};
  return m;
}

MaterialModel bscco() {
  UniaxialParams p;
  p.transverse = {300e-9, 90.0, kBsccoSigmaParallel, 1.0};
  p.longitudinal = {100e-6, 90.0, kBsccoSigmaParallel / kBsccoAnisotropy, 1.0};
  auto m = make_uniaxial_sc(p, "bscco");
  m.validity = {0.013, 7.5e12};
  return m;
}

} // namespace presets

std::vector<MaterialModel> material_presets() {
  return {presets::vacuum(), presets::copper(), presets::niobium(), presets::bscco()};
}

MaterialModel preset(const std::string& label) {
  for (auto& m : material_presets())
    if (m.label == label) return m;
  throw std::out_of_range("unknown material preset '" + label + "'");
}

} // namespace scnoise
