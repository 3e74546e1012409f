#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scnoise/physcore.hpp"

namespace scnoise {

struct DrudeMetalParams {
  double sigma = 5.8e7; // S/m
  void validate() const;
};

/// Two-fluid superconductor parameters. The normal-fluid fraction follows
/// n_n/n0 = (T/Tc)^alpha, which also fixes lambda(T).
struct TwoFluidParams {
  double lambda0 = 35e-9;      // m
  double Tc = 8.3;             // K
  double sigma_normal = 1.0e7; // S/m, just above Tc
  double alpha = 4.0;
  void validate() const;
};

/// Layered (d-wave) superconductor: `transverse` governs eps_t (in-plane,
/// lambda_parallel), `longitudinal` governs eps_z (lambda_perp).
struct UniaxialParams {
  TwoFluidParams transverse;
  TwoFluidParams longitudinal;
  void validate() const;
};

struct PermittivityTensor {
  complex eps_t{1.0, 0.0};
  complex eps_z{1.0, 0.0};
  bool isotropic() const { return eps_t == eps_z; }
};

struct Vacuum {};
struct DrudeMetal { DrudeMetalParams params; };
struct IsotropicSC { TwoFluidParams params; };
struct UniaxialSC { UniaxialParams params; };

/// Informational metadata carried by presets; never used in computations.
struct ValidityNote {
  std::optional<double> first_critical_field; // T, at 4.2 K
  std::optional<double> gap_frequency;        // Hz
};

struct MaterialModel {
  std::variant<Vacuum, DrudeMetal, IsotropicSC, UniaxialSC> variant;
  std::string label;
  ValidityNote validity;

  bool is_vacuum() const { return std::holds_alternative<Vacuum>(variant); }
  bool is_uniaxial() const { return std::holds_alternative<UniaxialSC>(variant); }
  bool is_superconductor() const;
  /// Transition temperature of a superconducting material, nullopt otherwise.
  std::optional<double> critical_temperature() const;
  std::string variant_name() const;
  void validate() const;
};

MaterialModel make_vacuum();
MaterialModel make_drude(double sigma, std::string label = "drude");
MaterialModel make_isotropic_sc(TwoFluidParams p, std::string label = "isotropic_sc");
MaterialModel make_uniaxial_sc(UniaxialParams p, std::string label = "uniaxial_sc");

/// lambda0 [1 - (T/Tc)^alpha]^{-1/2}; throws DomainError for T >= Tc.
double lambda_of_T(double lambda0, double T, double Tc, double alpha);

/// sigma_normal (T/Tc)^alpha below Tc, sigma_normal at and above Tc.
double sigma_n_of_T(double sigma_normal, double T, double Tc, double alpha);

/// sqrt(2 / (omega mu0 sigma)).
double skin_depth(double omega, double sigma);

/// Two-fluid optical conductivity 2/(omega mu0 delta^2) + i/(omega mu0 lambda^2).
/// Above Tc the superfluid term is absent.
complex optical_conductivity(const TwoFluidParams& p, double omega, double T);

/// Relative permittivity tensor of `material` at angular frequency omega and
/// temperature T. Superconductors at T >= Tc fall back to their normal-state
/// Drude form.
PermittivityTensor permittivity(const MaterialModel& material, double omega,
                                double T);

namespace presets {
inline constexpr double kCopperSigma = 5.8e7;
inline constexpr double kNiobiumSigmaNormal = 1.0e7;
inline constexpr double kBsccoSigmaParallel = 5.0e5;
inline constexpr double kBsccoAnisotropy = 1000.0; // sigma_parallel / sigma_perp

MaterialModel vacuum();
MaterialModel copper();
MaterialModel niobium();
MaterialModel bscco();
} // namespace presets

/// vacuum, copper, niobium, bscco.
std::vector<MaterialModel> material_presets();

/// Looks up a preset by label; throws std::out_of_range when unknown.
MaterialModel preset(const std::string& label);

} // namespace scnoise
