#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace scnoise {

using complex = std::complex<double>;

/// Raised when an argument lies outside the domain of a physical law.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// SI values, CODATA 2018.
struct Constants {
  double mu0 = 1.25663706212e-6;     // H/m
  double eps0 = 8.8541878128e-12;    // F/m
  double h = 6.62607015e-34;         // J s
  double hbar = 1.054571817646156e-34; // J s, h / 2pi
  double kB = 1.380649e-23;          // J/K
  double c = 299792458.0;            // m/s
  double muB = 9.2740100783e-24;     // J/T
  double gS = 2.0;                   // electron g factor, fixed at 2
};

inline constexpr Constants kConstants{};

inline constexpr double kPi = 3.14159265358979323846;

enum class CouplingMode { paper_preset, explicit_matrix_elements };

/// A magnetic-dipole transition between hyperfine sublevels.
///
/// In `paper_preset` mode the rate prefactors already contain the spin matrix
/// elements of the 87Rb |2,2> -> |2,1> transition and `matrix_elements` stays
/// empty. In `explicit_matrix_elements` mode the three Cartesian components
/// <f|S|i> (units of hbar) drive the general curl-curl contraction.
struct TransitionSpec {
  double frequency = 560e3; // Hz
  std::string label = "87Rb |2,2> -> |2,1>";
  CouplingMode coupling_mode = CouplingMode::paper_preset;
  std::optional<std::array<complex, 3>> matrix_elements;

  double angular_frequency() const { return 2.0 * kPi * frequency; }
  void validate() const;
};

TransitionSpec rb87_preset();

/// mu0 (muB gS)^2 / (8 hbar) in m^3/s; multiplies wavevector integrals of
/// dimension 1/m^3 to give a rate.
double rate_prefactor(const Constants& k = kConstants);

/// Mean thermal photon number 1 / (exp(h f / kB T) - 1); exactly 0 at T = 0.
double thermal_photon_number(double frequency, double temperature,
                             const Constants& k = kConstants);

} // namespace scnoise
