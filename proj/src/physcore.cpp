#include "scnoise/physcore.hpp"

#include <cmath>

namespace scnoise {

void TransitionSpec::validate() const {
  if (!(frequency > 0.0) || !std::isfinite(frequency))
    throw DomainError("transition frequency must be positive, got " +
                      std::to_string(frequency));
  if (coupling_mode == CouplingMode::paper_preset && matrix_elements)
    throw DomainError("paper_preset coupling takes no explicit matrix elements");
  if (coupling_mode == CouplingMode::explicit_matrix_elements && !matrix_elements)
    throw DomainError("explicit_matrix_elements coupling requires matrix elements");
}

TransitionSpec rb87_preset() { return TransitionSpec{}; }

double rate_prefactor(const Constants& k) {
  const double moment = k.muB * k.gS;
  return k.mu0 * moment * moment / (8.0 * k.hbar);
}

double thermal_photon_number(double frequency, double temperature,
                             const Constants& k) {
  if (!(frequency > 0.0))
    throw DomainError("thermal_photon_number: frequency must be positive");
  if (!(temperature >= 0.0))
    throw DomainError("thermal_photon_number: temperature must be non-negative");
  if (temperature == 0.0) return 0.0;
  const double x = k.h * frequency / (k.kB * temperature);
  return 1.0 / std::expm1(x);
}

} // namespace scnoise
