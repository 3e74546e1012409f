#pragma once

#include <string>
#include <vector>

#include "scnoise/physcore.hpp"
#include "scnoise/quadrature.hpp"
#include "scnoise/stratified.hpp"

namespace scnoise {

enum class SpinOrientation { random, parallel, perpendicular };

/// Which rate formula evaluates a stack.
///  - isotropic: TE film reflection with the K^2 dK / (2pi)^2 measure.
///  - anisotropic: near-field B_M / B_N form with the d eta / (8 pi) measure.
///  - general: full curl-curl contraction with explicit (or preset) weights.
///  - automatic: anisotropic when any layer is uniaxial, isotropic otherwise.
enum class RatePath { automatic, isotropic, anisotropic, general };

struct RateResult {
  double gamma_field = 0.0; // 1/s, before the thermal factor
  double n_th = 0.0;
  double gamma_total = 0.0; // gamma_field (n_th + 1)
  double tau = 0.0;         // 1 / gamma_total
  QuadratureDiagnostics diagnostics;
  RatePath path = RatePath::automatic;
  std::vector<std::string> warnings;
};

/// Ratio gamma_anisotropic / gamma_isotropic for a stack of isotropic layers.
///
/// The two measures differ by 3/(8 pi) : 1/(8 pi^2) once B_M reduces to the TE
/// film coefficient, so the ratio is 3 pi. It is reported, never applied.
double path_calibration_constant();

RateResult gamma_isotropic(const LayerStack& stack, double z,
                           const TransitionSpec& transition,
                           const QuadratureSettings& settings = {});

RateResult gamma_anisotropic(const LayerStack& stack, double z,
                             const TransitionSpec& transition,
                             const QuadratureSettings& settings = {});

RateResult gamma_general(const LayerStack& stack, double z,
                         const TransitionSpec& transition, SpinOrientation orientation,
                         const QuadratureSettings& settings = {});

RateResult compute_rate(const LayerStack& stack, double z,
                        const TransitionSpec& transition, RatePath path,
                        SpinOrientation orientation = SpinOrientation::random,
                        const QuadratureSettings& settings = {});

RatePath resolve_path(const LayerStack& stack, RatePath path);

/// Integrand of the anisotropic path (without the rate prefactor):
/// e^{-2 eta z} / (8 pi) [3 eta^2 B_M + B_N k1^2].
complex near_field_integrand(const StackResponse& response, double eta, double z);

/// Parallel (r r) and perpendicular (z z) parts of the scattered curl-curl
/// integrand at the atom position; their sum is the full double-curl integrand.
struct CurlCurlComponents {
  complex rr;
  complex zz;
  complex sum() const { return rr + zz; }
};

CurlCurlComponents double_curl_components(const StackResponse& response, double eta,
                                          double z);

/// i e^{2ihz} / (4 pi) [B_M (eta^3/h - h eta/2) - B_N eta k^2 / (2h)] with
/// h = sqrt(k^2 - eta^2) of the vacuum layer. Throws DomainError at the
/// grazing point h = 0.
complex double_curl_integrand(const LayerStack& stack, double eta, double z,
                              double omega);

std::string to_string(SpinOrientation o);
std::string to_string(RatePath p);
SpinOrientation parse_orientation(const std::string& s);
RatePath parse_path(const std::string& s);

} // namespace scnoise
