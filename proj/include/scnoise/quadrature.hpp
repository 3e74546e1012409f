#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace scnoise {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_floor = 0.0;       // absolute error accepted regardless of rel_tol
  int max_refinements = 60;     // interval bisections plus tail extensions
  double tail_threshold = 1e-12; // truncated-tail / total ratio

  void validate() const;
};

struct QuadratureDiagnostics {
  std::size_t evaluations = 0;
  double truncation_eta = 0.0; // 1/m, upper end of the integrated range
  double est_error = 0.0;      // relative
};

struct QuadratureResult {
  double value = 0.0;
  QuadratureDiagnostics diagnostics;
};

class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double partial, QuadratureDiagnostics d)
      : std::runtime_error(what), partial_value(partial), diagnostics(d) {}
  double partial_value;
  QuadratureDiagnostics diagnostics;
};

/// Integrates f(eta) over (0, inf) for integrands that decay like
/// e^{-2 eta z} times a bounded factor.
///
/// Works in u = 2 eta z. The range [2e-9, U] is refined adaptively with a
/// 21-point Gauss-Kronrod panel (largest error first), and U doubles until the
/// envelope A u^2 e^{-u} fitted at U bounds the remaining tail below
/// tail_threshold times the total. `breakpoints` (in eta) are kept as panel
/// edges; use them for known kinks such as the light line eta = omega/c.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double z, const QuadratureSettings& settings,
                                         std::span<const double> breakpoints = {});

} // namespace scnoise
