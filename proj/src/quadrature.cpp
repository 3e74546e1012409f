#include "scnoise/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "scnoise/physcore.hpp"

namespace scnoise {

namespace {

constexpr double kLowerU = 2e-9; // eta = 1e-9 / z
constexpr double kInitialU = 40.0;
constexpr double kMaxU = 1400.0; // e^{-u/2} underflows well before this

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

} // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be positive");
  if (!(abs_floor >= 0.0)) throw DomainError("quadrature abs_floor must be non-negative");
  if (max_refinements < 1) throw DomainError("quadrature max_refinements must be >= 1");
  if (!(tail_threshold > 0.0))
    throw DomainError("quadrature tail_threshold must be positive");
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double z, const QuadratureSettings& settings,
                                         std::span<const double> breakpoints) {
  settings.validate();
  if (!(z > 0.0)) throw DomainError("integrate_semi_infinite: z must be positive");

  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  std::size_t evaluations = 0;
  const double jacobian = 1.0 / (2.0 * z);
  auto g = [&](double u) {
    ++evaluations;
    const double v = f(u * jacobian) * jacobian;
    if (!std::isfinite(v))
      throw DomainError("integrand is not finite at eta = " + std::to_string(u * jacobian));
    return v;
  };
  auto panel = [&](double a, double b) {
    double err = 0.0;
    const double v = GK::integrate(g, a, b, 0, 0.0, &err);
    return Panel{a, b, v, err};
  };

  std::priority_queue<Panel> panels;
  double total = 0.0;
  double total_err = 0.0;
  auto push = [&](const Panel& p) {
    total += p.value;
    total_err += p.error;
    panels.push(p);
  };

  double upper = kInitialU;
  std::vector<double> edges{kLowerU, 0.5, 2.0, 6.0, 15.0, upper};
  for (double eta : breakpoints) {
    const double u = 2.0 * eta * z;
    if (u > kLowerU && u < upper) edges.push_back(u);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) push(panel(edges[i], edges[i + 1]));

  auto diagnostics = [&] {
    QuadratureDiagnostics d;
    d.evaluations = evaluations;
    d.truncation_eta = upper * jacobian;
    d.est_error = total != 0.0 ? total_err / std::abs(total) : total_err;
    return d;
  };
  auto converged = [&] {
    return total_err <= std::max(settings.rel_tol * std::abs(total), settings.abs_floor);
  };
  // Fit A u^2 e^{-u} through g(U); the tail beyond U is A e^{-U}(U^2 + 2U + 2).
  auto tail_small = [&] {
    const double gu = std::abs(g(upper));
    const double tail = gu * (upper * upper + 2.0 * upper + 2.0) / (upper * upper);
    return tail <= settings.tail_threshold * std::abs(total) ||
           tail <= settings.abs_floor || upper >= kMaxU;
  };

  int refinements = 0;
  while (true) {
    if (converged()) {
      if (tail_small()) break;
      push(panel(upper, 2.0 * upper));
      upper *= 2.0;
    } else {
      Panel worst = panels.top();
      panels.pop();
      total -= worst.value;
      total_err -= worst.error;
      const double mid = 0.5 * (worst.a + worst.b);
      push(panel(worst.a, mid));
      push(panel(mid, worst.b));
    }
    if (++refinements > settings.max_refinements)
      throw QuadratureError("integrate_semi_infinite: no convergence after " +
                                std::to_string(settings.max_refinements) + " refinements",
                            total, diagnostics());
  }
  // Re-sum to shed the drift of the running add/subtract bookkeeping.
  total = 0.0;
  total_err = 0.0;
  std::vector<Panel> all;
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    total += p.value;
    total_err += p.error;
  }
  return {total, diagnostics()};
}

} // namespace scnoise
