#include "scnoise/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace scnoise {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct RowPoint {
  LayerStack stack;
  double z;
  double temperature;
};

} // namespace

std::string version_string() { return std::string("scnoise ") + SCNOISE_VERSION; }

std::size_t SweepTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SweepTable::series(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& row : values) out.push_back(row[c]);
  return out;
}

double screening_factor(const LayerStack& stack_with_d, double z,
                        const TransitionSpec& transition, RatePath path,
                        SpinOrientation orientation, const QuadratureSettings& settings) {
  stack_with_d.validate();
  if (stack_with_d.layers.size() != 3)
    throw DomainError("screening_factor needs a three-layer stack");
  const RatePath resolved = resolve_path(stack_with_d, path);
  LayerStack bare = stack_with_d;
  bare.layers[1].thickness = 0.0;
  const double tau_d = compute_rate(stack_with_d, z, transition, resolved, orientation, settings).tau;
  const double tau_0 = compute_rate(bare, z, transition, resolved, orientation, settings).tau;
  return (tau_d - tau_0) / tau_0;
}

SweepTable run_sweep(const SweepSpec& spec, const RunConfig& config) {
  spec.validate();
  const std::vector<double> grid = spec.grid();
  const LayerStack base = config.build_stack();
  base.validate();
  const RatePath path = resolve_path(base, config.path);
  const auto film_tc = config.film_critical_temperature();
  if (spec.axis == SweepAxis::reduced_T_over_Tc && !film_tc)
    throw ConfigError("reduced_T_over_Tc sweep needs a superconducting layer");
  if (spec.axis == SweepAxis::thickness_d && base.layers.size() != 3)
    throw ConfigError("thickness_d sweep needs a three-layer stack");

  auto point = [&](double x) -> RowPoint {
    switch (spec.axis) {
      case SweepAxis::distance_z: return {base, x, config.temperature};
      case SweepAxis::thickness_d:
        return {config.build_stack(config.temperature, x), config.z, config.temperature};
      case SweepAxis::temperature_T: return {config.build_stack(x, std::nullopt), config.z, x};
      default: {
        const double T = x * *film_tc;
        return {config.build_stack(T, std::nullopt), config.z, T};
      }
    }
  };

  SweepTable table;
  table.columns.push_back(axis_column(spec.axis));
  if (spec.axis == SweepAxis::reduced_T_over_Tc) table.columns.push_back("T_K");
  for (auto c : {"gamma_field_per_s", "gamma_total_per_s", "n_th", "tau_s"})
    table.columns.push_back(c);
  const bool screening = spec.axis == SweepAxis::thickness_d;
  if (screening) table.columns.push_back("screening_factor");

  auto rate = [&](const RowPoint& p) {
    return compute_rate(p.stack, p.z, config.transition, path, config.orientation,
                        config.quadrature);
  };

  double tau0 = kNaN;
  std::string tau0_error;
  if (screening) {
    try {
      tau0 = rate({config.build_stack(config.temperature, 0.0), config.z,
                   config.temperature})
                 .tau;
    } catch (const std::exception& e) {
      tau0_error = e.what();
    }
  }

  const std::size_t n = grid.size();
  table.values.assign(n, std::vector<double>(table.columns.size(), kNaN));
  table.status.assign(n, "");

  auto evaluate_row = [&](std::size_t i) {
    auto& row = table.values[i];
    std::size_t c = 0;
    row[c++] = grid[i];
    try {
      const RowPoint p = point(grid[i]);
      if (spec.axis == SweepAxis::reduced_T_over_Tc) row[c++] = p.temperature;
      const RateResult r = rate(p);
      row[c++] = r.gamma_field;
      row[c++] = r.gamma_total;
      row[c++] = r.n_th;
      row[c++] = r.tau;
      if (screening) {
        if (!tau0_error.empty()) throw SweepError("bare-substrate lifetime failed: " + tau0_error);
        row[c++] = (r.tau - tau0) / tau0;
      }
      table.status[i] = film_tc && p.temperature >= *film_tc ? "ok:normal_state" : "ok";
    } catch (const std::exception& e) {
      table.status[i] = std::string("error: ") + e.what();
    }
  };

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) evaluate_row(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  if (std::none_of(table.status.begin(), table.status.end(),
                   [](const std::string& s) { return s.rfind("ok", 0) == 0; }))
    throw SweepError("every sweep row failed; first error: " + table.status.front());

  nlohmann::json used = nlohmann::json::array();
  for (const auto& l : base.layers) used.push_back(material_to_json(l.material));
  table.metadata = {
      {"name", config.name},
      {"axis", to_string(spec.axis)},
      {"spacing", spec.spacing == Spacing::log ? "log" : "linear"},
      {"points", std::to_string(spec.points)},
      {"path", to_string(path)},
      {"orientation", to_string(config.orientation)},
      {"z_m", format_double(config.z)},
      {"temperature_K", format_double(config.temperature)},
      {"transition_frequency_Hz", format_double(config.transition.frequency)},
      {"quadrature", nlohmann::json{{"rel_tol", config.quadrature.rel_tol},
                                    {"abs_floor", config.quadrature.abs_floor},
                                    {"max_refinements", config.quadrature.max_refinements},
                                    {"tail_threshold", config.quadrature.tail_threshold}}
                         .dump()},
      {"materials", used.dump()},
      {"config", config.source.dump()},
  };
  if (screening) table.metadata.emplace_back("tau_bare_s", format_double(tau0));
  return table;
}

} // namespace scnoise
