#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scnoise/materials.hpp"
#include "scnoise/quadrature.hpp"
#include "scnoise/rates.hpp"
#include "scnoise/stratified.hpp"

namespace scnoise {

/// Malformed or inconsistent run configuration. Raised before any computation.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { distance_z, thickness_d, temperature_T, reduced_T_over_Tc };
enum class Spacing { linear, log };

struct SweepSpec {
  SweepAxis axis = SweepAxis::distance_z;
  double min = 1e-6;
  double max = 1e-4;
  int points = 2;
  Spacing spacing = Spacing::linear;

  void validate() const;
  std::vector<double> grid() const;
};

struct LayerRef {
  std::string material;
  double thickness = kSemiInfinite;
};

struct RunConfig {
  std::string name;
  std::vector<MaterialModel> materials; // presets first, then config definitions
  std::vector<LayerRef> stack;
  double z = 10e-6;
  double temperature = 4.2;
  TransitionSpec transition;
  QuadratureSettings quadrature;
  RatePath path = RatePath::automatic;
  SpinOrientation orientation = SpinOrientation::random;
  std::optional<SweepSpec> sweep;
  std::string output;
  int threads = 0; // 0: one per hardware thread
  nlohmann::json source; // the parsed input, echoed into CSV metadata

  const MaterialModel& material(const std::string& label) const;
  LayerStack build_stack() const;
  LayerStack build_stack(double temperature, std::optional<double> film_thickness) const;
  /// Tc of the first superconducting layer, if any.
  std::optional<double> film_critical_temperature() const;
};

/// Validates and resolves a run configuration document. Unknown keys,
/// unresolved material references and invalid values raise ConfigError.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

/// Material definition: {"label", "variant", parameters} or a preset override
/// {"label", "preset", parameters to replace}.
MaterialModel material_from_json(const nlohmann::json& j);
nlohmann::json material_to_json(const MaterialModel& m);

std::string to_string(SweepAxis a);
SweepAxis parse_axis(const std::string& s);
/// Unit-annotated CSV column name of the axis, e.g. "z_m".
std::string axis_column(SweepAxis a);

} // namespace scnoise
