#include "scnoise/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace scnoise {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  require_object(j, where);
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

double number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw ConfigError(where + ": '" + key + "' must be finite");
  return v;
}

double number_or(const json& j, const std::string& key, double fallback,
                 const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

std::string text(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  if (!j.at(key).is_string()) throw ConfigError(where + ": '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

TwoFluidParams two_fluid_from_json(const json& j, TwoFluidParams p,
                                   const std::string& where) {
  check_keys(j, {"lambda0", "Tc", "sigma_normal", "alpha"}, where);
  p.lambda0 = number_or(j, "lambda0", p.lambda0, where);
  p.Tc = number_or(j, "Tc", p.Tc, where);
  p.sigma_normal = number_or(j, "sigma_normal", p.sigma_normal, where);
  p.alpha = number_or(j, "alpha", p.alpha, where);
  return p;
}

json two_fluid_to_json(const TwoFluidParams& p) {
  return {{"lambda0", p.lambda0}, {"Tc", p.Tc}, {"sigma_normal", p.sigma_normal},
          {"alpha", p.alpha}};
}

// Applies the parameter keys of `j` on top of `m`.
void apply_parameters(MaterialModel& m, const json& j, const std::string& where) {
  std::visit(
      [&](auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Vacuum>) {
          check_keys(j, {"label", "variant", "preset", "description"}, where);
        } else if constexpr (std::is_same_v<V, DrudeMetal>) {
          check_keys(j, {"label", "variant", "preset", "description", "sigma"}, where);
          v.params.sigma = number_or(j, "sigma", v.params.sigma, where);
        } else if constexpr (std::is_same_v<V, IsotropicSC>) {
          json params = j;
          for (auto key : {"label", "variant", "preset", "description"}) params.erase(key);
          v.params = two_fluid_from_json(params, v.params, where);
        } else {
          check_keys(j, {"label", "variant", "preset", "description", "transverse",
                         "longitudinal", "Tc", "sigma_normal"},
                     where);
          if (j.contains("transverse"))
            v.params.transverse =
                two_fluid_from_json(j.at("transverse"), v.params.transverse, where + ".transverse");
          if (j.contains("longitudinal"))
            v.params.longitudinal = two_fluid_from_json(
                j.at("longitudinal"), v.params.longitudinal, where + ".longitudinal");
          // Shared shortcuts.
          if (j.contains("Tc"))
            v.params.transverse.Tc = v.params.longitudinal.Tc = number(j, "Tc", where);
          if (j.contains("sigma_normal")) {
            const double ratio = v.params.transverse.sigma_normal /
                                 v.params.longitudinal.sigma_normal;
            v.params.transverse.sigma_normal = number(j, "sigma_normal", where);
            v.params.longitudinal.sigma_normal = v.params.transverse.sigma_normal / ratio;
          }
        }
      },
      m.variant);
}

MaterialModel blank_material(const std::string& variant, const std::string& where) {
  if (variant == "vacuum") return make_vacuum();
  if (variant == "drude") return {DrudeMetal{}, "", {}};
  if (variant == "isotropic_sc") return {IsotropicSC{}, "", {}};
  if (variant == "uniaxial_sc") {
    UniaxialParams p;
    p.longitudinal = p.transverse;
    return {UniaxialSC{p}, "", {}};
  }
  throw ConfigError(where + ": unknown variant '" + variant +
                    "' (expected vacuum, drude, isotropic_sc or uniaxial_sc)");
}

} // namespace

MaterialModel material_from_json(const json& j) {
  const std::string where = "material";
  require_object(j, where);
  const std::string label = text(j, "label", where);
  const std::string here = "material '" + label + "'";
  MaterialModel m;
  if (j.contains("preset")) {
    if (j.contains("variant")) throw ConfigError(here + ": give either 'preset' or 'variant'");
    try {
      m = preset(text(j, "preset", here));
    } catch (const std::out_of_range& e) {
      throw ConfigError(here + ": " + e.what());
    }
  } else {
    m = blank_material(text(j, "variant", here), here);
    if (m.is_uniaxial() && !(j.contains("transverse") && j.contains("longitudinal")))
      throw ConfigError(here + ": uniaxial_sc needs 'transverse' and 'longitudinal'");
  }
  json body = j;
  for (const auto& [key, field] :
       {std::pair{"first_critical_field_T", &ValidityNote::first_critical_field},
        std::pair{"gap_frequency_Hz", &ValidityNote::gap_frequency}}) {
    if (!body.contains(key)) continue;
    m.validity.*field = number(body, key, here);
    body.erase(key);
  }
  apply_parameters(m, body, here);
  m.label = label;
  try {
    m.validate();
  } catch (const DomainError& e) {
    throw ConfigError(here + ": " + e.what());
  }
  return m;
}

json material_to_json(const MaterialModel& m) {
  json j{{"label", m.label}, {"variant", m.variant_name()}};
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, DrudeMetal>) {
          j["sigma"] = v.params.sigma;
        } else if constexpr (std::is_same_v<V, IsotropicSC>) {
          j.update(two_fluid_to_json(v.params));
        } else if constexpr (std::is_same_v<V, UniaxialSC>) {
          j["transverse"] = two_fluid_to_json(v.params.transverse);
          j["longitudinal"] = two_fluid_to_json(v.params.longitudinal);
        }
      },
      m.variant);
  if (m.validity.first_critical_field) j["first_critical_field_T"] = *m.validity.first_critical_field;
  if (m.validity.gap_frequency) j["gap_frequency_Hz"] = *m.validity.gap_frequency;
  return j;
}

void SweepSpec::validate() const {
  if (!(min < max)) throw ConfigError("sweep: min must be below max");
  if (points < 2) throw ConfigError("sweep: points must be at least 2");
  if (spacing == Spacing::log && !(min > 0.0))
    throw ConfigError("sweep: log spacing requires min > 0");
  if (axis == SweepAxis::distance_z && !(min > 0.0))
    throw ConfigError("sweep: distances must be positive");
  if (!(min >= 0.0)) throw ConfigError("sweep: axis values must be non-negative");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> g(points);
  const double n = points - 1;
  for (int i = 0; i < points; ++i) {
    if (spacing == Spacing::linear) {
      g[i] = min + (max - min) * (i / n);
    } else {
      g[i] = min * std::pow(max / min, i / n);
    }
  }
  g.front() = min;
  g.back() = max;
  return g;
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::distance_z: return "distance_z";
    case SweepAxis::thickness_d: return "thickness_d";
    case SweepAxis::temperature_T: return "temperature_T";
    default: return "reduced_T_over_Tc";
  }
}

SweepAxis parse_axis(const std::string& s) {
  if (s == "distance_z") return SweepAxis::distance_z;
  if (s == "thickness_d") return SweepAxis::thickness_d;
  if (s == "temperature_T") return SweepAxis::temperature_T;
  if (s == "reduced_T_over_Tc") return SweepAxis::reduced_T_over_Tc;
  throw ConfigError("sweep: unknown axis '" + s + "'");
}

std::string axis_column(SweepAxis a) {
  switch (a) {
    case SweepAxis::distance_z: return "z_m";
    case SweepAxis::thickness_d: return "d_m";
    case SweepAxis::temperature_T: return "T_K";
    default: return "T_over_Tc";
  }
}

const MaterialModel& RunConfig::material(const std::string& label) const {
  // Later definitions shadow presets of the same label.
  for (auto it = materials.rbegin(); it != materials.rend(); ++it)
    if (it->label == label) return *it;
  throw ConfigError("stack references unknown material '" + label + "'");
}

LayerStack RunConfig::build_stack() const { return build_stack(temperature, std::nullopt); }

LayerStack RunConfig::build_stack(double T, std::optional<double> film_thickness) const {
  LayerStack s;
  s.temperature = T;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    const bool interior = i > 0 && i + 1 < stack.size();
    double d = interior ? stack[i].thickness : kSemiInfinite;
    if (interior && film_thickness) d = *film_thickness;
    s.layers.push_back({material(stack[i].material), d});
  }
  return s;
}

std::optional<double> RunConfig::film_critical_temperature() const {
  for (const auto& l : stack)
    if (auto tc = material(l.material).critical_temperature()) return tc;
  return std::nullopt;
}

RunConfig parse_run_config(const json& doc) {
  try {
    check_keys(doc, {"name", "description", "materials", "stack", "z", "temperature",
                     "transition", "quadrature", "path", "orientation", "sweep",
                     "output", "threads"},
               "config");
    RunConfig c;
    c.source = doc;
    if (doc.contains("name")) c.name = text(doc, "name", "config");
    c.materials = material_presets();
    if (doc.contains("materials")) {
      if (!doc.at("materials").is_array()) throw ConfigError("config: 'materials' must be an array");
      for (const auto& m : doc.at("materials")) c.materials.push_back(material_from_json(m));
    }

    if (!doc.contains("stack") || !doc.at("stack").is_array())
      throw ConfigError("config: 'stack' must be an array of layers");
    const auto& layers = doc.at("stack");
    if (layers.size() < 2 || layers.size() > 3)
      throw ConfigError("config: 'stack' must have 2 or 3 layers");
    for (std::size_t i = 0; i < layers.size(); ++i) {
      const std::string where = "stack[" + std::to_string(i) + "]";
      check_keys(layers[i], {"material", "thickness"}, where);
      LayerRef ref{text(layers[i], "material", where), kSemiInfinite};
      const bool interior = i > 0 && i + 1 < layers.size();
      if (interior) {
        ref.thickness = number(layers[i], "thickness", where);
        if (ref.thickness < 0.0) throw ConfigError(where + ": thickness must be >= 0");
      } else if (layers[i].contains("thickness")) {
        throw ConfigError(where + ": outer layers are semi-infinite; drop 'thickness'");
      }
      c.stack.push_back(ref);
    }

    c.z = number_or(doc, "z", c.z, "config");
    if (!(c.z > 0.0)) throw ConfigError("config: 'z' must be positive");
    c.temperature = number_or(doc, "temperature", c.temperature, "config");
    if (!(c.temperature >= 0.0)) throw ConfigError("config: 'temperature' must be >= 0");

    if (doc.contains("transition")) {
      const auto& t = doc.at("transition");
      check_keys(t, {"frequency", "label", "matrix_elements"}, "transition");
      c.transition.frequency = number_or(t, "frequency", c.transition.frequency, "transition");
      if (t.contains("label")) c.transition.label = text(t, "label", "transition");
      if (t.contains("matrix_elements")) {
        const auto& me = t.at("matrix_elements");
        if (!me.is_array() || me.size() != 3)
          throw ConfigError("transition: 'matrix_elements' must hold 3 [re, im] pairs");
        std::array<complex, 3> s;
        for (int k = 0; k < 3; ++k) {
          const auto& e = me[k];
          if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ConfigError("transition: matrix element must be [re, im]");
          s[k] = {e[0].get<double>(), e[1].get<double>()};
        }
        c.transition.coupling_mode = CouplingMode::explicit_matrix_elements;
        c.transition.matrix_elements = s;
      }
    }

    if (doc.contains("quadrature")) {
      const auto& q = doc.at("quadrature");
      check_keys(q, {"rel_tol", "abs_floor", "max_refinements", "tail_threshold"},
                 "quadrature");
      c.quadrature.rel_tol = number_or(q, "rel_tol", c.quadrature.rel_tol, "quadrature");
      c.quadrature.abs_floor = number_or(q, "abs_floor", c.quadrature.abs_floor, "quadrature");
      c.quadrature.max_refinements = static_cast<int>(
          number_or(q, "max_refinements", c.quadrature.max_refinements, "quadrature"));
      c.quadrature.tail_threshold =
          number_or(q, "tail_threshold", c.quadrature.tail_threshold, "quadrature");
    }
    if (doc.contains("path")) c.path = parse_path(text(doc, "path", "config"));
    if (doc.contains("orientation"))
      c.orientation = parse_orientation(text(doc, "orientation", "config"));

    if (doc.contains("sweep")) {
      const auto& s = doc.at("sweep");
      check_keys(s, {"axis", "min", "max", "points", "spacing"}, "sweep");
      SweepSpec spec;
      spec.axis = parse_axis(text(s, "axis", "sweep"));
      spec.min = number(s, "min", "sweep");
      spec.max = number(s, "max", "sweep");
      const double pts = number(s, "points", "sweep");
      if (pts != std::floor(pts)) throw ConfigError("sweep: 'points' must be an integer");
      spec.points = static_cast<int>(pts);
      const std::string spacing = s.contains("spacing") ? text(s, "spacing", "sweep") : "linear";
      if (spacing == "linear") spec.spacing = Spacing::linear;
      else if (spacing == "log") spec.spacing = Spacing::log;
      else throw ConfigError("sweep: spacing must be 'linear' or 'log'");
      spec.validate();
      c.sweep = spec;
    }
    if (doc.contains("output")) c.output = text(doc, "output", "config");
    if (doc.contains("threads")) c.threads = static_cast<int>(number(doc, "threads", "config"));

    // Resolve everything now so errors surface before computation.
    c.transition.validate();
    c.quadrature.validate();
    const LayerStack stack = c.build_stack();
    stack.validate();
    if (c.sweep) {
      if (c.sweep->axis == SweepAxis::thickness_d && c.stack.size() != 3)
        throw ConfigError("sweep: thickness_d needs a three-layer stack");
      if (c.sweep->axis == SweepAxis::reduced_T_over_Tc && !c.film_critical_temperature())
        throw ConfigError("sweep: reduced_T_over_Tc needs a superconducting layer");
    }
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
  return parse_run_config(doc);
}

} // namespace scnoise
