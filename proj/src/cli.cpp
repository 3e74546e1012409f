#include "scnoise/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scnoise/csv.hpp"
#include "scnoise/sweep.hpp"

namespace scnoise {

namespace {

constexpr const char* kSchemaHelp = R"(Run configuration (JSON, SI units):
  {
    "name": "text",                                   optional
    "materials": [                                    optional; presets always available:
      {"label": "nb_fit", "preset": "niobium",          vacuum, copper, niobium, bscco
       "sigma_normal": 2e8},
      {"label": "al", "variant": "drude", "sigma": 3.5e7},
      {"label": "sc", "variant": "isotropic_sc", "lambda0": 5e-8, "Tc": 9,
       "sigma_normal": 1e7, "alpha": 4},
      {"label": "cuprate", "variant": "uniaxial_sc",
       "transverse": {...two-fluid keys...}, "longitudinal": {...}}
    ],
    "stack": [{"material": "vacuum"},                 2 or 3 layers, vacuum on top
              {"material": "niobium", "thickness": 1e-6},
              {"material": "copper"}],
    "z": 1e-5, "temperature": 4.2,
    "transition": {"frequency": 560e3, "label": "...",
                   "matrix_elements": [[re, im], [re, im], [re, im]]},   optional
    "quadrature": {"rel_tol": 1e-8, "abs_floor": 0, "max_refinements": 60,
                   "tail_threshold": 1e-12},
    "path": "auto | isotropic | anisotropic | general",
    "orientation": "random | parallel | perpendicular",
    "sweep": {"axis": "distance_z | thickness_d | temperature_T | reduced_T_over_Tc",
              "min": 1e-6, "max": 1e-4, "points": 41, "spacing": "linear | log"},
    "output": "out.csv", "threads": 0
  }
See docs/config.md for the full schema.
)";

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string length(double metres) {
  std::ostringstream os;
  os.precision(6);
  if (metres < 1e-6) os << metres * 1e9 << " nm";
  else if (metres < 1e-3) os << metres * 1e6 << " um";
  else os << metres << " m";
  return os.str();
}

void describe_two_fluid(std::ostream& out, const TwoFluidParams& p) {
  out << "lambda0=" << length(p.lambda0) << " Tc=" << p.Tc << " K sigma_normal=" << p.sigma_normal
      << " S/m alpha=" << p.alpha;
}

void describe_material(std::ostream& out, const MaterialModel& m) {
  out << m.label << " [" << m.variant_name() << "]";
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, DrudeMetal>) {
          out << " sigma=" << v.params.sigma << " S/m";
        } else if constexpr (std::is_same_v<V, IsotropicSC>) {
          out << ' ';
          describe_two_fluid(out, v.params);
        } else if constexpr (std::is_same_v<V, UniaxialSC>) {
          out << "\n    in-plane (eps_t): ";
          describe_two_fluid(out, v.params.transverse);
          out << "\n    out-of-plane (eps_z): ";
          describe_two_fluid(out, v.params.longitudinal);
        }
      },
      m.variant);
  if (m.validity.first_critical_field)
    out << "\n    first critical field " << *m.validity.first_critical_field * 1e3
        << " mT at 4.2 K (Meissner-state validity)";
  if (m.validity.gap_frequency)
    out << "\n    gap frequency " << *m.validity.gap_frequency << " Hz";
  out << '\n';
}

void validity_notes(std::ostream& err, const LayerStack& stack) {
  for (const auto& l : stack.layers) {
    if (l.material.validity.first_critical_field)
      err << "note: " << l.material.label
          << " results hold in the Meissner state only (applied fields below "
          << *l.material.validity.first_critical_field * 1e3 << " mT)\n";
  }
}

struct Options {
  std::string config;
  std::string out;
  double tol = 0.0;
  bool quiet = false;
  std::string figure;
};

RunConfig load(const Options& o) {
  if (o.config.empty()) throw ConfigError("--config <path> is required");
  RunConfig c = load_run_config(o.config);
  if (o.tol > 0.0) c.quadrature.rel_tol = o.tol;
  return c;
}

void write_table(const SweepTable& t, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_csv(t, out);
  } else {
    emit_csv(t, path);
  }
}

int run_rate(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = load(o);
  const LayerStack stack = c.build_stack();
  const RateResult r = compute_rate(stack, c.z, c.transition, c.path, c.orientation, c.quadrature);
  std::ostringstream s;
  s << "path=" << to_string(r.path) << '\n'
    << "orientation=" << to_string(c.orientation) << '\n'
    << "z_m=" << fmt(c.z) << '\n'
    << "temperature_K=" << fmt(stack.temperature) << '\n'
    << "film_thickness_m=" << fmt(stack.film_thickness()) << '\n'
    << "gamma_field_per_s=" << fmt(r.gamma_field) << '\n'
    << "n_th=" << fmt(r.n_th) << '\n'
    << "gamma_total_per_s=" << fmt(r.gamma_total) << '\n'
    << "tau_s=" << fmt(r.tau) << '\n'
    << "evaluations=" << r.diagnostics.evaluations << '\n'
    << "truncation_eta_per_m=" << fmt(r.diagnostics.truncation_eta) << '\n'
    << "est_error=" << fmt(r.diagnostics.est_error) << '\n'
    << "path_calibration_constant=" << fmt(path_calibration_constant()) << '\n';
  out << s.str();
  if (!o.quiet) {
    validity_notes(err, stack);
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  }
  return kExitOk;
}

int run_sweep_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = load(o);
  if (!c.sweep) throw ConfigError("config has no 'sweep' section");
  const SweepTable t = run_sweep(*c.sweep, c);
  write_table(t, o.out.empty() ? c.output : o.out, out);
  if (!o.quiet) validity_notes(err, c.build_stack());
  return kExitOk;
}

int run_screening(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = load(o);
  if (c.stack.size() != 3) throw ConfigError("screening needs a three-layer stack");
  SweepSpec spec;
  if (c.sweep && c.sweep->axis == SweepAxis::thickness_d) {
    spec = *c.sweep;
  } else {
    spec = {SweepAxis::thickness_d, 1e-9, 1e-5, 41, Spacing::log};
  }
  const SweepTable t = run_sweep(spec, c);
  write_table(t, o.out.empty() ? c.output : o.out, out);
  if (!o.quiet) validity_notes(err, c.build_stack());
  return kExitOk;
}

int run_materials(std::ostream& out) {
  for (const auto& m : material_presets()) describe_material(out, m);
  return kExitOk;
}

int run_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  const auto curves = parse_figure(nlohmann::json::parse(canonical_figure_config(o.figure)));
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  for (const auto& curve : curves) {
    RunConfig c = curve.config;
    if (o.tol > 0.0) c.quadrature.rel_tol = o.tol;
    const SweepTable t = run_sweep(*c.sweep, c);
    const auto path = dir / (o.figure + "_" + curve.name + ".csv");
    emit_csv(t, path);
    if (!o.quiet) err << "wrote " << path.string() << '\n';
  }
  out << o.figure << ": " << curves.size() << " curves written to " << dir.string() << '\n';
  return kExitOk;
}

} // namespace

std::vector<FigureCurve> parse_figure(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("curves") || !doc.at("curves").is_array())
    throw ConfigError("figure document needs a 'curves' array");
  std::vector<FigureCurve> curves;
  for (const auto& c : doc.at("curves")) {
    RunConfig rc = parse_run_config(c);
    if (rc.name.empty()) throw ConfigError("figure curve without a 'name'");
    if (!rc.sweep) throw ConfigError("figure curve '" + rc.name + "' has no sweep");
    curves.push_back({rc.name, std::move(rc)});
  }
  return curves;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal magnetic near-field noise and spin-flip lifetimes above "
               "superconductor/metal stacks",
               "scnoise"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", o.config, "Run configuration (JSON)");
    if (needs_config) opt->required();
    sub->add_option("--out", o.out, "Output path (CSV file, or directory for reproduce)");
    sub->add_option("--tol", o.tol, "Quadrature relative tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--quiet", o.quiet, "Suppress notes and warnings");
  };
  auto* rate = app.add_subcommand("rate", "Single rate evaluation, printed as key=value lines");
  add_common(rate, true);
  auto* sweep = app.add_subcommand("sweep", "Run the sweep of a configuration and write CSV");
  add_common(sweep, true);
  auto* screening = app.add_subcommand("screening", "Screening factor versus film thickness");
  add_common(screening, true);
  auto* materials = app.add_subcommand("materials", "List material presets");
  auto* reproduce = app.add_subcommand("reproduce", "Write the CSV curves of a canonical figure");
  reproduce->add_option("figure", o.figure, "fig2 | fig3 | fig4 | fig5")
      ->required()
      ->check(CLI::IsMember(canonical_figures()));
  add_common(reproduce, false);
  app.footer(kSchemaHelp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rate->parsed()) return run_rate(o, out, err);
    if (sweep->parsed()) return run_sweep_cmd(o, out, err);
    if (screening->parsed()) return run_screening(o, out, err);
    if (materials->parsed()) return run_materials(out);
    if (reproduce->parsed()) return run_reproduce(o, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n\n" << kSchemaHelp;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

} // namespace scnoise
