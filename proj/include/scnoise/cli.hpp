#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scnoise/config.hpp"

namespace scnoise {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitComputation = 2 };

/// Subcommands: rate, sweep, screening, materials, reproduce <fig2|fig3|fig4|fig5>.
int cli_main(int argc, char** argv);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FigureCurve {
  std::string name;
  RunConfig config;
};

/// "fig2" ... "fig5".
std::vector<std::string> canonical_figures();
/// The shipped JSON document for `figure`; throws ConfigError when unknown.
std::string_view canonical_figure_config(std::string_view figure);
/// Parses a figure document: {"figure", "description", "curves": [RunConfig...]}.
std::vector<FigureCurve> parse_figure(const nlohmann::json& doc);

} // namespace scnoise
