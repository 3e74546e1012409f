#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scnoise/config.hpp"
#include "scnoise/rates.hpp"

namespace scnoise {

/// Columnar sweep result. `values[i]` holds one number per entry of
/// `columns` (the axis column first); `status[i]` is "ok", "ok:normal_state"
/// or "error: ..." for row i.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;
  std::vector<std::string> status;
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t rows() const { return values.size(); }
  /// Index of a named column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> series(const std::string& name) const;
};

class SweepError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// (tau(d) - tau(0)) / tau(0) for the film thickness d of `stack_with_d`. Both
/// lifetimes use the same rate path, resolved from `stack_with_d`.
double screening_factor(const LayerStack& stack_with_d, double z,
                        const TransitionSpec& transition, RatePath path = RatePath::automatic,
                        SpinOrientation orientation = SpinOrientation::random,
                        const QuadratureSettings& settings = {});

/// Evaluates the rate on every grid point of `spec`. Rows are independent
/// and evaluated concurrently; a failing row is recorded in its status and
/// the run continues. Throws SweepError only if every row fails.
SweepTable run_sweep(const SweepSpec& spec, const RunConfig& config);

std::string version_string();

} // namespace scnoise
