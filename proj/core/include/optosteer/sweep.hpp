#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optosteer/measures.hpp"
#include "optosteer/model.hpp"

namespace optosteer {

enum class SweepParam { r, nth, power, l1, l2, theta1, theta2 };

std::string_view to_string(SweepParam param);
std::optional<SweepParam> parse_sweep_param(std::string_view name);

// Value of `param` in `params`; for nth this is nth1.
double get_param(const PhysicalParams& params, SweepParam param);

// Sets `param`; nth sets nth1 and nth2 together.
void set_param(PhysicalParams& params, SweepParam param, double value);

enum class Column { swept, g_ab, g_ba, e_n, nu, regime };

std::string_view to_string(Column column);
const std::vector<Column>& default_columns();

struct SweepSpec {
  PhysicalParams base;
  SweepParam swept = SweepParam::r;
  double start = 0.0;
  double stop = 3.5;
  std::size_t steps = 141;
  std::vector<Column> outputs = default_columns();

  double grid_value(std::size_t i) const;
};

// Throws RangeError if the sweep or any grid endpoint is invalid.
void validate_sweep(const SweepSpec& spec);

enum class PointStatus { ok, not_hurwitz, numerical_failure };

struct SweepRecord {
  double value = 0.0;
  double g_ab = 0.0;
  double g_ba = 0.0;
  double e_n = 0.0;
  double nu = 0.5;
  Regime regime = Regime::NoWay;
  PointStatus status = PointStatus::ok;

  std::string_view regime_label() const;
};

/// steady_covariance -> mechanical_covariance -> report at one parameter point.
SteeringReport evaluate_point(const PhysicalParams& params);

/// One record per grid point, in grid order. Points are evaluated on up to
/// `threads` workers (0 = hardware concurrency); numerical failures at a point
/// are recorded in its status instead of propagating.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 0);

// --- configuration ---------------------------------------------------------

/// Parses `key = value` lines (`#` starts a comment). Frequencies are in Hz
/// and converted to rad/s; omitted keys keep the reference values.
SweepSpec parse_config(std::string_view text);

/// Applies overrides such as `r=2.25` on top of `text` (same syntax and units).
SweepSpec parse_config(std::string_view text, const std::vector<std::string>& overrides);

// --- presets -----------------------------------------------------------------

enum class FigureId { fig2a, fig2b, fig3a, fig3b };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string_view to_string(FigureId id);
SweepSpec figure_preset(FigureId id);

// --- output ------------------------------------------------------------------

/// Scientific notation, 12 digits after the point, bare exponent: 1.5e0,
/// 2.345000000000e-3, 0.000000000000e0.
std::string format_number(double x);

std::string write_csv(const std::vector<SweepRecord>& records,
                      const std::vector<Column>& columns = default_columns());

/// gnuplot script plotting the three measures of `csv_path` against the swept axis.
std::string plot_script(std::string_view csv_path, SweepParam swept);

}  // namespace optosteer
