#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbsim/optimize.hpp"
#include "qbsim/spin_model.hpp"

namespace qbsim {

enum class Metric { Ergotropy, ErgotropyMax, Capacity, CoherenceMax, Work, Power };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view s);

// Parameter names accepted on a sweep axis: the ModelParams fields plus omega_t.
bool is_axis_name(std::string_view name);
void set_param(ModelParams& p, std::string_view name, double value);
double get_param(const ModelParams& p, std::string_view name);

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  // min + i (max - min) / (steps - 1); the last point is exactly max.
  std::vector<double> points() const;
};

struct SweepConfig {
  ModelParams base;
  Axis axis1;
  std::optional<Axis> axis2;
  Metric metric = Metric::Ergotropy;
  double t_min = 0.0;  // time window for the *Max metrics
  double t_max = 3.141592653589793;
  double omega_t = 1.5707963267948966;  // charging phase when no axis is omega_t

  // Throws InvalidConfig.
  void validate() const;
};

struct SweepResult {
  SweepConfig config;
  std::vector<double> axis1;
  std::vector<double> axis2;  // empty for 1-D sweeps
  std::vector<double> values; // row-major, axis1.size() x max(1, axis2.size())
  std::string timestamp;      // UTC, ISO 8601
  std::string tool_version;

  std::size_t cols() const noexcept { return axis2.empty() ? 1 : axis2.size(); }
  double at(std::size_t i, std::size_t j = 0) const { return values[i * cols() + j]; }
};

// Metric value at one parameter point. `omega_t` is used by the pointwise
// time metrics, the window by the maximized ones.
double evaluate_metric(const ModelParams& p, Metric metric, double omega_t, double t_min, double t_max);

// Rows of axis1 are distributed over `threads` workers; values depend only on
// their grid coordinates, so the result is the same for every thread count.
SweepResult run_sweep(const SweepConfig& config, unsigned threads = 1);

Maximum maximize_over_time(const std::function<double(double)>& f, double t_min, double t_max);
Maximum maximize_over_time(const ModelParams& p, Metric metric, double t_min, double t_max);

struct ThresholdReport {
  double threshold_x = 0.0;
  double pre_peak = 0.0;
  double post_mean = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
};

// Locates the point past which the series stays below 1% of its peak. With
// `refine`, the crossing inside the last bracket is bisected on refine(x).
ThresholdReport detect_threshold(std::span<const double> xs, std::span<const double> ys,
                                 const std::function<double(double)>& refine = {});

struct FigurePreset {
  std::string id;           // lower case, e.g. "f9a"
  std::string description;  // parameters in words
  SweepConfig config;
  std::optional<std::string> threshold_axis;  // set for the 1-D threshold curves
};

// Case-insensitive; throws UnknownFigure.
FigurePreset figure_preset(std::string_view id);
const std::vector<FigurePreset>& figure_presets();

}  // namespace qbsim
