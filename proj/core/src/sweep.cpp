#include "qbsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "qbsim/charger.hpp"
#include "qbsim/constants.hpp"
#include "qbsim/error.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/version.hpp"

namespace qbsim {

namespace {

struct NamedMetric {
  Metric metric;
  std::string_view name;
};

constexpr NamedMetric kMetrics[] = {
    {Metric::Ergotropy, "ergotropy"},       {Metric::ErgotropyMax, "ergotropy_max"},
    {Metric::Capacity, "capacity"},         {Metric::CoherenceMax, "coherence_max"},
    {Metric::Work, "work"},                 {Metric::Power, "power"},
};

constexpr std::string_view kAxisNames[] = {"j",     "gamma",       "delta", "dz",     "gz",
                                           "b",     "theta",       "temperature", "omega", "omega_t"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string_view to_string(Metric m) {
  for (const auto& nm : kMetrics)
    if (nm.metric == m) return nm.name;
  return "?";
}

std::optional<Metric> parse_metric(std::string_view s) {
  for (const auto& nm : kMetrics)
    if (nm.name == s) return nm.metric;
  return std::nullopt;
}

bool is_axis_name(std::string_view name) {
  return std::find(std::begin(kAxisNames), std::end(kAxisNames), name) != std::end(kAxisNames);
}

void set_param(ModelParams& p, std::string_view name, double value) {
  if (name == "j") p.j = value;
  else if (name == "gamma") p.gamma = value;
  else if (name == "delta") p.delta = value;
  else if (name == "dz") p.dz = value;
  else if (name == "gz") p.gz = value;
  else if (name == "b") p.b = value;
  else if (name == "theta") p.theta = value;
  else if (name == "temperature") p.temperature = value;
  else if (name == "omega") p.omega = value;
  else throw Error(ErrorCode::InvalidConfig, "unknown parameter '" + std::string(name) + "'");
}

double get_param(const ModelParams& p, std::string_view name) {
  if (name == "j") return p.j;
  if (name == "gamma") return p.gamma;
  if (name == "delta") return p.delta;
  if (name == "dz") return p.dz;
  if (name == "gz") return p.gz;
  if (name == "b") return p.b;
  if (name == "theta") return p.theta;
  if (name == "temperature") return p.temperature;
  if (name == "omega") return p.omega;
  throw Error(ErrorCode::InvalidConfig, "unknown parameter '" + std::string(name) + "'");
}

std::vector<double> Axis::points() const {
  std::vector<double> xs(static_cast<std::size_t>(std::max(steps, 0)));
  for (int i = 0; i < steps; ++i) xs[static_cast<std::size_t>(i)] = min + i * (max - min) / (steps - 1);
  if (steps >= 2) xs.back() = max;
  return xs;
}

void SweepConfig::validate() const {
  auto check_axis = [](const Axis& a, const char* which) {
    if (!is_axis_name(a.name)) {
      throw Error(ErrorCode::InvalidConfig, std::string(which) + ".name '" + a.name + "' is not a sweepable parameter");
    }
    if (a.steps < 2) throw Error(ErrorCode::InvalidConfig, std::string(which) + ".steps must be >= 2");
    if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw Error(ErrorCode::InvalidConfig, std::string(which) + " bounds must be finite");
    }
  };
  check_axis(axis1, "axis1");
  if (axis2) {
    check_axis(*axis2, "axis2");
    if (axis2->name == axis1.name) throw Error(ErrorCode::InvalidConfig, "axis1 and axis2 name the same parameter");
  }
  if (!(t_max >= t_min) || t_min < 0.0) throw Error(ErrorCode::InvalidConfig, "time window must satisfy 0 <= t_min <= t_max");
  base.validate();
}

double evaluate_metric(const ModelParams& p, Metric metric, double omega_t, double t_min, double t_max) {
  switch (metric) {
    case Metric::Capacity: {
      const ComplexMatrix h = build_qb_hamiltonian(p);
      return capacity_numeric(h, gibbs_state(h, p.temperature), CapacityMode::Literal11);
    }
    case Metric::ErgotropyMax:
    case Metric::CoherenceMax:
      return maximize_over_time(p, metric, t_min, t_max).value;
    case Metric::Ergotropy:
    case Metric::Work:
    case Metric::Power: {
      const ChargingProtocol proto(p);
      const double t = omega_t / p.omega;
      const double w = work(proto.charged_state(t), proto.thermal(), proto.hamiltonian());
      if (metric != Metric::Power) return w;
      return t > 0.0 ? average_power(w, t) : 0.0;
    }
  }
  return 0.0;
}

Maximum maximize_over_time(const std::function<double(double)>& f, double t_min, double t_max) {
  return maximize_scan_golden(f, t_min, t_max, tol::kTimeScanPoints, tol::kGoldenSection);
}

Maximum maximize_over_time(const ModelParams& p, Metric metric, double t_min, double t_max) {
  const ChargingProtocol proto(p);
  switch (metric) {
    case Metric::Ergotropy:
    case Metric::ErgotropyMax:
    case Metric::Work:
      return maximize_over_time(
          [&](double t) { return work(proto.charged_state(t), proto.thermal(), proto.hamiltonian()); }, t_min,
          t_max);
    case Metric::CoherenceMax:
      return maximize_over_time([&](double t) { return l1_coherence(proto.charged_state(t)); }, t_min, t_max);
    case Metric::Power:
      return maximize_over_time(
          [&](double t) {
            if (!(t > 0.0)) return 0.0;
            return work(proto.charged_state(t), proto.thermal(), proto.hamiltonian()) / t;
          },
          t_min, t_max);
    case Metric::Capacity: {
      const double k = capacity_numeric(proto.hamiltonian(), proto.thermal(), CapacityMode::Literal11);
      return {t_min, k};
    }
  }
  return {};
}

SweepResult run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();
  SweepResult res;
  res.config = config;
  res.axis1 = config.axis1.points();
  if (config.axis2) res.axis2 = config.axis2->points();
  res.timestamp = utc_now();
  res.tool_version = std::string(kVersion);
  const std::size_t rows = res.axis1.size(), cols = res.cols();
  res.values.assign(rows * cols, 0.0);

  auto eval_point = [&](std::size_t i, std::size_t j) {
    ModelParams p = config.base;
    double omega_t = config.omega_t;
    auto apply = [&](const std::string& name, double v) {
      if (name == "omega_t") omega_t = v;
      else set_param(p, name, v);
    };
    apply(config.axis1.name, res.axis1[i]);
    if (config.axis2) apply(config.axis2->name, res.axis2[j]);
    p.validate();
    const double v = evaluate_metric(p, config.metric, omega_t, config.t_min, config.t_max);
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidState, "metric is not finite");
    return v;
  };

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_row = rows;
  std::exception_ptr err;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) {
      std::size_t j = 0;
      try {
        for (; j < cols; ++j) res.values[i * cols + j] = eval_point(i, j);
      } catch (const std::exception& e) {
        std::string where = config.axis1.name + "=" + fmt(res.axis1[i]);
        if (config.axis2) where += ", " + config.axis2->name + "=" + fmt(res.axis2[j]);
        const ErrorCode code = [&] {
          if (const auto* qe = dynamic_cast<const Error*>(&e)) return qe->code();
          return ErrorCode::InvalidState;
        }();
        std::lock_guard lock(err_mutex);
        if (i < err_row) {
          err_row = i;
          err = std::make_exception_ptr(Error(code, "at " + where + ": " + e.what()));
        }
        return;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return res;
}

ThresholdReport detect_threshold(std::span<const double> xs, std::span<const double> ys,
                                 const std::function<double(double)>& refine) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::DimensionMismatch, "xs and ys differ in length");
  if (xs.size() < static_cast<std::size_t>(tol::kThresholdMinPoints)) {
    throw Error(ErrorCode::InvalidParams, "threshold detection needs at least 8 points");
  }
  const double peak = *std::max_element(ys.begin(), ys.end());
  if (!(peak > 0.0)) throw Error(ErrorCode::NoThreshold, "series has no positive peak");
  const double cut = tol::kThresholdFraction * peak;
  std::size_t last = 0;
  for (std::size_t k = 0; k < ys.size(); ++k)
    if (ys[k] > cut) last = k;
  if (last + 1 == ys.size()) throw Error(ErrorCode::NoThreshold, "series never drops below 1% of its peak");

  ThresholdReport r;
  r.pre_peak = peak;
  r.x_lo = xs[last];
  r.x_hi = xs[last + 1];
  const auto tail = ys.subspan(last + 1);
  r.post_mean = std::accumulate(tail.begin(), tail.end(), 0.0) / static_cast<double>(tail.size());
  double lo = r.x_lo, hi = r.x_hi;
  if (refine) {
    while (hi - lo > tol::kThresholdBisection) {
      const double mid = 0.5 * (lo + hi);
      if (refine(mid) > cut) lo = mid;
      else hi = mid;
    }
  }
  r.threshold_x = 0.5 * (lo + hi);
  return r;
}

}  // namespace qbsim
