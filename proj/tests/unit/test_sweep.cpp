#include <doctest.h>

#include "helpers.hpp"
#include "qbsim/error.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/sweep.hpp"

using namespace qbsim;
using namespace qbsim::testing;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.base.gamma = 0.5;
  c.axis1 = {"theta", 0.0, kPi / 2, 3};
  c.axis2 = Axis{"omega_t", 0.5, 1.5, 4};
  c.metric = Metric::Ergotropy;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no qbsim::Error thrown");
  return ErrorCode::InvalidState;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("axis grid includes both endpoints exactly") {
    const Axis a{"dz", 0.0, 0.3, 7};
    const auto xs = a.points();
    REQUIRE(xs.size() == 7u);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 0.3);
    CHECK(xs[3] == doctest::Approx(0.15));
  }

  TEST_CASE("sweep values equal direct metric calls") {
    const SweepConfig c = small_config();
    const SweepResult r = run_sweep(c, 1);
    REQUIRE(r.values.size() == 12u);
    for (std::size_t i = 0; i < r.axis1.size(); ++i) {
      for (std::size_t j = 0; j < r.axis2.size(); ++j) {
        ModelParams p = c.base;
        p.theta = r.axis1[i];
        CHECK(r.at(i, j) == evaluate_metric(p, Metric::Ergotropy, r.axis2[j], c.t_min, c.t_max));
      }
    }
  }

  TEST_CASE("sweep output is independent of the thread count") {
    SweepConfig c = small_config();
    c.axis1.steps = 9;
    const SweepResult one = run_sweep(c, 1);
    for (unsigned n : {2u, 3u, 8u, 64u}) CHECK(run_sweep(c, n).values == one.values);
  }

  TEST_CASE("sweep errors name the failing coordinate") {
    SweepConfig c;
    c.axis1 = {"temperature", -1.0, 1.0, 3};
    try {
      run_sweep(c, 2);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("temperature=-1") != std::string::npos);
    }
  }

  TEST_CASE("config validation") {
    SweepConfig c = small_config();
    c.axis1.name = "nonsense";
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidConfig);
    c = small_config();
    c.axis2->name = "theta";
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidConfig);
    c = small_config();
    c.axis1.steps = 1;
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidConfig);
    c = small_config();
    c.t_max = -1.0;
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidConfig);
  }

  TEST_CASE("parameter access by name") {
    ModelParams p;
    set_param(p, "gz", 2.5);
    CHECK(p.gz == 2.5);
    CHECK(get_param(p, "gz") == 2.5);
    CHECK(is_axis_name("omega_t"));
    CHECK_FALSE(is_axis_name("axis"));
    CHECK(code_of([&] { set_param(p, "zz", 1.0); }) == ErrorCode::InvalidConfig);
    CHECK(parse_metric("coherence_max") == Metric::CoherenceMax);
    CHECK_FALSE(parse_metric("entropy").has_value());
    CHECK(to_string(Metric::ErgotropyMax) == "ergotropy_max");
  }

  TEST_CASE("ergotropy and power vanish at zero charging time") {
    const ModelParams p;
    CHECK(evaluate_metric(p, Metric::Ergotropy, 0.0, 0.0, kPi) == doctest::Approx(0.0));
    CHECK(evaluate_metric(p, Metric::Power, 0.0, 0.0, kPi) == 0.0);
  }

  TEST_CASE("work equals ergotropy for a charged thermal state") {
    ModelParams p;
    p.gamma = 0.3;
    CHECK(evaluate_metric(p, Metric::Work, 1.0, 0.0, kPi) == evaluate_metric(p, Metric::Ergotropy, 1.0, 0.0, kPi));
  }

  TEST_CASE("time maximization of sin squared") {
    const Maximum m = maximize_over_time([](double t) { return std::sin(t) * std::sin(t); }, 0.0, kPi);
    CHECK(m.x == doctest::Approx(kPi / 2).epsilon(1e-6));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("time maximization keeps boundary maxima") {
    const Maximum m = maximize_over_time([](double t) { return t; }, 0.0, 2.0);
    CHECK(m.x == 2.0);
    CHECK(m.value == 2.0);
  }

  TEST_CASE("maximized ergotropy dominates pointwise values") {
    ModelParams p;
    p.gamma = 0.5;
    p.delta = 0.5;
    const double best = evaluate_metric(p, Metric::ErgotropyMax, 0.0, 0.0, kPi);
    for (double wt : {0.3, 1.0, kPi / 2, 2.5}) CHECK(best >= evaluate_metric(p, Metric::Ergotropy, wt, 0.0, kPi) - 1e-12);
  }

  TEST_CASE("threshold of a step series") {
    const std::vector<double> xs = {0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<double> ys = {5, 5, 5, 0, 0, 0, 0, 0};
    const ThresholdReport r = detect_threshold(xs, ys);
    CHECK(r.x_lo == 2.0);
    CHECK(r.x_hi == 3.0);
    CHECK(r.threshold_x == 2.5);
    CHECK(r.pre_peak == 5.0);
    CHECK(r.post_mean == 0.0);
    const ThresholdReport refined = detect_threshold(xs, ys, [](double x) { return x < 2.7 ? 5.0 : 0.0; });
    CHECK(refined.threshold_x == doctest::Approx(2.7).epsilon(1e-4));
    CHECK(refined.threshold_x > 2.0);
    CHECK(refined.threshold_x <= 3.0);
  }

  TEST_CASE("no threshold cases") {
    const std::vector<double> xs = {0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<double> flat = {1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(code_of([&] { detect_threshold(xs, flat); }) == ErrorCode::NoThreshold);
    const std::vector<double> rising = {0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(code_of([&] { detect_threshold(xs, rising); }) == ErrorCode::NoThreshold);
    const std::vector<double> zeros(8, 0.0);
    CHECK(code_of([&] { detect_threshold(xs, zeros); }) == ErrorCode::NoThreshold);
  }

  TEST_CASE("figure presets") {
    CHECK(figure_presets().size() >= 10u);
    const FigurePreset f2a = figure_preset("F2a");
    CHECK(f2a.id == "f2a");
    CHECK(f2a.config.axis1.name == "omega_t");
    REQUIRE(f2a.config.axis2.has_value());
    CHECK(f2a.config.axis2->name == "theta");
    CHECK(f2a.config.base.temperature == 0.1);

    const FigurePreset f10a = figure_preset("f10a");
    CHECK(f10a.config.metric == Metric::Capacity);
    CHECK(f10a.threshold_axis == std::optional<std::string>("dz"));
    CHECK(f10a.config.base.temperature == 0.01);

    const FigurePreset f9c = figure_preset("f9c");
    CHECK(f9c.config.metric == Metric::ErgotropyMax);
    CHECK(f9c.config.base.temperature == 1.0);
    CHECK(f9c.config.base.theta == doctest::Approx(kPi / 2));

    for (const auto& f : figure_presets()) CHECK_NOTHROW(f.config.validate());
    CHECK(code_of([] { figure_preset("f0x"); }) == ErrorCode::UnknownFigure);
  }
}
