#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numbers>
#include <string>

#include "qbsim/error.hpp"
#include "qbsim/sweep.hpp"

namespace qbsim {

namespace {

constexpr double kPi = std::numbers::pi;

struct Family {
  const char* label;
  double delta;
  double gamma;
};

constexpr Family kAfm[] = {{"XX", 0.0, 0.0}, {"XY", 0.0, 0.5}, {"XXZ", 0.5, 0.0}, {"XYZ", 0.5, 0.5}};
constexpr Family kFm[] = {{"XX", 0.0, 0.0}, {"XY", 0.0, 0.5}, {"XXZ", -0.5, 0.0}, {"XYZ", -0.5, 0.5}};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string describe(const ModelParams& p) {
  return "J=" + num(p.j) + " delta=" + num(p.delta) + " gamma=" + num(p.gamma) + " dz=" + num(p.dz) +
         " gz=" + num(p.gz) + " B=" + num(p.b) + " theta=" + num(p.theta) + " T=" + num(p.temperature) +
         " omega=" + num(p.omega);
}

// Ergotropy density plot over omega_t in [0, 2 pi] and one parameter.
FigurePreset density(const std::string& id, const Family& f, double j, double theta, const Axis& param,
                     const std::string& what) {
  FigurePreset fp;
  fp.id = id;
  auto& c = fp.config;
  c.base.j = j;
  c.base.delta = f.delta;
  c.base.gamma = f.gamma;
  c.base.theta = theta;
  c.base.temperature = 0.1;
  c.metric = Metric::Ergotropy;
  c.axis1 = {"omega_t", 0.0, 2.0 * kPi, 101};
  c.axis2 = param;
  fp.description = std::string(j > 0 ? "AFM " : "FM ") + f.label + ", " + what + ": " + describe(c.base);
  return fp;
}

// One-dimensional curve against dz for the XYZ antiferromagnet.
FigurePreset dz_curve(const std::string& id, Metric metric, double temperature, const std::string& what) {
  FigurePreset fp;
  fp.id = id;
  auto& c = fp.config;
  c.base.j = 1.0;
  c.base.delta = 0.5;
  c.base.gamma = 0.5;
  c.base.omega = 1.0;
  c.base.theta = kPi / 2;
  c.base.temperature = temperature;
  c.metric = metric;
  c.axis1 = {"dz", 0.0, 5.0, 400};
  c.t_min = 0.0;
  c.t_max = kPi;
  fp.threshold_axis = "dz";
  fp.description = "AFM XYZ, " + what + ": " + describe(c.base);
  return fp;
}

std::vector<FigurePreset> build_presets() {
  std::vector<FigurePreset> out;
  const char sub[] = {'a', 'b', 'c', 'd'};
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f2") + sub[k], kAfm[k], 1.0, 0.0, {"theta", 0.0, kPi / 2, 101},
                          "xi vs omega_t and theta"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f3") + sub[k], kFm[k], -1.0, 0.0, {"theta", 0.0, kPi / 2, 101},
                          "xi vs omega_t and theta"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f4") + sub[k], kAfm[k], 1.0, 0.0, {"temperature", 0.01, 3.0, 101},
                          "xi vs omega_t and T"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f5") + sub[k], kFm[k], -1.0, kPi / 4, {"temperature", 0.01, 3.0, 101},
                          "xi vs omega_t and T"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f6") + sub[k], kAfm[k], 1.0, kPi / 2, {"gz", 0.0, 25.0, 101},
                          "xi vs omega_t and gz"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f7") + sub[k], kAfm[k], 1.0, kPi / 2, {"dz", 0.0, 40.0, 101},
                          "xi vs omega_t and dz"));
  }
  for (int k = 0; k < 4; ++k) {
    out.push_back(density(std::string("f8") + sub[k], kFm[k], -1.0, kPi / 4, {"dz", 0.0, 40.0, 101},
                          "xi vs omega_t and dz"));
  }
  const double temps[] = {0.01, 0.1, 1.0};
  for (int k = 0; k < 3; ++k) {
    out.push_back(dz_curve(std::string("f9") + sub[k], Metric::ErgotropyMax, temps[k], "max ergotropy vs dz"));
  }
  for (int k = 0; k < 3; ++k) {
    out.push_back(dz_curve(std::string("f10") + sub[k], Metric::Capacity, temps[k], "capacity vs dz"));
  }
  for (int k = 0; k < 3; ++k) {
    FigurePreset fp = dz_curve(std::string("f11") + sub[k], Metric::CoherenceMax, temps[k],
                               "max l1 coherence vs dz and gz");
    fp.config.axis1 = {"dz", 0.0, 5.0, 101};
    fp.config.axis2 = Axis{"gz", 0.0, 5.0, 101};
    fp.threshold_axis.reset();
    out.push_back(std::move(fp));
  }
  return out;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build_presets();
  return presets;
}

FigurePreset figure_preset(std::string_view id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (const auto& p : figure_presets())
    if (p.id == key) return p;
  throw Error(ErrorCode::UnknownFigure, "no figure preset '" + std::string(id) + "'");
}

}  // namespace qbsim
