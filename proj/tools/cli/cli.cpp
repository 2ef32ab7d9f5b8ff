#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <thread>

#include "config_file.hpp"
#include "output.hpp"
#include "qbsim/error.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/sweep.hpp"
#include "qbsim/version.hpp"

namespace qbsim::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;  // accepted for interface stability; nothing is random
};

struct IoError {
  std::string what;
};

std::string g10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

unsigned resolve_threads(const Globals& g) {
  if (g.threads) return std::max(1u, *g.threads);
  if (const char* env = std::getenv("QBSIM_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end == '\0' && v > 0) return static_cast<unsigned>(v);
    throw Error(ErrorCode::InvalidParams, std::string("QBSIM_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError{"cannot open '" + path.string() + "' for writing"};
  f << content;
  f.close();
  if (!f) throw IoError{"failed writing '" + path.string() + "'"};
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError{"cannot create output directory '" + dir.string() + "'"};
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "qbsim";
  for (const auto& a : args) s += " " + a;
  return s;
}

// Writes <stem>.csv, optionally <stem>.svg, and <stem>.manifest.json.
std::vector<std::string> emit(const SweepResult& r, const fs::path& dir, const std::string& stem, bool svg,
                              const std::vector<std::string>& csv_comments, const std::string& title,
                              const std::vector<std::string>& args, double wall, unsigned threads) {
  ensure_dir(dir);
  std::vector<std::string> outputs;
  std::ostringstream csv;
  write_csv(csv, r, csv_comments);
  const fs::path csv_path = dir / (stem + ".csv");
  write_file(csv_path, csv.str());
  outputs.push_back(csv_path.string());
  if (svg) {
    const fs::path svg_path = dir / (stem + ".svg");
    write_file(svg_path, render_svg(r, title));
    outputs.push_back(svg_path.string());
  }
  const fs::path manifest_path = dir / (stem + ".manifest.json");
  ordered_json m;
  m["command"] = join_args(args);
  m["tool_version"] = r.tool_version;
  m["timestamp"] = r.timestamp;
  m["wall_time_seconds"] = wall;
  m["threads"] = threads;
  m["config"] = serialize_config(r.config);
  m["outputs"] = outputs;
  write_file(manifest_path, m.dump(2) + "\n");
  outputs.push_back(manifest_path.string());
  return outputs;
}

void print_extremum(std::ostream& out, const SweepResult& r) {
  const auto it = std::max_element(r.values.begin(), r.values.end());
  const std::size_t k = static_cast<std::size_t>(it - r.values.begin());
  const std::size_t i = k / r.cols(), j = k % r.cols();
  out << "max " << to_string(r.config.metric) << " = " << g10(*it) << " at " << r.config.axis1.name << '='
      << g10(r.axis1[i]);
  if (!r.axis2.empty()) out << ", " << r.config.axis2->name << '=' << g10(r.axis2[j]);
  out << '\n';
}

int cmd_figure(const std::string& id, const std::string& out_dir, const std::string& format, const Globals& g,
               const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  FigurePreset fp;
  try {
    fp = figure_preset(id);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const unsigned threads = resolve_threads(g);
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = run_sweep(fp.config, threads);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out << "figure " << fp.id << ": " << fp.description << '\n';
  print_extremum(out, r);
  if (fp.threshold_axis) {
    const std::string& axis = *fp.threshold_axis;
    auto refine = [&](double x) {
      ModelParams p = fp.config.base;
      set_param(p, axis, x);
      return evaluate_metric(p, fp.config.metric, fp.config.omega_t, fp.config.t_min, fp.config.t_max);
    };
    try {
      const ThresholdReport t = detect_threshold(r.axis1, r.values, refine);
      out << "threshold_" << axis << " = " << g10(t.threshold_x) << " (window " << g10(t.x_lo) << ".."
          << g10(t.x_hi) << ", pre_peak " << g10(t.pre_peak) << ", post_mean " << g10(t.post_mean) << ")\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoThreshold) throw;
      out << "threshold_" << axis << " = none (" << e.what() << ")\n";
    }
  }
  const auto outputs = emit(r, out_dir, fp.id, format == "csv+svg", {"figure=" + fp.id}, fp.id + ": " + fp.description,
                            args, wall, threads);
  for (const auto& o : outputs) out << "wrote " << o << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir, const std::string& format,
              const Globals& g, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!std::ifstream(config_path)) throw IoError{"cannot read config file '" + config_path + "'"};
  SweepConfig c;
  try {
    c = load_config(config_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const unsigned threads = resolve_threads(g);
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = run_sweep(c, threads);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print_extremum(out, r);
  const std::string stem = fs::path(config_path).stem().string();
  const auto outputs = emit(r, out_dir, stem, format == "csv+svg", {}, stem, args, wall, threads);
  for (const auto& o : outputs) out << "wrote " << o << '\n';
  return kExitOk;
}

struct MetricsFlags {
  std::string model;
  std::optional<double> j, gamma, delta, dz, gz, b, theta, temperature, omega;
  double omega_t = std::numbers::pi / 2;
  std::string axis = "y";
  std::string exchange = "unscaled";
  bool json = false;
};

// Maps a ModelParams field named in a validation message to its flag.
std::string flag_for(const std::string& message) {
  static const std::pair<const char*, const char*> names[] = {
      {"temperature", "--T"}, {"omega", "--omega"}, {"theta", "--theta"}, {"gamma", "--gamma"},
      {"delta", "--delta"},   {"dz", "--dz"},       {"gz", "--gz"},       {"b", "--B"},
      {"j", "--J"}};
  const std::string first = message.substr(0, message.find(' '));
  for (const auto& [field, flag] : names)
    if (first == field) return flag;
  return "";
}

int cmd_metrics(const MetricsFlags& f, std::ostream& out, std::ostream& err) {
  ModelParams p;
  if (!f.model.empty()) {
    const std::string m = f.model;
    if (m == "xx") p.gamma = 0.0, p.delta = 0.0;
    else if (m == "xy") p.gamma = 0.5, p.delta = 0.0;
    else if (m == "xxz") p.gamma = 0.0, p.delta = 0.5;
    else if (m == "xyz") p.gamma = 0.5, p.delta = 0.5;
    else if (m == "xxx") p.gamma = 0.0;
    else if (m == "ising") p.gamma = 1.0, p.delta = 0.0;
    else {
      err << "error: --model: unknown model '" << m << "' (xx, xy, xxz, xyz, xxx, ising)\n";
      return kExitUsage;
    }
  }
  if (f.j) p.j = *f.j;
  if (f.model == "xxx") p.delta = p.j;
  if (f.gamma) p.gamma = *f.gamma;
  if (f.delta) p.delta = *f.delta;
  if (f.dz) p.dz = *f.dz;
  if (f.gz) p.gz = *f.gz;
  if (f.b) p.b = *f.b;
  if (f.theta) p.theta = *f.theta;
  if (f.temperature) p.temperature = *f.temperature;
  if (f.omega) p.omega = *f.omega;
  if (const auto ax = parse_charge_axis(f.axis)) p.axis = *ax;
  else {
    err << "error: --axis: expected x or y\n";
    return kExitUsage;
  }
  if (const auto ex = parse_exchange_scale(f.exchange)) p.exchange = *ex;
  else {
    err << "error: --exchange: expected unscaled or quarter\n";
    return kExitUsage;
  }
  if (!std::isfinite(f.omega_t) || f.omega_t < 0.0) {
    err << "error: --omega-t: must be finite and >= 0\n";
    return kExitUsage;
  }
  try {
    p.validate();
  } catch (const Error& e) {
    const std::string msg = e.what();
    const std::string body = msg.substr(msg.find(": ") + 2);
    err << "error: " << flag_for(body) << ": " << body << '\n';
    return kExitUsage;
  }

  const double t = f.omega_t / p.omega;
  const ChargingProtocol proto(p);
  const DensityMatrix rho = proto.charged_state(t);
  const ErgotropyBreakdown eb = ergotropy_breakdown(p, t);
  std::string closed_note;
  if (!eb.closed_form) {
    try {
      ergotropy_closed_form(p, t);
    } catch (const Error& e) {
      closed_note = e.what();
    }
  }
  const double w = work(rho, proto.thermal(), proto.hamiltonian());
  const std::optional<double> power = t > 0.0 ? std::optional(average_power(w, t)) : std::nullopt;
  std::optional<Efficiency> eta;
  if (std::abs(eb.trace_formula) >= tol::kEfficiencyMinErgotropy) eta = efficiency(w, eb.trace_formula);
  const double k_lit = capacity_numeric(proto.hamiltonian(), proto.thermal(), CapacityMode::Literal11);
  const double k_top = capacity_numeric(proto.hamiltonian(), proto.thermal(), CapacityMode::TopEigenstate);
  const double coherence = l1_coherence(rho);
  const double energy = trace_product(rho.matrix(), proto.hamiltonian()).real();
  const auto cls = classify_model(p);

  if (f.json) {
    ordered_json j;
    j["model"] = cls ? std::string(to_string(*cls)) : "unclassified";
    j["params"] = {{"j", p.j},         {"gamma", p.gamma}, {"delta", p.delta},
                   {"dz", p.dz},       {"gz", p.gz},       {"b", p.b},
                   {"theta", p.theta}, {"temperature", p.temperature},
                   {"omega", p.omega}, {"axis", to_string(p.axis)}, {"exchange", to_string(p.exchange)}};
    j["t"] = t;
    j["omega_t"] = f.omega_t;
    j["energy"] = energy;
    j["thermal_energy"] = proto.thermal_energy();
    j["ergotropy"] = {{"spectral", eb.spectral}, {"trace", eb.trace_formula}, {"closed_form", nullptr},
                      {"agreement", eb.agreement}};
    if (eb.closed_form) j["ergotropy"]["closed_form"] = *eb.closed_form;
    j["work"] = w;
    j["power"] = power ? ordered_json(*power) : ordered_json(nullptr);
    j["efficiency"] = eta ? ordered_json(eta->value) : ordered_json(nullptr);
    j["efficiency_exceeds_unity"] = eta ? eta->exceeds_unity : false;
    j["capacity"] = {{"literal11", k_lit}, {"top_eigenstate", k_top}};
    j["coherence"] = coherence;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  auto row = [&](const std::string& name, const std::string& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-26s", name.c_str());
    out << buf << value << '\n';
  };
  row("model", cls ? std::string(to_string(*cls)) : "unclassified");
  row("t", g10(t));
  row("energy", g10(energy));
  row("thermal energy", g10(proto.thermal_energy()));
  row("ergotropy (spectral)", g10(eb.spectral));
  row("ergotropy (trace)", g10(eb.trace_formula));
  row("ergotropy (closed form)", eb.closed_form ? g10(*eb.closed_form) : "n/a (" + closed_note + ")");
  row("ergotropy agreement", g10(eb.agreement));
  row("work", g10(w));
  row("average power", power ? g10(*power) : "n/a (t = 0)");
  row("efficiency", eta ? g10(eta->value) + (eta->exceeds_unity ? " (exceeds 1)" : "") : "n/a (zero ergotropy)");
  row("capacity (|11>)", g10(k_lit));
  row("capacity (top eigenstate)", g10(k_top));
  row("l1 coherence", g10(coherence));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-spin Heisenberg quantum battery simulator", "qbsim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for sweeps (default: QBSIM_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Reserved; all computations are deterministic");

  auto* presets = app.add_subcommand("presets", "List figure presets");

  std::string fig_id, fig_out = ".", fig_format = "csv+svg";
  auto* figure = app.add_subcommand("figure", "Reproduce a figure preset");
  figure->add_option("--id", fig_id, "Preset id, e.g. f2a")->required();
  figure->add_option("--out", fig_out, "Output directory");
  figure->add_option("--format", fig_format, "csv or csv+svg")->check(CLI::IsMember({"csv", "csv+svg"}));

  std::string sw_config, sw_out = ".", sw_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a config file");
  sweep->add_option("--config", sw_config, "Config file")->required();
  sweep->add_option("--out", sw_out, "Output directory");
  sweep->add_option("--format", sw_format, "csv or csv+svg")->check(CLI::IsMember({"csv", "csv+svg"}));

  MetricsFlags mf;
  auto* metrics = app.add_subcommand("metrics", "Evaluate every metric at one parameter point");
  metrics->add_option("--model", mf.model, "xx, xy, xxz, xyz, xxx or ising");
  metrics->add_option("--J", mf.j, "Exchange coupling J");
  metrics->add_option("--gamma", mf.gamma, "Anisotropy");
  metrics->add_option("--delta", mf.delta, "z coupling");
  metrics->add_option("--dz", mf.dz, "DM coupling Dz");
  metrics->add_option("--gz", mf.gz, "KSEA coupling Gz");
  metrics->add_option("--B", mf.b, "Zeeman field magnitude");
  metrics->add_option("--theta", mf.theta, "Field inhomogeneity angle in [0, pi/2]");
  metrics->add_option("--T", mf.temperature, "Temperature");
  metrics->add_option("--omega", mf.omega, "Charging strength");
  metrics->add_option("--omega-t", mf.omega_t, "Charging phase omega*t");
  metrics->add_option("--axis", mf.axis, "Charging axis x or y");
  metrics->add_option("--exchange", mf.exchange, "Exchange prefactor: unscaled or quarter");
  metrics->add_flag("--json", mf.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (presets->parsed()) {
      for (const auto& p : figure_presets()) out << p.id << "  " << p.description << '\n';
      return kExitOk;
    }
    if (figure->parsed()) return cmd_figure(fig_id, fig_out, fig_format, g, args, out, err);
    if (sweep->parsed()) return cmd_sweep(sw_config, sw_out, sw_format, g, args, out, err);
    if (metrics->parsed()) return cmd_metrics(mf, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qbsim::cli
