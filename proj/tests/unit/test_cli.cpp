#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/config_file.hpp"
#include "helpers.hpp"
#include "qbsim/error.hpp"

using namespace qbsim;
using namespace qbsim::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("qbsim_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  return rows;
}

const char* kMinimal = R"([base]
gamma = 0.5
temperature = 0.1

[axis1]
name = "omega_t"
min = 0
max = 3.141592653589793
steps = 11

[metric]
name = "ergotropy"
)";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config round trip is exact") {
    const SweepConfig c = figure_preset("f11b").config;
    const std::string text = cli::serialize_config(c);
    const SweepConfig back = cli::parse_config(text);
    CHECK(cli::serialize_config(back) == text);
    CHECK(back.base.theta == c.base.theta);
    CHECK(back.axis2->steps == c.axis2->steps);
    CHECK(back.metric == c.metric);
  }

  TEST_CASE("config errors are collected") {
    try {
      cli::parse_config("[base]\nfoo = 1\ngamma = abc\n[axis1]\nname = \"theta\"\nmin = 0\nmax = 1\nsteps = 2.5\n");
      FAIL("expected InvalidConfig");
    } catch (const Error& e) {
      const std::string msg = e.what();
      CHECK(e.code() == ErrorCode::InvalidConfig);
      CHECK(msg.find("foo") != std::string::npos);
      CHECK(msg.find("gamma") != std::string::npos);
      CHECK(msg.find("steps") != std::string::npos);
    }
  }

  TEST_CASE("minimal sweep writes one row per step") {
    const fs::path dir = scratch_dir("minimal");
    spit(dir / "mini.toml", kMinimal);
    const Run r = run_cli({"--threads", "2", "sweep", "--config", (dir / "mini.toml").string(), "--out", dir.string()});
    REQUIRE(r.code == cli::kExitOk);
    const std::string csv = slurp(dir / "mini.csv");
    const auto rows = data_rows(csv);
    REQUIRE(rows.size() == 12u);
    CHECK(rows[0] == "axis1,axis2,value");
    CHECK(rows[1].rfind("0.0000000000000000e+00,,", 0) == 0);
    CHECK(std::abs(std::stod(rows[1].substr(24))) <= 1e-12);
    CHECK(rows[11].rfind("3.1415926535897931e+00,,", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(fs::exists(dir / "mini.manifest.json"));
  }

  TEST_CASE("unknown config key exits 2 and names the key") {
    const fs::path dir = scratch_dir("unknown_key");
    spit(dir / "bad.toml", std::string(kMinimal) + "bogus_key = 3\n");
    const Run r = run_cli({"sweep", "--config", (dir / "bad.toml").string(), "--out", dir.string()});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("bogus_key") != std::string::npos);
  }

  TEST_CASE("missing config file is an I/O failure") {
    const Run r = run_cli({"sweep", "--config", "/nonexistent/qbsim.toml"});
    CHECK(r.code == cli::kExitIo);
  }

  TEST_CASE("unwritable output directory is an I/O failure") {
    const fs::path dir = scratch_dir("io");
    spit(dir / "file", "x");
    const Run r = run_cli({"figure", "--id", "f10b", "--format", "csv", "--out", (dir / "file" / "sub").string()});
    CHECK(r.code == cli::kExitIo);
  }

  TEST_CASE("unknown figure exits 2") {
    const Run r = run_cli({"figure", "--id", "f0x"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("f0x") != std::string::npos);
  }

  TEST_CASE("config replicating a preset matches the figure bit for bit") {
    const fs::path dir = scratch_dir("preset_equiv");
    const Run fig = run_cli({"figure", "--id", "f10b", "--format", "csv", "--out", dir.string()});
    REQUIRE(fig.code == cli::kExitOk);
    CHECK(fig.out.find("threshold_dz") != std::string::npos);
    spit(dir / "replica.toml", cli::serialize_config(figure_preset("f10b").config));
    const Run sw = run_cli({"sweep", "--config", (dir / "replica.toml").string(), "--out", dir.string()});
    REQUIRE(sw.code == cli::kExitOk);
    const auto a = data_rows(slurp(dir / "f10b.csv"));
    CHECK(a.size() == 401u);
    CHECK(a == data_rows(slurp(dir / "replica.csv")));
  }

  TEST_CASE("manifest config reproduces the CSV") {
    const fs::path dir = scratch_dir("manifest");
    spit(dir / "first.toml", kMinimal);
    REQUIRE(run_cli({"sweep", "--config", (dir / "first.toml").string(), "--out", dir.string()}).code == 0);
    const auto manifest = nlohmann::json::parse(slurp(dir / "first.manifest.json"));
    for (const char* key : {"command", "tool_version", "timestamp", "wall_time_seconds", "config", "outputs"})
      CHECK(manifest.contains(key));
    spit(dir / "second.toml", manifest["config"].get<std::string>());
    REQUIRE(run_cli({"--threads", "3", "sweep", "--config", (dir / "second.toml").string(), "--out", dir.string()})
                .code == 0);
    CHECK(slurp(dir / "first.csv") == slurp(dir / "second.csv"));
  }

  TEST_CASE("svg output") {
    const fs::path dir = scratch_dir("svg");
    spit(dir / "plot.toml", kMinimal);
    REQUIRE(run_cli({"sweep", "--config", (dir / "plot.toml").string(), "--out", dir.string(), "--format", "csv+svg"})
                .code == 0);
    const std::string svg = slurp(dir / "plot.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
  }

  TEST_CASE("metrics validation names the flag") {
    const Run r = run_cli({"metrics", "--T", "0"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("--T") != std::string::npos);
    CHECK(r.err.find("temperature must be > 0") != std::string::npos);
    CHECK(run_cli({"metrics", "--theta", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"metrics", "--model", "heisenberg"}).code == cli::kExitUsage);
    CHECK(run_cli({"metrics", "--axis", "z"}).code == cli::kExitUsage);
  }

  TEST_CASE("metrics json") {
    const Run r = run_cli({"metrics", "--model", "xx", "--J", "1", "--T", "0.1", "--theta", "0", "--omega-t", "1.5708",
                           "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["model"] == "XX");
    CHECK(j["ergotropy"]["spectral"].get<double>() == doctest::Approx(0.894431927).epsilon(1e-6));
    CHECK(j["ergotropy"]["agreement"].get<double>() < 1e-9);
    CHECK(j["efficiency"].get<double>() == doctest::Approx(1.0));
    CHECK(j["coherence"].get<double>() <= 3.0);
  }

  TEST_CASE("metrics at zero charging time") {
    const Run r = run_cli({"metrics", "--model", "xyz", "--omega-t", "0", "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["ergotropy"]["spectral"].get<double>()) <= 1e-12);
    CHECK(j["power"].is_null());
    CHECK(j["efficiency"].is_null());
  }

  TEST_CASE("presets lists every id") {
    const Run r = run_cli({"presets"});
    CHECK(r.code == cli::kExitOk);
    for (const auto& p : figure_presets()) CHECK(r.out.find(p.id) != std::string::npos);
  }
}
