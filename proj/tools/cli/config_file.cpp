#include "config_file.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qbsim/error.hpp"

namespace qbsim::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Value {
  std::string text;
  bool quoted = false;
  int line = 0;
};

using Section = std::map<std::string, Value>;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Reader {
 public:
  explicit Reader(std::vector<std::string>& errors) : errors_(errors) {}

  std::optional<double> number(const Section& s, const std::string& sec, const std::string& key) {
    const auto it = s.find(key);
    if (it == s.end()) return std::nullopt;
    const Value& v = it->second;
    char* end = nullptr;
    const double x = std::strtod(v.text.c_str(), &end);
    if (v.quoted || v.text.empty() || *end != '\0') {
      errors_.push_back("[" + sec + "] " + key + " (line " + std::to_string(v.line) + "): expected a number, got '" +
                        v.text + "'");
      return std::nullopt;
    }
    return x;
  }

  std::optional<std::string> string(const Section& s, const std::string& sec, const std::string& key) {
    const auto it = s.find(key);
    if (it == s.end()) return std::nullopt;
    if (!it->second.quoted) {
      errors_.push_back("[" + sec + "] " + key + " (line " + std::to_string(it->second.line) +
                        "): expected a quoted string");
      return std::nullopt;
    }
    return it->second.text;
  }

  void invalid(const std::string& sec, const std::string& key, const std::string& why) {
    errors_.push_back("[" + sec + "] " + key + " " + why);
  }

  void missing(const std::string& sec, const std::string& key) {
    errors_.push_back("[" + sec + "] " + key + " is required");
  }

 private:
  std::vector<std::string>& errors_;
};

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"base",
       {"j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega", "axis", "exchange"}},
      {"axis1", {"name", "min", "max", "steps"}},
      {"axis2", {"name", "min", "max", "steps"}},
      {"metric", {"name", "t_min", "t_max", "omega_t"}},
  };
  return keys;
}

std::optional<Axis> read_axis(Reader& rd, const std::map<std::string, Section>& sections, const std::string& sec) {
  const auto it = sections.find(sec);
  if (it == sections.end()) return std::nullopt;
  const Section& s = it->second;
  Axis a;
  bool ok = true;
  if (!s.count("name")) {
    rd.missing(sec, "name");
    ok = false;
  } else if (const auto v = rd.string(s, sec, "name")) {
    a.name = *v;
  } else {
    ok = false;
  }
  for (const char* key : {"min", "max", "steps"}) {
    const auto v = rd.number(s, sec, key);
    if (!v) {
      if (!s.count(key)) rd.missing(sec, key);
      ok = false;
      continue;
    }
    if (std::string(key) == "min") a.min = *v;
    else if (std::string(key) == "max") a.max = *v;
    else if (*v != static_cast<double>(static_cast<int>(*v))) {
      rd.invalid(sec, key, "must be an integer");
      ok = false;
    } else {
      a.steps = static_cast<int>(*v);
    }
  }
  if (!ok) return Axis{};
  return a;
}

}  // namespace

SweepConfig parse_config(std::string_view text) {
  std::vector<std::string> errors;
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    bool in_quote = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') in_quote = !in_quote;
      if (line[k] == '#' && !in_quote) {
        line = line.substr(0, k);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back("line " + std::to_string(line_no) + ": malformed section header");
        continue;
      }
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!allowed_keys().count(current)) {
        errors.push_back("line " + std::to_string(line_no) + ": unknown section [" + current + "]");
      }
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    std::string_view val = trim(line.substr(eq + 1));
    if (current.empty()) {
      errors.push_back("line " + std::to_string(line_no) + ": key '" + key + "' outside any section");
      continue;
    }
    const auto allowed = allowed_keys().find(current);
    if (allowed != allowed_keys().end()) {
      const auto& ks = allowed->second;
      if (std::find(ks.begin(), ks.end(), key) == ks.end()) {
        errors.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [" + current + "]");
        continue;
      }
    }
    Value v;
    v.line = line_no;
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') {
      v.text = std::string(val.substr(1, val.size() - 2));
      v.quoted = true;
    } else {
      v.text = std::string(val);
    }
    if (sections[current].count(key)) {
      errors.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key + "' in [" + current + "]");
    }
    sections[current][key] = v;
  }

  Reader rd(errors);
  SweepConfig c;
  if (const auto it = sections.find("base"); it != sections.end()) {
    const Section& s = it->second;
    for (const char* key : {"j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega"}) {
      if (const auto v = rd.number(s, "base", key)) set_param(c.base, key, *v);
    }
    if (const auto v = rd.string(s, "base", "axis")) {
      if (const auto ax = parse_charge_axis(*v)) c.base.axis = *ax;
      else errors.push_back("[base] axis: expected \"x\" or \"y\", got '" + *v + "'");
    }
    if (const auto v = rd.string(s, "base", "exchange")) {
      if (const auto ex = parse_exchange_scale(*v)) c.base.exchange = *ex;
      else errors.push_back("[base] exchange: expected \"unscaled\" or \"quarter\", got '" + *v + "'");
    }
  }
  if (auto a = read_axis(rd, sections, "axis1")) c.axis1 = *a;
  else errors.push_back("[axis1] section is required");
  c.axis2 = read_axis(rd, sections, "axis2");
  if (const auto it = sections.find("metric"); it != sections.end()) {
    const Section& s = it->second;
    if (const auto v = rd.string(s, "metric", "name")) {
      if (const auto m = parse_metric(*v)) c.metric = *m;
      else errors.push_back("[metric] name: unknown metric '" + *v + "'");
    }
    if (const auto v = rd.number(s, "metric", "t_min")) c.t_min = *v;
    if (const auto v = rd.number(s, "metric", "t_max")) c.t_max = *v;
    if (const auto v = rd.number(s, "metric", "omega_t")) c.omega_t = *v;
  }

  if (errors.empty()) {
    try {
      c.validate();
    } catch (const Error& e) {
      errors.push_back(e.what());
    }
  }
  if (!errors.empty()) {
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
    throw Error(ErrorCode::InvalidConfig, msg);
  }
  return c;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidConfig, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const SweepConfig& c) {
  std::ostringstream os;
  os << "[base]\n";
  for (const char* key : {"j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega"}) {
    os << key << " = " << fmt(get_param(c.base, key)) << '\n';
  }
  os << "axis = \"" << to_string(c.base.axis) << "\"\n";
  os << "exchange = \"" << to_string(c.base.exchange) << "\"\n";
  auto axis = [&](const char* sec, const Axis& a) {
    os << "\n[" << sec << "]\nname = \"" << a.name << "\"\nmin = " << fmt(a.min) << "\nmax = " << fmt(a.max)
       << "\nsteps = " << a.steps << '\n';
  };
  axis("axis1", c.axis1);
  if (c.axis2) axis("axis2", *c.axis2);
  os << "\n[metric]\nname = \"" << to_string(c.metric) << "\"\nt_min = " << fmt(c.t_min)
     << "\nt_max = " << fmt(c.t_max) << "\nomega_t = " << fmt(c.omega_t) << '\n';
  return os.str();
}

}  // namespace qbsim::cli
