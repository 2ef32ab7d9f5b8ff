#pragma once

#include <string>
#include <string_view>

#include "qbsim/sweep.hpp"

namespace qbsim::cli {

// Sweep configuration in a small TOML subset:
//
//   [base]    j, gamma, delta, dz, gz, b, theta, temperature, omega,
//             axis = "x" | "y", exchange = "unscaled" | "quarter"
//   [axis1]   name, min, max, steps
//   [axis2]   name, min, max, steps          (optional)
//   [metric]  name, t_min, t_max, omega_t
//
// Every problem in the file is collected before failing; the thrown
// InvalidConfig message lists them all.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

// Inverse of parse_config. Numbers use %.17g, so a round trip is exact.
std::string serialize_config(const SweepConfig& c);

}  // namespace qbsim::cli
