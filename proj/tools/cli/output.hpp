#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qbsim/sweep.hpp"

namespace qbsim::cli {

// `# key=value` block with the full configuration, then axis1,axis2,value
// rows in %.16e. Nothing run-dependent is written, so identical configs give
// byte-identical files.
void write_csv(std::ostream& os, const SweepResult& r, const std::vector<std::string>& extra_comments = {});

// Heatmap for 2-D results, polyline for 1-D.
std::string render_svg(const SweepResult& r, const std::string& title);

}  // namespace qbsim::cli
