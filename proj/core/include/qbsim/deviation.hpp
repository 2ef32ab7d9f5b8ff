#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qbsim/linalg.hpp"
#include "qbsim/spin_model.hpp"

namespace qbsim {

// One closed-form value that disagrees with its numeric counterpart.
struct DeviationRecord {
  std::string param_set;
  std::string element;  // rho11 ... rho44, Z, xi, K
  cplx closed;
  cplx numeric;
  double abs_diff = 0.0;
};

// Records whose |closed - numeric| exceeds `threshold`.
std::vector<DeviationRecord> gibbs_deviations(const ModelParams& p, const std::string& param_set,
                                              double threshold);
std::vector<DeviationRecord> ergotropy_deviations(const ModelParams& p, double t, const std::string& param_set,
                                                  double threshold);
std::vector<DeviationRecord> capacity_deviations(const ModelParams& p, const std::string& param_set,
                                                 double threshold);

// Header param_set,element,closed_re,closed_im,numeric_re,numeric_im,abs_diff
void write_deviation_csv(std::ostream& os, const std::vector<DeviationRecord>& records);

}  // namespace qbsim
