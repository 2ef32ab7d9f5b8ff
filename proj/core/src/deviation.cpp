#include "qbsim/deviation.hpp"

#include <cmath>
#include <cstdio>

#include "qbsim/charger.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/thermal.hpp"

namespace qbsim {

namespace {

void add_if(std::vector<DeviationRecord>& out, const std::string& set, const std::string& element, cplx closed,
            cplx numeric, double threshold) {
  const double diff = std::abs(closed - numeric);
  if (!(diff <= threshold)) out.push_back({set, element, closed, numeric, diff});
}

}  // namespace

std::vector<DeviationRecord> gibbs_deviations(const ModelParams& p, const std::string& param_set,
                                              double threshold) {
  const ComplexMatrix closed = gibbs_closed_form(p);
  const DensityMatrix numeric = gibbs_state(build_qb_hamiltonian(p), p.temperature);
  std::vector<DeviationRecord> out;
  static constexpr std::size_t kRows[] = {0, 1, 2, 3, 0, 1};
  static constexpr std::size_t kCols[] = {0, 1, 2, 3, 3, 2};
  for (std::size_t k = 0; k < 6; ++k) {
    const std::size_t i = kRows[k], j = kCols[k];
    const std::string name = "rho" + std::to_string(i + 1) + std::to_string(j + 1);
    add_if(out, param_set, name, closed(i, j), numeric(i, j), threshold);
  }
  const ComplexMatrix h = build_qb_hamiltonian(p);
  const double log_zn = log_partition_function(h, p.temperature);
  const double log_zc = thermal_auxiliaries(p).log_z;
  // compared on the log scale so low-temperature values stay finite
  add_if(out, param_set, "logZ", log_zc, log_zn, threshold);
  return out;
}

std::vector<DeviationRecord> ergotropy_deviations(const ModelParams& p, double t, const std::string& param_set,
                                                  double threshold) {
  const ChargingProtocol proto(p);
  const double numeric = ergotropy_trace(proto.charged_state(t), proto.thermal(), proto.hamiltonian());
  std::vector<DeviationRecord> out;
  add_if(out, param_set, "xi", ergotropy_closed_form(p, t), numeric, threshold);
  return out;
}

std::vector<DeviationRecord> capacity_deviations(const ModelParams& p, const std::string& param_set,
                                                 double threshold) {
  const ComplexMatrix h = build_qb_hamiltonian(p);
  const double numeric = capacity_numeric(h, gibbs_state(h, p.temperature), CapacityMode::Literal11);
  std::vector<DeviationRecord> out;
  add_if(out, param_set, "K", capacity_closed_form(p), numeric, threshold);
  return out;
}

void write_deviation_csv(std::ostream& os, const std::vector<DeviationRecord>& records) {
  os << "param_set,element,closed_re,closed_im,numeric_re,numeric_im,abs_diff\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e,%.16e,%.16e", r.closed.real(), r.closed.imag(),
                  r.numeric.real(), r.numeric.imag(), r.abs_diff);
    os << r.param_set << ',' << r.element << ',' << buf << '\n';
  }
}

}  // namespace qbsim
