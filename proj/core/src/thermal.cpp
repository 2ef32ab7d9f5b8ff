#include "qbsim/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qbsim/constants.hpp"
#include "qbsim/error.hpp"

namespace qbsim {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  const double defect = hermiticity_defect(m_);
  if (defect > tol::kDensityHermitian) {
    throw Error(ErrorCode::InvalidState, "not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const cplx tr = m_.trace();
  if (std::abs(tr - 1.0) > tol::kDensityTrace) {
    throw Error(ErrorCode::InvalidState, "trace is " + std::to_string(tr.real()) + ", not 1");
  }
  const double min_eig = hermitian_eig(m_).values.front();
  if (min_eig < tol::kDensityMinEigenvalue) {
    throw Error(ErrorCode::InvalidState, "negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  DensityMatrix d;
  d.m_ = std::move(m);
  return d;
}

namespace {

void require_unit_field(const ModelParams& p) {
  if (p.b != 1.0) {
    throw Error(ErrorCode::PreconditionB, "closed form assumes B = 1, got " + std::to_string(p.b));
  }
}

// Exponentials are evaluated relative to a common offset `shift` so every
// factor stays representable; the offset cancels in ratios.
struct Scaled {
  double t;
  double shift;

  double exp(double y) const { return std::exp(y - shift); }
  // e^{y} cosh(x)
  double ecosh(double y, double x) const { return 0.5 * (exp(y + x) + exp(y - x)); }
  // e^{y} sinh(x) / r, where x = r / t
  double esinh_over(double y, double x, double r) const {
    if (std::abs(x) < 1e-5) return exp(y) * (1.0 / t) * (1.0 + x * x / 6.0);
    return 0.5 * (exp(y + x) - exp(y - x)) / r;
  }
};

struct ClosedGibbs {
  double r, e;
  Scaled sc;
  double z_scaled;
};

ClosedGibbs closed_gibbs_setup(const ModelParams& p) {
  const double s2 = std::sin(2.0 * p.theta);
  const double r = std::sqrt(std::max(0.0, 4.0 * p.dz * p.dz - s2 + 4.0 * p.j * p.j + 1.0));
  const double e =
      std::sqrt(std::max(0.0, 1.0 + 4.0 * p.gz * p.gz + 4.0 * p.j * p.j * p.gamma * p.gamma + s2));
  const double t = p.temperature;
  const double y = p.delta / t;
  Scaled sc{t, std::max(y + r / t, e / t - y)};
  const double z = 2.0 * (sc.ecosh(y, r / t) + sc.ecosh(-y, e / t));
  return {r, e, sc, z};
}

}  // namespace

ThermalAuxiliaries thermal_auxiliaries(const ModelParams& p) {
  require_unit_field(p);
  const ClosedGibbs g = closed_gibbs_setup(p);
  ThermalAuxiliaries aux;
  aux.r_param = g.r;
  aux.e_param = g.e;
  aux.phi = {p.dz, p.j};
  aux.chi = {p.gz, p.gamma * p.j};
  aux.log_z = g.sc.shift + std::log(g.z_scaled);
  aux.z = std::exp(aux.log_z);
  return aux;
}

DensityMatrix gibbs_state(const Spectrum& s, double temperature) {
  if (!(temperature > 0.0)) throw Error(ErrorCode::InvalidParams, "temperature must be > 0");
  const double nu0 = s.values.front();
  std::vector<cplx> w(s.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double x = std::exp(-(s.values[k] - nu0) / temperature);
    w[k] = x;
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return DensityMatrix::unchecked(reconstruct(s, w));
}

DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature) {
  return gibbs_state(hermitian_eig(h), temperature);
}

ComplexMatrix gibbs_closed_form(const ModelParams& p, GibbsElements form) {
  require_unit_field(p);
  using namespace std::complex_literals;
  const ClosedGibbs g = closed_gibbs_setup(p);
  const Scaled& sc = g.sc;
  const double t = p.temperature, y = p.delta / t, rt = g.r / t, et = g.e / t;
  const double sq2 = std::numbers::sqrt2;
  const double s_plus = std::sin(p.theta + std::numbers::pi / 4);
  const double s_minus = std::sin(p.theta - std::numbers::pi / 4);
  const double c_minus = std::cos(p.theta - std::numbers::pi / 4);

  const double up = sc.exp(et - y), down = sc.exp(-y - et);
  const double rho11 = (up * (g.e - sq2 * s_plus) + down * (g.e + sq2 * s_plus)) / (2.0 * g.e);
  const double rho44 = (up * (g.e + sq2 * s_plus) - down * (-g.e + sq2 * s_plus)) / (2.0 * g.e);
  const double sh_r = sc.esinh_over(y, rt, g.r);
  const double ch_r = sc.ecosh(y, rt);
  const double rho22 = sq2 * sh_r * s_minus + ch_r;
  const double rho33 = form == GibbsElements::AsPrinted ? sq2 * sh_r * c_minus + ch_r
                                                        : -sq2 * sh_r * s_minus + ch_r;
  const cplx chi{p.gz, p.gamma * p.j};
  const cplx phi{p.dz, p.j};
  const cplx rho14 = 2i * chi * sc.esinh_over(-y, et, g.e);
  const cplx rho23 = -2i * std::conj(phi) * sh_r;

  ComplexMatrix m(4);
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  m *= 1.0 / g.z_scaled;
  return m;
}

double log_partition_function(const ComplexMatrix& h, double temperature) {
  if (!(temperature > 0.0)) throw Error(ErrorCode::InvalidParams, "temperature must be > 0");
  const Spectrum s = hermitian_eig(h);
  const double nu0 = s.values.front();
  double sum = 0.0;
  for (double nu : s.values) sum += std::exp(-(nu - nu0) / temperature);
  return -nu0 / temperature + std::log(sum);
}

double partition_function(const ComplexMatrix& h, double temperature) {
  return std::exp(log_partition_function(h, temperature));
}

double partition_function_closed_form(const ModelParams& p) { return thermal_auxiliaries(p).z; }

bool is_passive(const DensityMatrix& rho, const Spectrum& s) {
  if (rho.dim() != s.size()) throw Error(ErrorCode::DimensionMismatch, "is_passive");
  const ComplexMatrix in_basis = s.vectors.adjoint() * rho.matrix() * s.vectors;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::abs(in_basis(i, j)) > tol::kPassiveOffDiagonal) return false;
  const double tie = tol::kEigenTie * (1.0 + std::abs(s.values.back()) + std::abs(s.values.front()));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (s.values[k + 1] - s.values[k] <= tie) continue;
    if (in_basis(k + 1, k + 1).real() > in_basis(k, k).real() + tol::kPassivePopulation) return false;
  }
  return true;
}

bool is_passive(const DensityMatrix& rho, const ComplexMatrix& h) {
  return is_passive(rho, hermitian_eig(h));
}

}  // namespace qbsim
