#pragma once

#include <optional>
#include <span>

#include "qbsim/charger.hpp"
#include "qbsim/constants.hpp"
#include "qbsim/linalg.hpp"
#include "qbsim/spin_model.hpp"
#include "qbsim/thermal.hpp"

namespace qbsim {

// Ergotropy as sum_{m,n} r_m nu_n (|<psi_n|r_m>|^2 - delta_mn), with the state
// populations r_m descending and the energies nu_n ascending.
double ergotropy_spectral(const DensityMatrix& rho, const ComplexMatrix& h);
double ergotropy_spectral(const DensityMatrix& rho, const Spectrum& h_spectrum);

// Re Tr[(rho - rho_th) H]; valid when rho is unitarily reachable from rho_th.
double ergotropy_trace(const DensityMatrix& rho, const DensityMatrix& rho_th, const ComplexMatrix& h);

// Auxiliaries of the closed-form ergotropy and capacity, evaluated literally.
// The exponentials overflow to +inf at low temperature.
struct ClosedFormAux {
  double a = 0, b = 0, c = 0, d = 0, g = 0, h = 0;
  double eps_a = 0, eps_b = 0, f_a = 0, f_b = 0;
  double s_param = 0;
};

ClosedFormAux closed_form_aux(const ModelParams& p);

// Closed-form ergotropy for sigma_y charging of the thermal state. Requires
// axis Y, B = 1 and the unscaled exchange term (RegimeError otherwise).
// Evaluated with all exponentials rescaled by their largest exponent.
double ergotropy_closed_form(const ModelParams& p, double t);
// The same expression evaluated term by term from ClosedFormAux. Returns NaN
// or inf once the auxiliaries overflow; kept for diagnostics.
double ergotropy_closed_form_naive(const ModelParams& p, double t);

struct ErgotropyBreakdown {
  double spectral = 0.0;
  double trace_formula = 0.0;
  std::optional<double> closed_form;
  double agreement = 0.0;  // max pairwise |difference|
};

ErgotropyBreakdown ergotropy_breakdown(const ModelParams& p, double t);

// Re Tr[(rho - reference) H]
double work(const DensityMatrix& rho, const DensityMatrix& reference, const ComplexMatrix& h);

// w / t; NotDefined for t <= 0
double average_power(double w, double t);

struct PowerPeak {
  double t = 0.0;
  double power = 0.0;
};

// Maximizes W(t)/t over the grid, refining around the best grid point.
PowerPeak peak_average_power(const ModelParams& p, std::span<const double> t_grid);

struct Efficiency {
  double value = 0.0;
  bool exceeds_unity = false;
};

// w / xi; NotDefined when |xi| is below tol::kEfficiencyMinErgotropy.
Efficiency efficiency(double w, double xi);

enum class CapacityMode {
  Literal11,      // rho_up = |11><11| under the given labeling
  TopEigenstate,  // rho_up = projector on the highest eigenvector of H
};

// Basis index of the product state |11> under a labeling.
std::size_t literal11_index(BasisLabeling labeling);

// Tr[H rho_up] - Tr[H rho_down]
double capacity_numeric(const ComplexMatrix& h, const DensityMatrix& rho_down, CapacityMode mode,
                        BasisLabeling labeling = kPinnedLabeling);

// Requires B = 1 and the unscaled exchange term (RegimeError otherwise).
double capacity_closed_form(const ModelParams& p);
double capacity_closed_form_naive(const ModelParams& p);

// sum_{i != j} |rho_ij|
double l1_coherence(const DensityMatrix& rho);

}  // namespace qbsim
