#include "qbsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbsim/error.hpp"
#include "qbsim/optimize.hpp"

namespace qbsim {

double ergotropy_spectral(const DensityMatrix& rho, const Spectrum& hs) {
  if (rho.dim() != hs.size()) throw Error(ErrorCode::DimensionMismatch, "ergotropy_spectral");
  const Spectrum rs = hermitian_eig(rho.matrix());
  const std::size_t n = hs.size();
  double xi = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t mi = n - 1 - m;  // populations descending
    const double r = rs.values[mi];
    for (std::size_t k = 0; k < n; ++k) {
      cplx overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(hs.vectors(i, k)) * rs.vectors(i, mi);
      xi += r * hs.values[k] * (std::norm(overlap) - (k == m ? 1.0 : 0.0));
    }
  }
  return xi;
}

double ergotropy_spectral(const DensityMatrix& rho, const ComplexMatrix& h) {
  return ergotropy_spectral(rho, hermitian_eig(h));
}

double ergotropy_trace(const DensityMatrix& rho, const DensityMatrix& rho_th, const ComplexMatrix& h) {
  return work(rho, rho_th, h);
}

ClosedFormAux closed_form_aux(const ModelParams& p) {
  const double t = p.temperature;
  const double s2 = std::sin(2.0 * p.theta);
  ClosedFormAux x;
  x.a = 4.0 * p.dz * p.dz - s2 + 4.0 * p.j * p.j + 1.0;
  x.b = 1.0 + 4.0 * p.gz * p.gz + 4.0 * p.j * p.j * p.gamma * p.gamma + s2;
  x.c = -p.delta + p.gamma * p.j + p.j;
  const double ra = std::sqrt(std::max(0.0, x.a)), rb = std::sqrt(std::max(0.0, x.b));
  x.d = std::exp(rb / t);
  x.g = std::exp(2.0 * p.delta / t);
  x.h = std::exp((2.0 * p.delta + rb) / t);
  x.eps_a = std::cosh(ra / t);
  x.eps_b = std::cosh(rb / t);
  x.f_a = std::sinh(ra / t);
  x.f_b = std::sinh(rb / t);
  x.s_param = std::sin(p.theta) + std::cos(p.theta);
  return x;
}

namespace {

void require_closed_regime(const ModelParams& p, bool need_y_axis) {
  if (need_y_axis && p.axis != ChargeAxis::Y) {
    throw Error(ErrorCode::RegimeError, "closed form holds for sigma_y charging only");
  }
  if (p.b != 1.0) throw Error(ErrorCode::RegimeError, "closed form assumes B = 1");
  if (p.exchange != ExchangeScale::Unscaled) {
    throw Error(ErrorCode::RegimeError, "closed form assumes the unscaled exchange term");
  }
  const ClosedFormAux x = closed_form_aux(p);
  if (!(x.a > 0.0) || !(x.b > 0.0)) throw Error(ErrorCode::RegimeError, "closed form needs a > 0 and b > 0");
}

// Products of the closed-form exponentials, each divided by e^L with L the
// largest exponent that occurs, so nothing overflows.
struct ScaledTerms {
  double h_eps_a, h_f_a, dg_eps_a, dg_f_a, d2, d_eps_b, d_f_b, h, dg, one;
};

ScaledTerms scaled_terms(const ModelParams& p, double ra, double rb) {
  const double t = p.temperature;
  const double ea = ra / t, eb = rb / t, e2d = 2.0 * p.delta / t;
  const double eh = (2.0 * p.delta + rb) / t;
  const double edg = eb + e2d;
  const double l = std::max({2.0 * eb, eh + ea, edg + ea, 0.0});
  auto ex = [l](double y) { return std::exp(y - l); };
  ScaledTerms s;
  s.h_eps_a = 0.5 * (ex(eh + ea) + ex(eh - ea));
  s.h_f_a = 0.5 * (ex(eh + ea) - ex(eh - ea));
  s.dg_eps_a = 0.5 * (ex(edg + ea) + ex(edg - ea));
  s.dg_f_a = 0.5 * (ex(edg + ea) - ex(edg - ea));
  s.d2 = ex(2.0 * eb);
  s.d_eps_b = 0.5 * (ex(2.0 * eb) + ex(0.0));
  s.d_f_b = 0.5 * (ex(2.0 * eb) - ex(0.0));
  s.h = ex(eh);
  s.dg = ex(edg);
  s.one = ex(0.0);
  return s;
}

}  // namespace

double ergotropy_closed_form(const ModelParams& p, double t) {
  require_closed_regime(p, true);
  const ClosedFormAux x = closed_form_aux(p);
  const double ra = std::sqrt(x.a), rb = std::sqrt(x.b), rab = std::sqrt(x.a * x.b);
  const ScaledTerms s = scaled_terms(p, ra, rb);
  const double j = p.j, gm = p.gamma, c = x.c;
  const double wt = p.omega * t;
  const double sn = std::sin(wt), c2 = std::cos(2.0 * wt);

  const double pre = 2.0 * sn * sn / (rab * (2.0 * s.h_eps_a + s.d2 + s.one));
  const double t1 = c * (-2.0 * rab * s.h_eps_a +
                         ra * c2 * (-2.0 * rb * s.dg_eps_a + rb * (s.d2 + s.one) + 2.0 * gm * (s.d2 - s.one) * j) +
                         2.0 * rab * s.d_eps_b);
  const double t2 = 2.0 * rb *
                    (s.h_f_a * (x.a + 2.0 * j * (c - 2.0 * j)) + 2.0 * c * s.dg_f_a * j * c2 +
                     std::sin(2.0 * p.theta) * (s.h_f_a - s.dg_f_a));
  const double t3 = 2.0 * ra * s.d_f_b * (x.b + 2.0 * gm * j * (c - 2.0 * gm * j));
  return pre * (t1 + t2 + t3);
}

double ergotropy_closed_form_naive(const ModelParams& p, double t) {
  require_closed_regime(p, true);
  const ClosedFormAux x = closed_form_aux(p);
  const double ra = std::sqrt(x.a), rb = std::sqrt(x.b), rab = std::sqrt(x.a * x.b);
  const double j = p.j, gm = p.gamma, c = x.c;
  const double wt = p.omega * t;
  const double sn = std::sin(wt), c2 = std::cos(2.0 * wt);
  const double d2 = x.d * x.d;
  const double pre = 2.0 * sn * sn / (rab * (2.0 * x.h * x.eps_a + d2 + 1.0));
  const double t1 = c * (-2.0 * rab * x.h * x.eps_a +
                         ra * c2 * (-2.0 * rb * x.d * x.g * x.eps_a + rb * (d2 + 1.0) + 2.0 * gm * (d2 - 1.0) * j) +
                         2.0 * rab * x.d * x.eps_b);
  const double t2 = 2.0 * rb * x.f_a *
                    (x.h * (x.a + 2.0 * j * (c - 2.0 * j)) + 2.0 * c * x.d * x.g * j * c2 +
                     std::sin(2.0 * p.theta) * (x.h - x.d * x.g));
  const double t3 = 2.0 * ra * x.d * x.f_b * (x.b + 2.0 * gm * j * (c - 2.0 * gm * j));
  return pre * (t1 + t2 + t3);
}

ErgotropyBreakdown ergotropy_breakdown(const ModelParams& p, double t) {
  const ChargingProtocol proto(p);
  const DensityMatrix rho = proto.charged_state(t);
  ErgotropyBreakdown out;
  out.spectral = ergotropy_spectral(rho, proto.spectrum());
  out.trace_formula = ergotropy_trace(rho, proto.thermal(), proto.hamiltonian());
  out.agreement = std::abs(out.spectral - out.trace_formula);
  try {
    out.closed_form = ergotropy_closed_form(p, t);
    out.agreement = std::max({out.agreement, std::abs(*out.closed_form - out.spectral),
                              std::abs(*out.closed_form - out.trace_formula)});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RegimeError) throw;
  }
  return out;
}

double work(const DensityMatrix& rho, const DensityMatrix& reference, const ComplexMatrix& h) {
  if (rho.dim() != reference.dim() || rho.dim() != h.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "work: operand sizes differ");
  }
  return trace_product(rho.matrix() - reference.matrix(), h).real();
}

double average_power(double w, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::NotDefined, "average power needs t > 0");
  return w / t;
}

PowerPeak peak_average_power(const ModelParams& p, std::span<const double> t_grid) {
  if (t_grid.empty()) throw Error(ErrorCode::InvalidParams, "empty time grid");
  const ChargingProtocol proto(p);
  auto power = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    return work(proto.charged_state(t), proto.thermal(), proto.hamiltonian()) / t;
  };
  std::size_t best = 0;
  double best_p = power(t_grid[0]);
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double v = power(t_grid[k]);
    if (v > best_p) {
      best_p = v;
      best = k;
    }
  }
  PowerPeak out{t_grid[best], best_p};
  if (t_grid.size() >= 2) {
    const double lo = t_grid[best == 0 ? 0 : best - 1];
    const double hi = t_grid[std::min(best + 1, t_grid.size() - 1)];
    const Maximum m = maximize_scan_golden(power, lo, hi, 3, tol::kGoldenSection);
    if (m.value > out.power) out = {m.x, m.value};
  }
  return out;
}

Efficiency efficiency(double w, double xi) {
  if (std::abs(xi) < tol::kEfficiencyMinErgotropy) {
    throw Error(ErrorCode::NotDefined, "efficiency undefined for zero ergotropy");
  }
  const double v = w / xi;
  return {v, v > 1.0 + tol::kEfficiencyExcess};
}

std::size_t literal11_index(BasisLabeling labeling) { return labeling == BasisLabeling::OneIsUp ? 0 : 3; }

double capacity_numeric(const ComplexMatrix& h, const DensityMatrix& rho_down, CapacityMode mode,
                        BasisLabeling labeling) {
  if (rho_down.dim() != h.dim()) throw Error(ErrorCode::DimensionMismatch, "capacity_numeric");
  double top = 0.0;
  if (mode == CapacityMode::Literal11) {
    if (h.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "Literal11 capacity needs a two-spin operator");
    const std::size_t k = literal11_index(labeling);
    top = h(k, k).real();
  } else {
    top = hermitian_eig(h).values.back();
  }
  return top - trace_product(h, rho_down.matrix()).real();
}

double capacity_closed_form(const ModelParams& p) {
  require_closed_regime(p, false);
  const ClosedFormAux x = closed_form_aux(p);
  const double ra = std::sqrt(x.a), rb = std::sqrt(x.b), sp = x.s_param;
  const ScaledTerms s = scaled_terms(p, ra, rb);
  const double num = 2.0 * ra * s.h_f_a + rb * (s.d2 - s.one) + s.d2 * sp +
                     2.0 * s.h_eps_a * (2.0 * p.delta + sp) + sp * s.one;
  return num / (s.d2 + 2.0 * s.h_eps_a + s.one);
}

double capacity_closed_form_naive(const ModelParams& p) {
  require_closed_regime(p, false);
  const ClosedFormAux x = closed_form_aux(p);
  const double ra = std::sqrt(x.a), rb = std::sqrt(x.b), sp = x.s_param;
  const double d2 = x.d * x.d;
  const double num = 2.0 * ra * x.f_a * x.h + rb * (d2 - 1.0) + d2 * sp + 2.0 * x.h * x.eps_a * (2.0 * p.delta + sp) + sp;
  return num / (d2 + 2.0 * x.h * x.eps_a + 1.0);
}

double l1_coherence(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

}  // namespace qbsim
