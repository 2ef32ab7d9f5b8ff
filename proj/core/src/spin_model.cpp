#include "qbsim/spin_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qbsim/constants.hpp"
#include "qbsim/error.hpp"

namespace qbsim {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParams, std::string(name) + " must be finite");
}

bool near(double a, double b) { return std::abs(a - b) <= tol::kClassify; }

}  // namespace

void ModelParams::validate() const {
  require_finite(j, "j");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  require_finite(dz, "dz");
  require_finite(gz, "gz");
  require_finite(b, "b");
  require_finite(theta, "theta");
  require_finite(temperature, "temperature");
  require_finite(omega, "omega");
  if (!(temperature > 0.0)) throw Error(ErrorCode::InvalidParams, "temperature must be > 0");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidParams, "omega must be > 0");
  if (theta < -tol::kClassify || theta > std::numbers::pi / 2 + tol::kClassify) {
    throw Error(ErrorCode::InvalidParams, "theta must lie in [0, pi/2]");
  }
}

std::string_view to_string(ChargeAxis axis) { return axis == ChargeAxis::X ? "x" : "y"; }

std::string_view to_string(ExchangeScale scale) {
  return scale == ExchangeScale::Unscaled ? "unscaled" : "quarter";
}

std::string_view to_string(ModelClass cls) {
  switch (cls) {
    case ModelClass::Ising: return "Ising";
    case ModelClass::XX: return "XX";
    case ModelClass::XXZ: return "XXZ";
    case ModelClass::XXX: return "XXX";
    case ModelClass::XY: return "XY";
    case ModelClass::XYZ: return "XYZ";
  }
  return "?";
}

std::optional<ChargeAxis> parse_charge_axis(std::string_view s) {
  if (s == "x" || s == "X") return ChargeAxis::X;
  if (s == "y" || s == "Y") return ChargeAxis::Y;
  return std::nullopt;
}

std::optional<ExchangeScale> parse_exchange_scale(std::string_view s) {
  if (s == "unscaled") return ExchangeScale::Unscaled;
  if (s == "quarter") return ExchangeScale::QuarterAsPrinted;
  return std::nullopt;
}

ComplexMatrix pauli(PauliAxis k) {
  using namespace std::complex_literals;
  switch (k) {
    case PauliAxis::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case PauliAxis::Y: return {{0.0, -1i}, {1i, 0.0}};
    case PauliAxis::Z: return {{1.0, 0.0}, {0.0, -1.0}};
  }
  return ComplexMatrix(2);
}

ComplexMatrix embed_site(const ComplexMatrix& op, std::size_t site, std::size_t n) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  const ComplexMatrix id = ComplexMatrix::identity(op.dim());
  for (std::size_t k = 0; k < n; ++k) out = kron(out, k == site ? op : id);
  return out;
}

double exchange_prefactor(ExchangeScale scale) {
  return scale == ExchangeScale::Unscaled ? 1.0 : 0.25;
}

ComplexMatrix build_chain_hamiltonian(const ModelParams& p, std::size_t n, const ChainOptions& opts) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "chain needs at least 2 sites");
  if (n > static_cast<std::size_t>(tol::kMaxChainSites)) {
    throw Error(ErrorCode::DimensionGuard,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(tol::kMaxChainSites));
  }
  std::vector<double> fields = opts.site_fields;
  if (fields.empty()) {
    fields.resize(n);
    // site index k is 0-based, so k even is an odd 1-based site
    for (std::size_t k = 0; k < n; ++k) fields[k] = p.b * (k % 2 == 0 ? std::cos(p.theta) : std::sin(p.theta));
  } else if (fields.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "site_fields must have one entry per site");
  }

  const ComplexMatrix sx = pauli(PauliAxis::X), sy = pauli(PauliAxis::Y), sz = pauli(PauliAxis::Z);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix h(dim);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto x1 = embed_site(sx, k, n), x2 = embed_site(sx, k + 1, n);
    const auto y1 = embed_site(sy, k, n), y2 = embed_site(sy, k + 1, n);
    const auto z1 = embed_site(sz, k, n), z2 = embed_site(sz, k + 1, n);
    const ComplexMatrix xy = x1 * y2, yx = y1 * x2;
    h += (opts.exchange_prefactor * p.j) * ((1.0 + p.gamma) * (x1 * x2) + (1.0 - p.gamma) * (y1 * y2));
    h += (opts.coupling_prefactor * p.delta) * (z1 * z2);
    h += (opts.coupling_prefactor * p.dz) * (xy - yx);
    h += (opts.coupling_prefactor * p.gz) * (xy + yx);
    h += fields[k] * z1 + fields[k + 1] * z2;
  }
  return h;
}

ComplexMatrix build_qb_hamiltonian(const ModelParams& p) {
  const ComplexMatrix sx = pauli(PauliAxis::X), sy = pauli(PauliAxis::Y), sz = pauli(PauliAxis::Z);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix xy = kron(sx, sy), yx = kron(sy, sx);
  ComplexMatrix h = (exchange_prefactor(p.exchange) * p.j) *
                    ((1.0 + p.gamma) * kron(sx, sx) + (1.0 - p.gamma) * kron(sy, sy));
  h += p.delta * kron(sz, sz);
  h += (p.b * std::cos(p.theta)) * kron(sz, id);
  h += (p.b * std::sin(p.theta)) * kron(id, sz);
  h += p.dz * (xy - yx);
  h += p.gz * (xy + yx);
  return h;
}

std::optional<ModelClass> classify_model(const ModelParams& p) {
  const double g = p.gamma, d = p.delta;
  if (near(std::abs(g), 1.0) && near(d, 0.0)) return ModelClass::Ising;
  if (near(g, 0.0)) {
    if (near(d, 0.0)) return ModelClass::XX;
    if (near(d, p.j)) return ModelClass::XXX;
    return ModelClass::XXZ;
  }
  if (g > 0.0 && g < 1.0) return near(d, 0.0) ? ModelClass::XY : ModelClass::XYZ;
  return std::nullopt;
}

}  // namespace qbsim
