#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qbsim/linalg.hpp"

namespace qbsim {

enum class ChargeAxis { X, Y };

// Prefactor on the J exchange term of the two-spin Hamiltonian.
//   Unscaled:         J[(1+g) sx sx + (1-g) sy sy]; the convention under which
//                     the closed-form thermal state, ergotropy and capacity hold.
//   QuarterAsPrinted: (J/4)[...], the literal typeset prefactor.
enum class ExchangeScale { Unscaled, QuarterAsPrinted };

enum class PauliAxis { X, Y, Z };

enum class ModelClass { Ising, XX, XXZ, XXX, XY, XYZ };

struct ModelParams {
  double j = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  double dz = 0.0;
  double gz = 0.0;
  double b = 1.0;
  double theta = 0.0;
  double temperature = 0.1;
  double omega = 1.0;
  ChargeAxis axis = ChargeAxis::Y;
  ExchangeScale exchange = ExchangeScale::Unscaled;

  // Throws InvalidParams naming the first offending field.
  void validate() const;
};

std::string_view to_string(ChargeAxis axis);
std::string_view to_string(ExchangeScale scale);
std::string_view to_string(ModelClass cls);
std::optional<ChargeAxis> parse_charge_axis(std::string_view s);
std::optional<ExchangeScale> parse_exchange_scale(std::string_view s);

ComplexMatrix pauli(PauliAxis k);

// Operator `op` acting on site `site` (0-based) of an n-site chain.
ComplexMatrix embed_site(const ComplexMatrix& op, std::size_t site, std::size_t n);

struct ChainOptions {
  double exchange_prefactor = 0.25;  // on the J terms
  double coupling_prefactor = 0.25;  // on the Delta, Dz and Gz terms
  // z-field per site; empty means B cos(theta) on odd sites, B sin(theta) on even (1-based)
  std::vector<double> site_fields;
};

// Nearest-neighbour open chain plus the pairwise Zeeman sum, which counts
// every interior site twice.
ComplexMatrix build_chain_hamiltonian(const ModelParams& p, std::size_t n,
                                      const ChainOptions& opts = {});

// Two-spin battery Hamiltonian in the basis (|00>, |01>, |10>, |11>).
ComplexMatrix build_qb_hamiltonian(const ModelParams& p);

double exchange_prefactor(ExchangeScale scale);

// nullopt when (gamma, delta) falls outside every row of the model table.
std::optional<ModelClass> classify_model(const ModelParams& p);

}  // namespace qbsim
