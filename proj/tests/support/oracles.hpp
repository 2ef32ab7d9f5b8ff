#pragma once

// Independent reference implementations used only by tests. None of these
// call the library's eigensolver or exponential.

#include <complex>
#include <random>
#include <vector>

#include "qbsim/linalg.hpp"
#include "qbsim/spin_model.hpp"

namespace qbsim::oracle {

// Coefficients of det(x I - A), highest degree first, by Faddeev-LeVerrier.
std::vector<cplx> charpoly(const ComplexMatrix& a);

// All roots of a monic polynomial by Durand-Kerner iteration.
std::vector<cplx> poly_roots(const std::vector<cplx>& monic);

// Real parts of the characteristic-polynomial roots, ascending.
std::vector<double> eigenvalues(const ComplexMatrix& h);

// exp(c A) by scaling and squaring of a truncated Taylor series.
ComplexMatrix expm_taylor(const ComplexMatrix& a, cplx c);

// sum_mu exp(-nu_mu / T) over the given eigenvalues.
double partition_sum(const std::vector<double>& nu, double temperature);

// exp(-H/T) / Tr via the Taylor exponential.
ComplexMatrix gibbs_taylor(const ComplexMatrix& h, double temperature);

// Tr[rho H] minus the passive energy sum_k r_k(desc) nu_k(asc), from eigenvalues only.
double ergotropy_passive(const ComplexMatrix& rho, const ComplexMatrix& h);

// Random parameter point with theta in [0, pi/2], T in [t_lo, t_hi].
ModelParams random_params(std::mt19937_64& rng, double t_lo = 0.05, double t_hi = 2.0);

}  // namespace qbsim::oracle
