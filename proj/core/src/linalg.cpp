#include "qbsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qbsim/constants.hpp"
#include "qbsim/error.hpp"

namespace qbsim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionGuard: return "DimensionGuard";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::PreconditionB: return "PreconditionB";
    case ErrorCode::RegimeError: return "RegimeError";
    case ErrorCode::NotDefined: return "NotDefined";
    case ErrorCode::NoThreshold: return "NoThreshold";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": " + std::to_string(a.dim()) +
                                                  " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count is not dim^2");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const cplx> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& h) {
  double m = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i; j < h.dim(); ++j) m = std::max(m, std::abs(h(i, j) - std::conj(h(j, i))));
  return m;
}

bool is_hermitian(const ComplexMatrix& h, double tol) { return hermiticity_defect(h) <= tol; }

std::vector<cplx> Spectrum::vector(std::size_t k) const {
  std::vector<cplx> v(vectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
  return v;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is the
// product of a phase change on column q (making a(p, q) real) and a real
// Givens rotation; it is applied as A <- J^dagger A J and V <- V J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // J restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
  const cplx jpp = c;
  const cplx jpq = s;
  const cplx jqp = -s * std::conj(phase);
  const cplx jqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

// True if u sorts before w: descending lexicographic on (re, im).
bool lex_before(std::span<const cplx> u, std::span<const cplx> w) {
  constexpr double eps = tol::kPhaseNormalize;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i].real() - w[i].real()) > eps) return u[i].real() > w[i].real();
    if (std::abs(u[i].imag() - w[i].imag()) > eps) return u[i].imag() > w[i].imag();
  }
  return false;
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& h) {
  const double defect = hermiticity_defect(h);
  if (defect > tol::kHermitian) {
    throw Error(ErrorCode::NonHermitian, "max |H - H^dagger| = " + std::to_string(defect));
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  // symmetrize so rounding in the input cannot leak into the rotation
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, frobenius_norm(a));
  const double target = tol::kJacobiOffDiagonal * scale;

  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::ConvergenceFailure,
                "Jacobi did not converge in " + std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
  }

  // phase-normalize: first nonzero component real positive
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, k));
      if (mag > tol::kPhaseNormalize) {
        const cplx ph = std::conj(v(i, k)) / mag;
        for (std::size_t r = 0; r < n; ++r) v(r, k) *= ph;
        v(i, k) = mag;
        break;
      }
    }
  }

  std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) cols[k][i] = v(i, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k) vals[k] = a(k, k).real();
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return vals[x] < vals[y] || (vals[x] == vals[y] && x < y); });

  // reorder tie groups deterministically
  const double tie = tol::kEigenTie * (1.0 + frobenius_norm(h));
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && vals[order[end]] - vals[order[end - 1]] <= tie) ++end;
    if (end - start > 1) {
      std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                       order.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](std::size_t x, std::size_t y) { return lex_before(cols[x], cols[y]); });
    }
    start = end;
  }

  // values stay ascending; only the vectors move inside a tie group
  std::vector<double> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = vals[order[k]];
  std::sort(sorted.begin(), sorted.end());

  Spectrum out;
  out.values = std::move(sorted);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = cols[order[k]][i];
  }
  return out;
}

ComplexMatrix reconstruct(const Spectrum& s, std::span<const cplx> diag) {
  const std::size_t n = s.size();
  if (diag.size() != n) throw Error(ErrorCode::DimensionMismatch, "reconstruct: diagonal length");
  ComplexMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (diag[k] == cplx{}) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = s.vectors(i, k) * diag[k];
      for (std::size_t j = 0; j < n; ++j) m(i, j) += vik * std::conj(s.vectors(j, k));
    }
  }
  return m;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, cplx c) {
  const Spectrum s = hermitian_eig(h);
  std::vector<cplx> d(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) d[k] = std::exp(c * s.values[k]);
  return reconstruct(s, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return m;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_product");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t;
}

cplx sandwich(std::span<const cplx> u, const ComplexMatrix& a, std::span<const cplx> v) {
  if (u.size() != a.dim() || v.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "sandwich");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) row += a(i, j) * v[j];
    s += std::conj(u[i]) * row;
  }
  return s;
}

}  // namespace qbsim
