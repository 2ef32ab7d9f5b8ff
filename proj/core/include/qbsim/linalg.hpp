#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbsim {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  // Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const double> values);
  // |v><v|
  static ComplexMatrix projector(std::span<const cplx> v);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
// max elementwise |H - H^dagger|
double hermiticity_defect(const ComplexMatrix& h);
bool is_hermitian(const ComplexMatrix& h, double tol);

// Eigenpairs of a Hermitian operator, eigenvalues ascending.
// Column k of `vectors` is the eigenvector for eigenvalue k. Each vector is
// phase-normalized so its first nonzero component is real and positive.
// Inside a group of tied eigenvalues the vectors are ordered by descending
// lexicographic comparison of their (real, imag) components, so a degenerate
// diagonal input returns unit vectors in natural basis order.
struct Spectrum {
  std::vector<double> values;
  ComplexMatrix vectors;

  std::size_t size() const noexcept { return values.size(); }
  std::vector<cplx> vector(std::size_t k) const;
};

Spectrum hermitian_eig(const ComplexMatrix& h);

// V diag(f(nu)) V^dagger
ComplexMatrix reconstruct(const Spectrum& s, std::span<const cplx> diag);

// exp(c * H) for Hermitian H and complex scalar c.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, cplx c);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr[A B] = sum_ij A_ij B_ji
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// <u|A|v>
cplx sandwich(std::span<const cplx> u, const ComplexMatrix& a, std::span<const cplx> v);

}  // namespace qbsim
