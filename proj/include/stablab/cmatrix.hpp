#pragma once

#include <complex>
#include <vector>

namespace stablab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for desk-scale n.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}
  CMatrix(std::size_t n, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<Complex>& d);

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<Complex>& entries() const noexcept { return a_; }

  CMatrix adjoint() const;
  double frobenius_norm() const;
  double max_abs() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, const CMatrix& a);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

struct JacobiOptions {
  double tolerance = 1e-12;  // off-diagonal Frobenius mass relative to ||H||_F
  int max_sweeps = 100;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted nonincreasing. Only the lower-left/upper-right consistency of the
/// input is assumed, not checked. Throws NumericError on non-convergence.
std::vector<double> hermitian_eigenvalues(CMatrix h, const JacobiOptions& opts = {});

/// Square roots of the eigenvalues of M*M, sorted nonincreasing. Eigenvalues
/// in [-1e-12, 0) are clamped to zero.
std::vector<double> singular_values(const CMatrix& m, const JacobiOptions& opts = {});

}  // namespace stablab
