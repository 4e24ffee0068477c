#include "stablab/cmatrix.hpp"

#include <cmath>

#include "stablab/errors.hpp"

namespace stablab {

CMatrix::CMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw MismatchError("matrix entry count is not n*n");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw MismatchError("matrix sizes differ");
  const std::size_t n = a.n_;
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw MismatchError("matrix sizes differ");
  CMatrix out(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw MismatchError("matrix sizes differ");
  CMatrix out(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
  return out;
}

}  // namespace stablab
