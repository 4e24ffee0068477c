#include "stablab/unitary.hpp"

#include <cmath>

#include "stablab/errors.hpp"

namespace stablab {

double unitarity_error(const CMatrix& a) {
  return (a.adjoint() * a - CMatrix::identity(a.size())).max_abs();
}

UnitaryMatrix::UnitaryMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.size() == 0) throw MismatchError("unitary matrix must have degree >= 1");
  if (unitarity_error(m_) > kUnitarityTolerance)
    throw MismatchError("matrix is not unitary within 1e-10");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n) {
  return UnitaryMatrix(Trusted{}, CMatrix::identity(n));
}

UnitaryMatrix UnitaryMatrix::from_permutation(const Permutation& p) {
  CMatrix m(p.degree());
  for (std::uint32_t j = 0; j < p.degree(); ++j) m(p(j), j) = 1.0;
  return UnitaryMatrix(Trusted{}, std::move(m));
}

UnitaryMatrix UnitaryMatrix::inverse() const { return UnitaryMatrix(Trusted{}, m_.adjoint()); }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.degree() != b.degree()) throw MismatchError("unitary degrees differ");
  return UnitaryMatrix(UnitaryMatrix::Trusted{}, a.m_ * b.m_);
}

namespace {
void require_same_degree(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.degree() != b.degree()) throw MismatchError("unitary degrees differ");
}
}  // namespace

double hs_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  require_same_degree(a, b);
  const CMatrix d = a.matrix() - b.matrix();
  return d.frobenius_norm() / std::sqrt(static_cast<double>(a.degree()));
}

double schatten_norm(const CMatrix& m, double p) {
  if (!(p >= 1.0)) throw PreconditionError("Schatten exponent must satisfy p >= 1");
  const auto sigma = singular_values(m);
  if (std::isinf(p)) return sigma.empty() ? 0.0 : sigma.front();
  double s = 0.0;
  for (double v : sigma) s += std::pow(v, p);
  return std::pow(s, 1.0 / p);
}

double schatten_distance(const UnitaryMatrix& a, const UnitaryMatrix& b, double p) {
  require_same_degree(a, b);
  return schatten_norm(a.matrix() - b.matrix(), p);
}

double operator_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  require_same_degree(a, b);
  return singular_values(a.matrix() - b.matrix()).front();
}

CMatrix exp_i_hermitian(const CMatrix& h, double t) {
  const std::size_t n = h.size();
  const CMatrix x = Complex(0.0, t) * h;
  const double norm = x.frobenius_norm();  // bounds the operator norm
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const CMatrix y = Complex(std::ldexp(1.0, -squarings), 0.0) * x;

  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k < 64; ++k) {
    term = Complex(1.0 / k, 0.0) * (term * y);
    result = result + term;
    if (term.frobenius_norm() < 1e-17) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace stablab
